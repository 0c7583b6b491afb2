#pragma once

#include <cstdint>

namespace covera {

// (v,k,lambda) together with the two decompositions of lambda*(v-1):
//   covering:  lambda*(v-1) = r_cov*(k-1) - d_cov,  0 <= d_cov < k-1
//   packing:   lambda*(v-1) = r_pack*(k-1) + d_pack, 0 <= d_pack < k-1
// and n = r - lambda on each side.
struct ParamSet {
    std::int64_t v = 0;
    std::int64_t k = 0;
    std::int64_t lambda = 0;
    std::int64_t r_cov = 0;
    std::int64_t d_cov = 0;
    std::int64_t r_pack = 0;
    std::int64_t d_pack = 0;
    std::int64_t n_cov = 0;
    std::int64_t n_pack = 0;
};

// Throws TrivialParamsError unless 3 <= k < v and lambda >= 1.
ParamSet make_params(std::int64_t v, std::int64_t k, std::int64_t lambda);

}  // namespace covera
