#include "covera/params.hpp"

#include <string>

#include "covera/errors.hpp"

namespace covera {

ParamSet make_params(std::int64_t v, std::int64_t k, std::int64_t lambda) {
    if (lambda < 1)
        throw TrivialParamsError("lambda must be at least 1, got " + std::to_string(lambda));
    if (k < 3 || k >= v)
        throw TrivialParamsError("parameters require 3 <= k < v, got k=" + std::to_string(k) +
                                 ", v=" + std::to_string(v));
    ParamSet p;
    p.v = v;
    p.k = k;
    p.lambda = lambda;
    std::int64_t target = lambda * (v - 1);
    p.r_pack = target / (k - 1);
    p.d_pack = target - p.r_pack * (k - 1);
    if (p.d_pack == 0) {
        p.r_cov = p.r_pack;
        p.d_cov = 0;
    } else {
        p.r_cov = p.r_pack + 1;
        p.d_cov = p.r_cov * (k - 1) - target;
    }
    p.n_cov = p.r_cov - lambda;
    p.n_pack = p.r_pack - lambda;
    return p;
}

}  // namespace covera
