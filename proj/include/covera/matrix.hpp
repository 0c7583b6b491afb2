#pragma once

#include <vector>

#include "covera/arith.hpp"
#include "covera/design.hpp"

namespace covera {

struct RatMatrix {
    int n = 0;
    std::vector<Rat> e;

    explicit RatMatrix(int size = 0) : n(size), e(std::size_t(size) * size, Rat(0)) {}
    Rat& at(int i, int j) { return e[std::size_t(i) * n + j]; }
    const Rat& at(int i, int j) const { return e[std::size_t(i) * n + j]; }
    bool symmetric() const;
};

// M*(D) = X X^T, also built as R +/- A(G) + lambda*J; the two constructions
// are compared entrywise and a mismatch raises InternalError.
RatMatrix gram(const Design& d);

// Exact rank by fraction-free (Bareiss) elimination after clearing
// denominators; pivot is the first nonzero entry in the current column.
int rank_exact(const RatMatrix& m);

// rank(M*(D)); every covering or packing has at least this many blocks.
long long bose_lower(const Design& d);

// Weighted diagonal dominance: sum_{w != u} c_w |a_uw| < c_u a_uu for all u.
// Implies positive definiteness for symmetric matrices.
bool dominance_pd(const RatMatrix& m, const std::vector<Rat>& c);

// Sylvester's criterion: every leading principal minor is positive.
bool sylvester_pd(const RatMatrix& m);

}  // namespace covera
