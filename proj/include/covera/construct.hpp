#pragma once

#include <cstdint>

#include "covera/arith.hpp"
#include "covera/design.hpp"

namespace covera {

// AG(2,q): points GF(q)^2 numbered 1 + x*q + y, lines y = ax+b plus
// verticals x = c. A (q^2, q, 1)-design with q^2+q blocks.
Design affine_plane(int q);

// Point inflation of the affine plane by [s]: an (s*q^2, s*q, 1)-covering
// with q^2+q blocks. Point (u, i) is numbered (u-1)*s + i.
Design blowup(int q, int s);

// Monotone reduction of a lambda=1 covering to fewer points: every removed
// point is replaced, block by block, with the smallest retained point not
// already present. Block count is preserved.
Design restrict_covering(const Design& d, int v_target);

// The interval of v for which the q^2+q covering built from the affine
// plane is optimal: all integers with s*q^2 - q + 1 - z < v <= s*q^2,
//   z = min(q-1, (q(s-2q-1)+2)/(q+1))        for 2q+1 <= s <= 4q+1,
//   z = (q^2(s-q-2) - q + 2)/(3q^2+3q-2)     for s >= 4q+2.
struct ExactRange {
    std::int64_t q = 0;
    std::int64_t s = 0;
    Rat z;
    std::int64_t v_lo = 0;
    std::int64_t v_hi = 0;
};
ExactRange exact_range(std::int64_t q, std::int64_t s);

}  // namespace covera
