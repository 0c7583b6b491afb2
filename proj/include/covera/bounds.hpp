#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covera/params.hpp"
#include "covera/surd.hpp"

namespace covera {

enum class Side { cover, pack };

struct SchonheimBound {
    Int value;       // ceil(v*r_cov/k)
    bool plus_one;   // lambda(v-1) = 0 mod (k-1) and lambda*v*(v-1) = 1 mod k
    Int refined() const { return plus_one ? Int(value + 1) : value; }
};
SchonheimBound schonheim(const ParamSet& p);

struct Johnson1Bound {
    Int value;       // floor(v*r_pack/k)
    bool minus_one;  // same congruence pair as the Schonheim refinement
    Int refined() const { return minus_one ? Int(value - 1) : value; }
};
Johnson1Bound johnson1(const ParamSet& p);

// floor(v(k-1)/(k^2-v)) when k^2 > v; absent otherwise. lambda = 1 only.
std::optional<Int> johnson2_weak(std::int64_t v, std::int64_t k);

// The implicit pair-counting bound. For a candidate block count b write the
// decomposition and test x(x-1)v + 2xy <= b(b-1); the result is the largest
// feasible b not exceeding the first Johnson bound. Two decompositions are
// supported: block_sum uses b*k = x*v + y (the classical pair count), and
// literal uses b = x*v + y as printed in some statements of the bound.
enum class Johnson2Form { block_sum, literal };
Int johnson2_strong(std::int64_t v, std::int64_t k, Johnson2Form form = Johnson2Form::block_sum);

// CB(alpha,beta) = (r*v*(alpha-beta) + alpha*v) / (k*(alpha-beta) + 1), r = r_cov.
// Requires alpha >= beta >= 0.
Surd cb_value(const ParamSet& p, const Surd& alpha, const Surd& beta);

// DB(alpha,beta) = (r*v*(alpha-beta) - alpha*v) / (k*(alpha-beta) - 1), r = r_pack.
// Requires alpha >= beta >= 0 and alpha > beta + 1/k.
Surd db_value(const ParamSet& p, const Surd& alpha, const Surd& beta);

// Covering lower bound ceil(v(r+1)/(k+1)) when d_cov < n_cov.
std::optional<Int> thm_1_1(const ParamSet& p);

// Packing upper bound floor(v(r-1)/(k-1)) when d_pack < n_pack.
std::optional<Int> thm_1_2(const ParamSet& p);

struct BoundPart {
    Surd exact;
    Int rounded;
};

// ceil CB((n+1)/(2d+2), (n+1)/(2(d+k))) when r_cov < k and d_cov >= n_cov.
std::optional<BoundPart> thm_5_3(const ParamSet& p);

struct BoundParts {
    std::optional<BoundPart> a;
    std::optional<BoundPart> b;
    std::optional<BoundPart> c;
};

// Packing bounds for r_pack < k and d_pack >= n_pack:
//   (a) floor DB((n+1)/(2d+2), 0)          if k(n+1) > 2d+2
//   (b) floor DB(n/(2d+2), n/(2(d+k)))     if n*k*(k-1) > 2(d+1)(d+k)
std::optional<BoundParts> thm_5_4(const ParamSet& p);

// Covering bounds for r_cov < k and d_cov < n_cov:
//   (a) ceil CB(1 - d^2/(2n(n+1)), (n+2)/(2(d+k)))
//   (b) ceil CB(1, 1 - d(d+k-1)/(n(n+1)))                      if d >= n/2 and d(d+k-1) < n(n+1)
//   (c) ceil CB(1, sqrt(d(n+2)/((n+1)(n-d))) - d(d+k)/(2(n+1)(n-d)))
//                                         if 1 <= d < n/2 and 4(n+1)(n+2)(n-d) > d(d+k)^2
std::optional<BoundParts> thm_6_2(const ParamSet& p);

// Packing mirror for r_pack < k and d_pack < n_pack, with floors:
//   (a) floor DB(1 - d^2/(2n(n-1)), n/(2(d+k)))
//   (b) floor DB(1, 1 - d(d+k-1)/(n(n-1)))                     if d >= n/2 and d(d+k-1) < n(n-1)
//   (c) floor DB(1, sqrt(dn/((n-1)(n-d))) - d(d+k)/(2(n-1)(n-d)))
//                                         if 1 <= d < n/2 and 4n(n-1)(n-d) > d(d+k)^2
std::optional<BoundParts> thm_6_3(const ParamSet& p);

enum class BoundId {
    schonheim,
    schonheim_plus1,
    johnson1,
    johnson1_minus1,
    johnson2_weak,
    johnson2_strong,
    thm_1_1,
    thm_1_2,
    thm_5_3,
    thm_5_4a,
    thm_5_4b,
    thm_6_2a,
    thm_6_2b,
    thm_6_2c,
    thm_6_3a,
    thm_6_3b,
    thm_6_3c,
};

const char* bound_name(BoundId id);

struct BoundEntry {
    BoundId id;
    bool applicable = false;
    std::optional<Surd> exact;   // pre-rounding value when applicable
    std::optional<Int> rounded;  // the integer bound when applicable
};

struct BoundReport {
    ParamSet params;
    Side side = Side::cover;
    std::vector<BoundEntry> entries;
    Int best;
    BoundId best_source = BoundId::schonheim;
    std::vector<std::string> notes;
};

// Evaluates every catalog bound on the requested side; best is the max of
// the applicable covering lower bounds or the min of the packing upper
// bounds, attributed to the first entry in catalog order achieving it.
BoundReport best_bounds(const ParamSet& p, Side side);

}  // namespace covera
