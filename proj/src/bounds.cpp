#include "covera/bounds.hpp"

#include <algorithm>

#include "covera/errors.hpp"

namespace covera {

namespace {

bool refinement_congruences(const ParamSet& p) {
    Int target = Int(p.lambda) * (p.v - 1);
    Int pairs = Int(p.lambda) * p.v * (p.v - 1);
    return target % (p.k - 1) == 0 && pairs % p.k == 1;
}

Rat rat(std::int64_t n, std::int64_t d = 1) {
    return Rat(Int(n), Int(d));
}

}  // namespace

SchonheimBound schonheim(const ParamSet& p) {
    SchonheimBound b;
    b.value = ceil_rat(rat(p.v * p.r_cov, p.k));
    b.plus_one = refinement_congruences(p);
    return b;
}

Johnson1Bound johnson1(const ParamSet& p) {
    Johnson1Bound b;
    b.value = floor_rat(rat(p.v * p.r_pack, p.k));
    b.minus_one = refinement_congruences(p);
    return b;
}

std::optional<Int> johnson2_weak(std::int64_t v, std::int64_t k) {
    if (k * k <= v) return std::nullopt;
    return floor_rat(rat(v * (k - 1), k * k - v));
}

Int johnson2_strong(std::int64_t v, std::int64_t k, Johnson2Form form) {
    ParamSet p = make_params(v, k, 1);
    Int cap = johnson1(p).value;
    // Any packing with b blocks satisfies the inequality for its own b, so
    // the largest feasible b below a valid upper bound is itself valid.
    for (Int b = cap; b > 0; --b) {
        Int lhs = (form == Johnson2Form::block_sum) ? b * k : b;
        Int x = lhs / v;
        Int y = lhs - x * v;
        if (x * (x - 1) * v + 2 * x * y <= b * (b - 1)) return b;
    }
    return 0;
}

Surd cb_value(const ParamSet& p, const Surd& alpha, const Surd& beta) {
    if (beta.sign() < 0 || alpha.compare(beta) < 0)
        throw InvalidArgument("cb_value: requires alpha >= beta >= 0");
    Surd gamma = alpha - beta;
    Surd num = Surd(rat(p.r_cov * p.v)) * gamma + alpha * Surd(rat(p.v));
    Surd den = Surd(rat(p.k)) * gamma + Surd(1);
    return num / den;
}

Surd db_value(const ParamSet& p, const Surd& alpha, const Surd& beta) {
    if (beta.sign() < 0 || alpha.compare(beta) < 0)
        throw InvalidArgument("db_value: requires alpha >= beta >= 0");
    Surd gamma = alpha - beta;
    if ((gamma - Surd(rat(1, p.k))).sign() <= 0)
        throw InvalidArgument("db_value: requires alpha > beta + 1/k");
    Surd num = Surd(rat(p.r_pack * p.v)) * gamma - alpha * Surd(rat(p.v));
    Surd den = Surd(rat(p.k)) * gamma - Surd(1);
    return num / den;
}

std::optional<Int> thm_1_1(const ParamSet& p) {
    if (p.d_cov >= p.n_cov) return std::nullopt;
    return ceil_rat(rat(p.v * (p.r_cov + 1), p.k + 1));
}

std::optional<Int> thm_1_2(const ParamSet& p) {
    if (p.d_pack >= p.n_pack) return std::nullopt;
    return floor_rat(rat(p.v * (p.r_pack - 1), p.k - 1));
}

std::optional<BoundPart> thm_5_3(const ParamSet& p) {
    if (p.r_cov >= p.k || p.d_cov < p.n_cov) return std::nullopt;
    std::int64_t n = p.n_cov, d = p.d_cov;
    Surd value = cb_value(p, Surd(rat(n + 1, 2 * d + 2)), Surd(rat(n + 1, 2 * (d + p.k))));
    return BoundPart{value, value.ceil_int()};
}

std::optional<BoundParts> thm_5_4(const ParamSet& p) {
    if (p.r_pack >= p.k || p.d_pack < p.n_pack) return std::nullopt;
    std::int64_t n = p.n_pack, d = p.d_pack, k = p.k;
    BoundParts parts;
    if (k * (n + 1) > 2 * d + 2) {
        Surd value = db_value(p, Surd(rat(n + 1, 2 * d + 2)), Surd(0));
        parts.a = BoundPart{value, value.floor_int()};
    }
    if (n * k * (k - 1) > 2 * (d + 1) * (d + k)) {
        Surd value = db_value(p, Surd(rat(n, 2 * d + 2)), Surd(rat(n, 2 * (d + k))));
        parts.b = BoundPart{value, value.floor_int()};
    }
    return parts;
}

std::optional<BoundParts> thm_6_2(const ParamSet& p) {
    if (p.r_cov >= p.k || p.d_cov >= p.n_cov) return std::nullopt;
    std::int64_t n = p.n_cov, d = p.d_cov, k = p.k;
    BoundParts parts;
    {
        Rat alpha = Rat(1) - rat(d * d, 2 * n * (n + 1));
        Surd value = cb_value(p, Surd(alpha), Surd(rat(n + 2, 2 * (d + k))));
        parts.a = BoundPart{value, value.ceil_int()};
    }
    if (2 * d >= n && d * (d + k - 1) < n * (n + 1)) {
        Rat beta = Rat(1) - rat(d * (d + k - 1), n * (n + 1));
        Surd value = cb_value(p, Surd(1), Surd(beta));
        parts.b = BoundPart{value, value.ceil_int()};
    }
    // d = 0 makes the surd term vanish and beta nonpositive; part (a)
    // covers that case.
    if (d >= 1 && 2 * d < n && 4 * (n + 1) * (n + 2) * (n - d) > d * (d + k) * (d + k)) {
        Surd beta = Surd::sqrt_rational(rat(d * (n + 2), (n + 1) * (n - d))) -
                    Surd(rat(d * (d + k), 2 * (n + 1) * (n - d)));
        Surd value = cb_value(p, Surd(1), beta);
        parts.c = BoundPart{value, value.ceil_int()};
    }
    return parts;
}

std::optional<BoundParts> thm_6_3(const ParamSet& p) {
    if (p.r_pack >= p.k || p.d_pack >= p.n_pack) return std::nullopt;
    std::int64_t n = p.n_pack, d = p.d_pack, k = p.k;
    BoundParts parts;
    {
        // The d^2 term vanishes when d = 0; that also covers n = 1 where the
        // denominator would be zero.
        Rat alpha = (d == 0) ? Rat(1) : Rat(1) - rat(d * d, 2 * n * (n - 1));
        Surd value = db_value(p, Surd(alpha), Surd(rat(n, 2 * (d + k))));
        parts.a = BoundPart{value, value.floor_int()};
    }
    if (2 * d >= n && d * (d + k - 1) < n * (n - 1)) {
        Rat beta = Rat(1) - rat(d * (d + k - 1), n * (n - 1));
        Surd value = db_value(p, Surd(1), Surd(beta));
        parts.b = BoundPart{value, value.floor_int()};
    }
    if (d >= 1 && 2 * d < n && 4 * n * (n - 1) * (n - d) > d * (d + k) * (d + k)) {
        Surd beta = Surd::sqrt_rational(rat(d * n, (n - 1) * (n - d))) -
                    Surd(rat(d * (d + k), 2 * (n - 1) * (n - d)));
        Surd value = db_value(p, Surd(1), beta);
        parts.c = BoundPart{value, value.floor_int()};
    }
    return parts;
}

const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::schonheim: return "schonheim";
        case BoundId::schonheim_plus1: return "schonheim_plus1";
        case BoundId::johnson1: return "johnson1";
        case BoundId::johnson1_minus1: return "johnson1_minus1";
        case BoundId::johnson2_weak: return "johnson2_weak";
        case BoundId::johnson2_strong: return "johnson2_strong";
        case BoundId::thm_1_1: return "thm_1_1";
        case BoundId::thm_1_2: return "thm_1_2";
        case BoundId::thm_5_3: return "thm_5_3";
        case BoundId::thm_5_4a: return "thm_5_4a";
        case BoundId::thm_5_4b: return "thm_5_4b";
        case BoundId::thm_6_2a: return "thm_6_2a";
        case BoundId::thm_6_2b: return "thm_6_2b";
        case BoundId::thm_6_2c: return "thm_6_2c";
        case BoundId::thm_6_3a: return "thm_6_3a";
        case BoundId::thm_6_3b: return "thm_6_3b";
        case BoundId::thm_6_3c: return "thm_6_3c";
    }
    return "?";
}

namespace {

BoundEntry entry_absent(BoundId id) {
    return BoundEntry{id, false, std::nullopt, std::nullopt};
}

BoundEntry entry_value(BoundId id, Surd exact, Int rounded) {
    return BoundEntry{id, true, std::move(exact), std::move(rounded)};
}

BoundEntry entry_part(BoundId id, const std::optional<BoundPart>& part) {
    if (!part) return entry_absent(id);
    return entry_value(id, part->exact, part->rounded);
}

}  // namespace

BoundReport best_bounds(const ParamSet& p, Side side) {
    BoundReport rep;
    rep.params = p;
    rep.side = side;

    if (side == Side::cover) {
        auto sch = schonheim(p);
        rep.entries.push_back(entry_value(BoundId::schonheim, Surd(rat(p.v * p.r_cov, p.k)), sch.value));
        if (sch.plus_one)
            rep.entries.push_back(entry_value(BoundId::schonheim_plus1, Surd(sch.refined()), sch.refined()));
        else
            rep.entries.push_back(entry_absent(BoundId::schonheim_plus1));

        if (auto t = thm_1_1(p))
            rep.entries.push_back(entry_value(BoundId::thm_1_1, Surd(rat(p.v * (p.r_cov + 1), p.k + 1)), *t));
        else
            rep.entries.push_back(entry_absent(BoundId::thm_1_1));

        rep.entries.push_back(entry_part(BoundId::thm_5_3, thm_5_3(p)));

        auto parts = thm_6_2(p);
        rep.entries.push_back(entry_part(BoundId::thm_6_2a, parts ? parts->a : std::nullopt));
        rep.entries.push_back(entry_part(BoundId::thm_6_2b, parts ? parts->b : std::nullopt));
        rep.entries.push_back(entry_part(BoundId::thm_6_2c, parts ? parts->c : std::nullopt));

        if (rep.entries[2].applicable && rep.entries[3].applicable)
            throw InternalError("thm_1_1 and thm_5_3 cannot both apply");
    } else {
        auto joh = johnson1(p);
        rep.entries.push_back(entry_value(BoundId::johnson1, Surd(rat(p.v * p.r_pack, p.k)), joh.value));
        if (joh.minus_one)
            rep.entries.push_back(entry_value(BoundId::johnson1_minus1, Surd(joh.refined()), joh.refined()));
        else
            rep.entries.push_back(entry_absent(BoundId::johnson1_minus1));

        if (p.lambda == 1) {
            if (auto w = johnson2_weak(p.v, p.k))
                rep.entries.push_back(entry_value(BoundId::johnson2_weak, Surd(rat(p.v * (p.k - 1), p.k * p.k - p.v)), *w));
            else
                rep.entries.push_back(entry_absent(BoundId::johnson2_weak));
            Int strong = johnson2_strong(p.v, p.k);
            rep.entries.push_back(entry_value(BoundId::johnson2_strong, Surd(strong), strong));
            Int literal = johnson2_strong(p.v, p.k, Johnson2Form::literal);
            if (literal != strong)
                rep.notes.push_back("johnson2_strong: literal decomposition b=xv+y gives " + literal.str() +
                                    "; reported value uses bk=xv+y");
        } else {
            rep.entries.push_back(entry_absent(BoundId::johnson2_weak));
            rep.entries.push_back(entry_absent(BoundId::johnson2_strong));
        }

        if (auto t = thm_1_2(p))
            rep.entries.push_back(entry_value(BoundId::thm_1_2, Surd(rat(p.v * (p.r_pack - 1), p.k - 1)), *t));
        else
            rep.entries.push_back(entry_absent(BoundId::thm_1_2));

        auto parts54 = thm_5_4(p);
        rep.entries.push_back(entry_part(BoundId::thm_5_4a, parts54 ? parts54->a : std::nullopt));
        rep.entries.push_back(entry_part(BoundId::thm_5_4b, parts54 ? parts54->b : std::nullopt));

        auto parts63 = thm_6_3(p);
        rep.entries.push_back(entry_part(BoundId::thm_6_3a, parts63 ? parts63->a : std::nullopt));
        rep.entries.push_back(entry_part(BoundId::thm_6_3b, parts63 ? parts63->b : std::nullopt));
        rep.entries.push_back(entry_part(BoundId::thm_6_3c, parts63 ? parts63->c : std::nullopt));

        bool t12 = rep.entries[4].applicable;
        bool t54 = rep.entries[5].applicable || rep.entries[6].applicable;
        if (t12 && t54) throw InternalError("thm_1_2 and thm_5_4 cannot both apply");
    }

    bool first = true;
    for (const auto& e : rep.entries) {
        if (!e.applicable) continue;
        bool better = first || (side == Side::cover ? *e.rounded > rep.best : *e.rounded < rep.best);
        if (better) {
            rep.best = *e.rounded;
            rep.best_source = e.id;
        }
        first = false;
    }
    if (first) throw InternalError("no applicable bound");
    return rep;
}

}  // namespace covera
