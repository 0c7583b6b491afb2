#include "covera/design.hpp"

#include <algorithm>
#include <set>

#include "covera/errors.hpp"

namespace covera {

Design make_design(int v, int k, int lambda, std::vector<std::vector<int>> blocks) {
    if (v < 1) throw InvalidArgument("design: v must be positive");
    if (k < 2 || k > v) throw InvalidArgument("design: block size must satisfy 2 <= k <= v");
    if (lambda < 1) throw InvalidArgument("design: lambda must be positive");
    for (auto& block : blocks) {
        if (int(block.size()) != k)
            throw InvalidArgument("design: block has " + std::to_string(block.size()) +
                                  " points, expected " + std::to_string(k));
        std::sort(block.begin(), block.end());
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] < 1 || block[i] > v)
                throw InvalidArgument("design: point " + std::to_string(block[i]) +
                                      " outside 1.." + std::to_string(v));
            if (i > 0 && block[i] == block[i - 1])
                throw InvalidArgument("design: repeated point " + std::to_string(block[i]) +
                                      " in block");
        }
    }
    std::sort(blocks.begin(), blocks.end());
    Design d;
    d.v = v;
    d.k = k;
    d.lambda = lambda;
    d.blocks = std::move(blocks);
    return d;
}

const char* kind_name(DesignKind kind) {
    switch (kind) {
        case DesignKind::neither: return "neither";
        case DesignKind::covering: return "covering";
        case DesignKind::packing: return "packing";
        case DesignKind::exact_design: return "exact-design";
    }
    return "?";
}

long long Multigraph::degree(int u) const {
    long long total = 0;
    for (int w = 1; w <= v; ++w) total += at(u, w);
    return total;
}

long long Multigraph::total_degree() const {
    long long total = 0;
    for (int u = 1; u <= v; ++u) total += degree(u);
    return total;
}

std::vector<long long> replication(const Design& d) {
    std::vector<long long> rep(d.v, 0);
    for (const auto& block : d.blocks)
        for (int p : block) ++rep[p - 1];
    return rep;
}

Multigraph pair_counts(const Design& d) {
    Multigraph g(d.v);
    for (const auto& block : d.blocks)
        for (std::size_t i = 0; i < block.size(); ++i)
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                ++g.at(block[i], block[j]);
                ++g.at(block[j], block[i]);
            }
    return g;
}

Classification classify(const Design& d) {
    Multigraph counts = pair_counts(d);
    Classification c;
    if (d.v < 2) {
        c.kind = DesignKind::exact_design;
        return c;
    }
    long long mn = counts.at(1, 2), mx = mn;
    for (int u = 1; u <= d.v; ++u)
        for (int w = u + 1; w <= d.v; ++w) {
            long long m = counts.at(u, w);
            mn = std::min(mn, m);
            mx = std::max(mx, m);
        }
    c.min_pair = int(mn);
    c.max_pair = int(mx);
    bool covering = mn >= d.lambda;
    bool packing = mx <= d.lambda;
    if (covering && packing)
        c.kind = DesignKind::exact_design;
    else if (covering)
        c.kind = DesignKind::covering;
    else if (packing)
        c.kind = DesignKind::packing;
    else
        c.kind = DesignKind::neither;
    return c;
}

Multigraph excess_or_leave(const Design& d) {
    Classification c = classify(d);
    if (c.kind == DesignKind::neither)
        throw InvalidArgument("excess_or_leave: design is neither a covering nor a packing");
    Multigraph counts = pair_counts(d);
    Multigraph g(d.v);
    for (int u = 1; u <= d.v; ++u)
        for (int w = u + 1; w <= d.v; ++w) {
            long long m = counts.at(u, w) - d.lambda;
            g.set(u, w, m < 0 ? -m : m);
        }
    return g;
}

Bookkeeping bookkeeping(const Design& d) {
    Classification c = classify(d);
    if (c.kind == DesignKind::neither)
        throw InvalidArgument("bookkeeping: design is neither a covering nor a packing");
    bool covering = c.is_covering();  // exact designs use the covering convention

    Bookkeeping bk;
    bk.kind = covering ? DesignKind::covering : DesignKind::packing;
    bk.b = (long long)d.b();

    long long target = (long long)d.lambda * (d.v - 1);
    long long km1 = d.k - 1;
    if (covering) {
        bk.r = (target + km1 - 1) / km1;
        bk.d = bk.r * km1 - target;
        bk.a = bk.b * d.k - bk.r * d.v;
    } else {
        bk.r = target / km1;
        bk.d = target - bk.r * km1;
        bk.a = bk.r * d.v - bk.b * d.k;
    }

    Multigraph g = excess_or_leave(d);
    std::vector<long long> rep = replication(d);
    bk.level.assign(d.v, 0);
    long long total = 0;
    int max_level = 0;
    for (int u = 1; u <= d.v; ++u) {
        long long deg = g.degree(u);
        total += deg;
        long long rem = deg - bk.d;
        if (rem < 0 || rem % km1 != 0)
            throw InternalError("bookkeeping: degree " + std::to_string(deg) +
                                " of point " + std::to_string(u) + " is not d + i(k-1)");
        long long i = rem / km1;
        long long expected = covering ? bk.r + i : bk.r - i;
        if (rep[u - 1] != expected)
            throw InternalError("bookkeeping: replication of point " + std::to_string(u) +
                                " is " + std::to_string(rep[u - 1]) + ", expected " +
                                std::to_string(expected));
        bk.level[u - 1] = int(i);
        max_level = std::max(max_level, int(i));
    }
    if (total != bk.d * d.v + bk.a * km1)
        throw InternalError("bookkeeping: total degree " + std::to_string(total) +
                            " != d*v + a*(k-1)");
    bk.classes.assign(max_level + 1, {});
    for (int u = 1; u <= d.v; ++u) bk.classes[bk.level[u - 1]].push_back(u);
    long long outside_v0 = d.v - (long long)bk.classes[0].size();
    if (outside_v0 > bk.a)
        throw InternalError("bookkeeping: |V \\ V_0| exceeds a");
    return bk;
}

bool certificate_check(const Design& d, const std::vector<int>& subset,
                       const std::vector<Rat>& weights) {
    if (subset.size() != weights.size())
        throw InvalidArgument("certificate_check: |weights| != |S|");
    std::set<int> seen;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        int u = subset[i];
        if (u < 1 || u > d.v)
            throw InvalidArgument("certificate_check: point " + std::to_string(u) + " outside 1..v");
        if (!seen.insert(u).second)
            throw InvalidArgument("certificate_check: repeated point in S");
        if (weights[i] <= 0) throw InvalidArgument("certificate_check: weights must be positive");
    }
    if (subset.empty()) return true;

    Multigraph g = excess_or_leave(d);
    std::vector<long long> rep = replication(d);
    for (std::size_t i = 0; i < subset.size(); ++i) {
        int u = subset[i];
        Rat lhs = 0;
        for (std::size_t j = 0; j < subset.size(); ++j) {
            if (i == j) continue;
            lhs += weights[j] * Rat(g.at(u, subset[j]));
        }
        Rat rhs = weights[i] * Rat(rep[u - 1] - d.lambda);
        if (!(lhs < rhs)) return false;
    }
    if (d.b() < subset.size())
        throw SoundnessViolation("certificate premise holds but design has " +
                                 std::to_string(d.b()) + " blocks < |S| = " +
                                 std::to_string(subset.size()));
    return true;
}

}  // namespace covera
