#include <doctest.h>

#include <random>

#include "covera/design.hpp"
#include "covera/errors.hpp"
#include "covera/matrix.hpp"

using namespace covera;

namespace {

Design fano() {
    return make_design(7, 3, 1,
                       {{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {1, 5, 6}, {2, 6, 7}, {1, 3, 7}});
}

// Deterministic covering/packing generator for fuzz suites.
Design random_cov_or_pack(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick_v(4, 10);
    int v = pick_v(rng);
    std::uniform_int_distribution<int> pick_k(2, std::min(5, v - 1));
    int k = pick_k(rng);
    std::uniform_int_distribution<int> pick_lambda(1, 2);
    int lambda = pick_lambda(rng);
    std::uniform_int_distribution<int> pick_b(0, 8);
    std::uniform_int_distribution<int> pick_point(1, v);

    std::vector<std::vector<int>> blocks;
    int b = pick_b(rng);
    for (int i = 0; i < b; ++i) {
        std::vector<int> block;
        while (int(block.size()) < k) {
            int p = pick_point(rng);
            if (std::find(block.begin(), block.end(), p) == block.end()) block.push_back(p);
        }
        blocks.push_back(block);
    }
    Design d = make_design(v, k, lambda, blocks);
    Classification c = classify(d);
    if (c.kind != DesignKind::neither) return d;

    if (rng() % 2 == 0) {
        // Grow into a covering: repeatedly add a block through a deficient pair.
        for (;;) {
            Multigraph counts = pair_counts(d);
            int p = 0, q = 0;
            for (int u = 1; u <= v && p == 0; ++u)
                for (int w = u + 1; w <= v; ++w)
                    if (counts.at(u, w) < lambda) {
                        p = u;
                        q = w;
                        break;
                    }
            if (p == 0) break;
            std::vector<int> block{p, q};
            while (int(block.size()) < k) {
                int x = pick_point(rng);
                if (std::find(block.begin(), block.end(), x) == block.end()) block.push_back(x);
            }
            d.blocks.push_back(block);
            d = make_design(v, k, lambda, d.blocks);
        }
        return d;
    }
    // Shrink into a packing: drop blocks while some pair is overfull.
    for (;;) {
        Multigraph counts = pair_counts(d);
        int p = 0, q = 0;
        for (int u = 1; u <= v && p == 0; ++u)
            for (int w = u + 1; w <= v; ++w)
                if (counts.at(u, w) > lambda) {
                    p = u;
                    q = w;
                    break;
                }
        if (p == 0) break;
        for (std::size_t i = 0; i < d.blocks.size(); ++i) {
            const auto& block = d.blocks[i];
            if (std::find(block.begin(), block.end(), p) != block.end() &&
                std::find(block.begin(), block.end(), q) != block.end()) {
                d.blocks.erase(d.blocks.begin() + i);
                break;
            }
        }
    }
    return d;
}

}  // namespace

TEST_CASE("design canonicalisation and validation") {
    Design d = make_design(5, 3, 1, {{3, 1, 2}, {1, 5, 4}});
    CHECK(d.blocks == std::vector<std::vector<int>>{{1, 2, 3}, {1, 4, 5}});
    CHECK_THROWS_AS(make_design(5, 3, 1, {{1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(make_design(5, 3, 1, {{1, 2, 6}}), InvalidArgument);
    CHECK_THROWS_AS(make_design(5, 3, 1, {{1, 2, 2}}), InvalidArgument);
}

TEST_CASE("classification") {
    CHECK(classify(fano()).kind == DesignKind::exact_design);

    Design partial = make_design(5, 3, 1, {{1, 2, 3}, {1, 4, 5}});
    Classification c = classify(partial);
    CHECK(c.kind == DesignKind::packing);
    CHECK(c.min_pair == 0);
    CHECK(c.max_pair == 1);

    Design empty = make_design(4, 3, 1, {});
    CHECK(classify(empty).kind == DesignKind::packing);

    // Pair {1,2} twice, pair {4,5} never: neither.
    Design bad = make_design(5, 3, 1, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 3, 5}});
    CHECK(classify(bad).kind == DesignKind::neither);
}

TEST_CASE("excess and leave multigraphs") {
    CHECK(excess_or_leave(fano()).total_degree() == 0);

    Design single = make_design(5, 3, 1, {{1, 2, 3}});
    Multigraph leave = excess_or_leave(single);
    CHECK(leave.at(1, 2) == 0);
    CHECK(leave.at(1, 4) == 1);
    CHECK(leave.at(4, 5) == 1);
    CHECK(leave.total_degree() == 14);  // 7 uncovered pairs

    Design cover =
        make_design(5, 3, 1, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {3, 4, 5}});
    REQUIRE(classify(cover).kind == DesignKind::covering);
    Multigraph excess = excess_or_leave(cover);
    CHECK(excess.at(1, 2) == 2);
    CHECK(excess.at(3, 4) == 2);
    CHECK(excess.at(1, 3) == 1);
    CHECK(excess.at(2, 4) == 1);
    CHECK(excess.at(1, 5) == 0);

    Design bad = make_design(5, 3, 1, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 3, 5}});
    CHECK_THROWS_AS(excess_or_leave(bad), InvalidArgument);
}

TEST_CASE("bookkeeping identities") {
    Bookkeeping bk = bookkeeping(fano());
    CHECK(bk.b == 7);
    CHECK(bk.r == 3);
    CHECK(bk.d == 0);
    CHECK(bk.a == 0);
    CHECK(bk.v0().size() == 7);

    // Six-block (5,3,1)-covering: r_cov = 2, a = 18 - 10 = 8.
    Design cover =
        make_design(5, 3, 1, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {3, 4, 5}});
    bk = bookkeeping(cover);
    CHECK(bk.kind == DesignKind::covering);
    CHECK(bk.r == 2);
    CHECK(bk.d == 0);
    CHECK(bk.a == 8);
    CHECK(bk.level == std::vector<int>{2, 2, 2, 2, 0});

    // Single-block packing on 5 points: r_pack = 2, a = 10 - 3 = 7.
    Design single = make_design(5, 3, 1, {{1, 2, 3}});
    bk = bookkeeping(single);
    CHECK(bk.kind == DesignKind::packing);
    CHECK(bk.r == 2);
    CHECK(bk.d == 0);
    CHECK(bk.a == 7);
}

TEST_CASE("gram matrices") {
    RatMatrix m = gram(fano());  // 2I + J
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) CHECK(m.at(i, j) == (i == j ? Rat(3) : Rat(1)));

    Design single = make_design(5, 3, 1, {{1, 2, 3}});
    RatMatrix ms = gram(single);
    CHECK(ms.at(0, 0) == 1);
    CHECK(ms.at(3, 3) == 0);
    CHECK(ms.at(0, 1) == 1);
    CHECK(ms.at(3, 4) == 0);
}

TEST_CASE("exact rank") {
    RatMatrix eye(3);
    for (int i = 0; i < 3; ++i) eye.at(i, i) = 1;
    CHECK(rank_exact(eye) == 3);

    RatMatrix ones(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ones.at(i, j) = 1;
    CHECK(rank_exact(ones) == 1);

    CHECK(rank_exact(gram(fano())) == 7);

    // Rank-deficient rational matrix with a dependent middle row.
    RatMatrix m(3);
    int values[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = Rat(values[i][j], i + 1);
    CHECK(rank_exact(m) == 2);
}

TEST_CASE("rank agrees with plain rational elimination on random matrices") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> entry(-4, 4), den(1, 3), size(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = size(rng);
        RatMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = Rat(entry(rng), den(rng));
        // Reference: straightforward rational Gauss elimination.
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        int rank = 0;
        for (int col = 0; col < n; ++col) {
            int pivot = -1;
            for (int row = rank; row < n; ++row)
                if (a[row][col] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(a[rank], a[pivot]);
            for (int row = rank + 1; row < n; ++row) {
                if (a[row][col] == 0) continue;
                Rat factor = a[row][col] / a[rank][col];
                for (int j = col; j < n; ++j) a[row][j] -= factor * a[rank][j];
            }
            ++rank;
        }
        CHECK(rank_exact(m) == rank);
    }
}

TEST_CASE("bose lower bound") {
    CHECK(bose_lower(fano()) == 7);
    CHECK(bose_lower(make_design(4, 3, 1, {})) == 0);

    // Symmetric designs hit v exactly (Fisher).
    Design biplane = make_design(7, 4, 2, {{3, 5, 6, 7}, {1, 4, 6, 7}, {1, 2, 5, 7}, {1, 2, 3, 6},
                                           {2, 3, 4, 7}, {1, 3, 4, 5}, {2, 4, 5, 6}});
    REQUIRE(classify(biplane).kind == DesignKind::exact_design);
    CHECK(bose_lower(biplane) == 7);
}

TEST_CASE("weighted dominance and Sylvester") {
    RatMatrix eye(2);
    eye.at(0, 0) = eye.at(1, 1) = 1;
    CHECK(dominance_pd(eye, {1, 1}));
    CHECK(sylvester_pd(eye));

    RatMatrix ones(2);
    ones.at(0, 0) = ones.at(0, 1) = ones.at(1, 0) = ones.at(1, 1) = 1;
    CHECK(!dominance_pd(ones, {1, 1}));

    RatMatrix m(2);
    m.at(0, 0) = 2;
    m.at(0, 1) = m.at(1, 0) = 1;
    m.at(1, 1) = 3;
    CHECK(dominance_pd(m, {1, 1}));
    CHECK(sylvester_pd(m));

    // Dominance with a tuned weight vector where unit weights fail.
    RatMatrix skew(2);
    skew.at(0, 0) = 1;
    skew.at(0, 1) = skew.at(1, 0) = Rat(3, 2);
    skew.at(1, 1) = 4;
    CHECK(!dominance_pd(skew, {1, 1}));
    CHECK(dominance_pd(skew, {Rat(2), Rat(1)}));
    CHECK(sylvester_pd(skew));

    CHECK_THROWS_AS(dominance_pd(m, {1}), InvalidArgument);
    CHECK_THROWS_AS(dominance_pd(m, {Rat(0), Rat(1)}), InvalidArgument);

    RatMatrix indef(2);
    indef.at(0, 0) = 1;
    indef.at(0, 1) = indef.at(1, 0) = 2;
    indef.at(1, 1) = 1;
    CHECK(!sylvester_pd(indef));
}

TEST_CASE("dominance implies Sylvester on random symmetric matrices") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> entry(-3, 3), diag(0, 8), den(1, 2), size(1, 6);
    int hits = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        int n = size(rng);
        RatMatrix m(n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = Rat(diag(rng), den(rng));
            for (int j = i + 1; j < n; ++j) {
                Rat x(entry(rng), den(rng));
                m.at(i, j) = x;
                m.at(j, i) = x;
            }
        }
        std::vector<Rat> c(n);
        for (auto& w : c) w = Rat(1 + int(rng() % 3), 1 + int(rng() % 2));
        if (dominance_pd(m, c)) {
            ++hits;
            CHECK(sylvester_pd(m));
        }
    }
    CHECK(hits > 50);  // the sample actually exercises the implication
}

TEST_CASE("certificate check on hand examples") {
    // Exact design, S = all points, unit weights: premise reads 0 < r - lambda.
    Design f = fano();
    std::vector<int> all{1, 2, 3, 4, 5, 6, 7};
    std::vector<Rat> ones(7, Rat(1));
    CHECK(certificate_check(f, all, ones));

    // Two-block packing: point 2 sees leave degree 2 inside S but r_D(2)-lambda = 0.
    Design packing = make_design(5, 3, 1, {{1, 2, 3}, {1, 4, 5}});
    CHECK(!certificate_check(packing, {2, 3, 4, 5}, std::vector<Rat>(4, Rat(1))));

    CHECK(certificate_check(packing, {}, {}));  // vacuous

    CHECK_THROWS_AS(certificate_check(packing, {1}, std::vector<Rat>{Rat(0)}), InvalidArgument);
    CHECK_THROWS_AS(certificate_check(packing, {1, 1}, std::vector<Rat>(2, Rat(1))),
                    InvalidArgument);
}

TEST_CASE("fuzzed designs: gram equality, rank bound, degree identity, certificates") {
    std::mt19937 rng(20240818);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        Design d = random_cov_or_pack(rng);
        Classification c = classify(d);
        REQUIRE(c.kind != DesignKind::neither);

        // gram() checks the two constructions against each other internally.
        RatMatrix m = gram(d);
        CHECK(m.symmetric());
        CHECK((long long)d.b() >= rank_exact(m));

        Bookkeeping bk = bookkeeping(d);
        Multigraph g = excess_or_leave(d);
        CHECK(g.total_degree() == bk.d * d.v + bk.a * (d.k - 1));

        // Random subsets with random positive weights: a true premise always
        // certifies |S| <= b.
        std::vector<int> subset;
        std::vector<Rat> weights;
        for (int u = 1; u <= d.v; ++u)
            if (rng() % 2 == 0) {
                subset.push_back(u);
                weights.push_back(Rat(1 + int(rng() % 5), 1 + int(rng() % 3)));
            }
        bool holds = certificate_check(d, subset, weights);  // throws on violation
        if (holds) CHECK(d.b() >= subset.size());

        // Dominance of the certified submatrix of M implies Sylvester.
        if (holds && !subset.empty()) {
            RatMatrix sub(int(subset.size()));
            std::vector<long long> rep = replication(d);
            int sign = c.is_covering() ? 1 : -1;
            for (std::size_t i = 0; i < subset.size(); ++i) {
                sub.at(int(i), int(i)) = Rat(rep[subset[i] - 1] - d.lambda);
                for (std::size_t j = i + 1; j < subset.size(); ++j) {
                    Rat x = Rat(sign * g.at(subset[i], subset[j]));
                    sub.at(int(i), int(j)) = x;
                    sub.at(int(j), int(i)) = x;
                }
            }
            CHECK(dominance_pd(sub, weights));
            CHECK(sylvester_pd(sub));
        }
    }
}
