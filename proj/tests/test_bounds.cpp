#include <doctest.h>

#include "covera/bounds.hpp"
#include "covera/errors.hpp"

using namespace covera;

TEST_CASE("parameter decompositions") {
    ParamSet p = make_params(17, 5, 1);
    CHECK(p.r_cov == 4);
    CHECK(p.d_cov == 0);
    CHECK(p.r_pack == 4);
    CHECK(p.d_pack == 0);

    p = make_params(30, 7, 1);  // 29 = 5*6 - 1
    CHECK(p.r_cov == 5);
    CHECK(p.d_cov == 1);
    CHECK(p.n_cov == 4);

    p = make_params(34, 10, 1);  // 33 = 4*9 - 3 = 3*9 + 6
    CHECK(p.r_cov == 4);
    CHECK(p.d_cov == 3);
    CHECK(p.r_pack == 3);
    CHECK(p.d_pack == 6);

    CHECK_THROWS_AS(make_params(5, 5, 1), TrivialParamsError);
    CHECK_THROWS_AS(make_params(10, 2, 1), TrivialParamsError);
    CHECK_THROWS_AS(make_params(10, 3, 0), TrivialParamsError);
}

TEST_CASE("decomposition identities across the parameter sweep") {
    for (int lambda = 1; lambda <= 5; ++lambda)
        for (int v = 4; v <= 400; ++v)
            for (int k = 3; k < v; ++k) {
                ParamSet p = make_params(v, k, lambda);
                std::int64_t target = std::int64_t(lambda) * (v - 1);
                REQUIRE(p.r_cov * (k - 1) - p.d_cov == target);
                REQUIRE(p.r_pack * (k - 1) + p.d_pack == target);
                REQUIRE(0 <= p.d_cov);
                REQUIRE(p.d_cov < k - 1);
                REQUIRE(0 <= p.d_pack);
                REQUIRE(p.d_pack < k - 1);
                bool divisible = target % (k - 1) == 0;
                REQUIRE((p.d_cov == 0) == divisible);
                REQUIRE((p.d_pack == 0) == divisible);
                if (!divisible) REQUIRE(p.r_cov == p.r_pack + 1);
            }
}

TEST_CASE("classical bounds and their refinements") {
    auto sch = schonheim(make_params(17, 5, 1));
    CHECK(sch.value == 14);
    CHECK(!sch.plus_one);

    sch = schonheim(make_params(13, 5, 1));
    CHECK(sch.value == 8);
    CHECK(sch.plus_one);
    CHECK(sch.refined() == 9);

    sch = schonheim(make_params(7, 3, 1));
    CHECK(sch.value == 7);
    CHECK(!sch.plus_one);

    auto joh = johnson1(make_params(5, 3, 1));
    CHECK(joh.value == 3);
    CHECK(!joh.minus_one);

    joh = johnson1(make_params(7, 3, 1));
    CHECK(joh.value == 7);
    CHECK(!joh.minus_one);

    joh = johnson1(make_params(13, 5, 1));
    CHECK(joh.value == 7);
    CHECK(joh.minus_one);
    CHECK(joh.refined() == 6);
}

TEST_CASE("second johnson bound") {
    CHECK(johnson2_weak(5, 3) == Int(2));
    CHECK(johnson2_weak(12, 4) == Int(9));
    CHECK(!johnson2_weak(20, 4).has_value());

    CHECK(johnson2_strong(5, 3) == 2);
    CHECK(johnson2_strong(7, 3) == 7);
    CHECK(johnson2_strong(12, 4) == 9);

    // The literal decomposition b = xv + y is vacuous below v, collapsing to
    // the first Johnson cap.
    CHECK(johnson2_strong(5, 3, Johnson2Form::literal) == 3);
}

TEST_CASE("johnson2_strong never exceeds the other packing bounds' guarantees") {
    for (int v = 5; v <= 60; ++v)
        for (int k = 3; k < v && k <= 9; ++k) {
            ParamSet p = make_params(v, k, 1);
            Int strong = johnson2_strong(v, k);
            CHECK(strong <= johnson1(p).value);
            if (auto weak = johnson2_weak(v, k)) CHECK(strong <= *weak);
        }
}

TEST_CASE("CB and DB functionals") {
    ParamSet p = make_params(17, 5, 1);
    Surd cb = cb_value(p, Surd(1), Surd(0));
    CHECK(cb.as_rational() == Rat(85, 6));
    CHECK(cb.ceil_int() == 15);

    // alpha = beta collapses to alpha*v
    CHECK(cb_value(p, Surd(Rat(1, 3)), Surd(Rat(1, 3))).as_rational() == Rat(17, 3));

    ParamSet q = make_params(34, 10, 1);
    Surd cb2 = cb_value(q, Surd(Rat(1, 2)), Surd(Rat(2, 13)));
    CHECK(cb2.as_rational() == Rat(833, 58));
    CHECK(cb2.ceil_int() == 15);

    Surd db = db_value(q, Surd(1), Surd(0));
    CHECK(db.as_rational() == Rat(68, 9));  // v(r-1)/(k-1) with r_pack = 3
    CHECK(db.floor_int() == 7);

    CHECK_THROWS_AS(cb_value(p, Surd(0), Surd(1)), InvalidArgument);
    CHECK_THROWS_AS(db_value(p, Surd(Rat(1, 4)), Surd(Rat(1, 10))), InvalidArgument);
    CHECK_THROWS_AS(db_value(p, Surd(Rat(1, 5)), Surd(0)), InvalidArgument);
}

TEST_CASE("CB is monotone in beta while k*alpha > r") {
    for (auto [v, k, lambda] : {std::tuple{30, 7, 1}, {34, 10, 1}, {41, 12, 2}}) {
        ParamSet p = make_params(v, k, lambda);
        for (int an = 1; an <= 4; ++an) {
            Rat alpha(an, 4);
            if (Rat(p.k) * alpha <= Rat(p.r_cov)) continue;
            Surd prev = cb_value(p, Surd(alpha), Surd(0));
            for (int bn = 1; bn <= 12; ++bn) {
                Rat beta = alpha * Rat(bn, 12);
                Surd cur = cb_value(p, Surd(alpha), Surd(beta));
                CHECK(cur.compare(prev) >= 0);
                prev = cur;
            }
        }
    }
}

TEST_CASE("first theorems: covering and packing") {
    CHECK(thm_1_1(make_params(17, 5, 1)) == Int(15));
    CHECK(thm_1_1(make_params(28, 8, 1)) == Int(16));
    CHECK(!thm_1_1(make_params(34, 10, 1)).has_value());

    CHECK(thm_1_2(make_params(25, 7, 2)) == Int(29));
    CHECK(thm_1_2(make_params(7, 3, 1)) == Int(7));
    CHECK(!thm_1_2(make_params(34, 10, 1)).has_value());
}

TEST_CASE("theorem 5.3") {
    auto part = thm_5_3(make_params(34, 10, 1));
    REQUIRE(part.has_value());
    CHECK(part->exact.as_rational() == Rat(833, 58));
    CHECK(part->rounded == 15);

    // d < n: not applicable
    CHECK(!thm_5_3(make_params(17, 5, 1)).has_value());

    auto p41 = thm_5_3(make_params(41, 12, 1));
    REQUIRE(p41.has_value());
    CHECK(p41->rounded == 15);
    CHECK(schonheim(make_params(41, 12, 1)).value == 14);

    auto p42 = thm_5_3(make_params(42, 12, 1));
    REQUIRE(p42.has_value());
    CHECK(p42->rounded == 16);
    CHECK(schonheim(make_params(42, 12, 1)).value == 14);
}

TEST_CASE("theorem 5.4") {
    ParamSet p = make_params(34, 10, 1);  // r_pack=3, d_pack=6 >= n_pack=2
    auto parts = thm_5_4(p);
    REQUIRE(parts.has_value());
    REQUIRE(parts->a.has_value());
    // DB(3/14, 0) = (3*34*(3/14) - (3/14)*34) / (10*(3/14) - 1) = 204/16
    CHECK(parts->a->exact.as_rational() == Rat(204, 16));
    CHECK(parts->a->rounded == 12);
    // nk(k-1) = 180 <= 2(d+1)(d+k) = 224
    CHECK(!parts->b.has_value());

    // d_pack < n_pack: the gate fails
    CHECK(!thm_5_4(make_params(25, 7, 2)).has_value());
}

TEST_CASE("theorem 6.2") {
    ParamSet p = make_params(30, 7, 1);  // r=5, d=1, n=4
    auto parts = thm_6_2(p);
    REQUIRE(parts.has_value());
    REQUIRE(parts->a.has_value());
    CHECK(parts->a->rounded == 23);
    CHECK(!parts->b.has_value());  // d < n/2
    REQUIRE(parts->c.has_value());
    CHECK(parts->c->rounded == 24);
    CHECK(!parts->c->exact.is_rational());

    // (77,10,1): part (b) fires and beats part (a)
    ParamSet q = make_params(77, 10, 1);
    auto parts77 = thm_6_2(q);
    REQUIRE(parts77.has_value());
    CHECK(parts77->a->rounded == 69);
    REQUIRE(parts77->b.has_value());
    CHECK(parts77->b->rounded == 71);
    CHECK(!parts77->c.has_value());

    // d = 0 keeps part (a) only
    ParamSet z = make_params(21, 6, 1);
    auto parts21 = thm_6_2(z);
    REQUIRE(parts21.has_value());
    CHECK(parts21->a->rounded == 16);
    CHECK(!parts21->b.has_value());
    CHECK(!parts21->c.has_value());

    CHECK(!thm_6_2(make_params(34, 10, 1)).has_value());  // d >= n
}

TEST_CASE("theorem 6.3") {
    // (20,7,2): r_pack = 6 < 7, d = 2 < n = 4
    ParamSet p = make_params(20, 7, 2);
    auto parts = thm_6_3(p);
    REQUIRE(parts.has_value());
    REQUIRE(parts->a.has_value());
    // DB(5/6, 2/9): gamma = 11/18, (6*20*11/18 - 5/6*20) / (7*11/18 - 1) = 1020/59... compute:
    // num = 220/3 - 50/3 = 170/3, den = 77/18 - 1 = 59/18 -> 170*18/(3*59) = 1020/59
    CHECK(parts->a->exact.as_rational() == Rat(1020, 59));
    CHECK(parts->a->rounded == 17);
    CHECK(johnson1(p).value == 17);

    // n_pack = 1, d = 0: part (a) reduces to DB(1, n/(2k)); (b) and (c) are
    // gated out by the strict inequalities.
    ParamSet q = make_params(5, 3, 1);
    auto parts5 = thm_6_3(q);
    REQUIRE(parts5.has_value());
    REQUIRE(parts5->a.has_value());
    CHECK(parts5->a->exact.as_rational() == Rat(20, 9));
    CHECK(parts5->a->rounded == 2);
    CHECK(!parts5->b.has_value());
    CHECK(!parts5->c.has_value());
}

TEST_CASE("theorem 1.1 and 1.2 reduce to Fisher on symmetric parameters") {
    for (auto [v, k, lambda] : {std::tuple{7, 3, 1}, {13, 4, 1}, {21, 5, 1}, {11, 5, 2},
                                {16, 6, 2}, {31, 6, 1}, {15, 7, 3}}) {
        ParamSet p = make_params(v, k, lambda);
        REQUIRE(std::int64_t(lambda) * (v - 1) == std::int64_t(k) * (k - 1));
        CHECK(p.d_cov == 0);
        CHECK(p.r_cov == k);
        CHECK(thm_1_1(p) == Int(v));
        CHECK(thm_1_2(p) == Int(v));
    }
}

TEST_CASE("CB(1,0) matches the closed form everywhere it applies") {
    for (int lambda = 1; lambda <= 3; ++lambda)
        for (int v = 5; v <= 120; ++v)
            for (int k = 3; k < v && k <= 15; ++k) {
                ParamSet p = make_params(v, k, lambda);
                Surd cb = cb_value(p, Surd(1), Surd(0));
                CHECK(cb.ceil_int() == ceil_rat(Rat(p.v * (p.r_cov + 1), p.k + 1)));
                if (p.d_pack < p.n_pack) {
                    Surd db = db_value(p, Surd(1), Surd(0));
                    CHECK(db.floor_int() == floor_rat(Rat(p.v * (p.r_pack - 1), p.k - 1)));
                }
            }
}

TEST_CASE("hypothesis exclusivity between the basic and d>=n theorems") {
    for (int lambda = 1; lambda <= 3; ++lambda)
        for (int v = 5; v <= 150; ++v)
            for (int k = 3; k < v && k <= 16; ++k) {
                ParamSet p = make_params(v, k, lambda);
                CHECK(!(thm_1_1(p).has_value() && thm_5_3(p).has_value()));
                CHECK(!(thm_1_2(p).has_value() && thm_5_4(p).has_value()));
            }
}

TEST_CASE("best_bounds dispatcher") {
    BoundReport rep = best_bounds(make_params(17, 5, 1), Side::cover);
    CHECK(rep.best == 15);
    CHECK(rep.best_source == BoundId::thm_1_1);

    rep = best_bounds(make_params(34, 10, 1), Side::cover);
    CHECK(rep.best == 15);
    CHECK(rep.best_source == BoundId::thm_5_3);

    rep = best_bounds(make_params(30, 7, 1), Side::cover);
    CHECK(rep.best == 24);
    CHECK(rep.best_source == BoundId::thm_6_2c);

    rep = best_bounds(make_params(5, 3, 1), Side::pack);
    CHECK(rep.best == 2);
    CHECK(rep.best_source == BoundId::johnson2_weak);

    // lambda > 1 excludes the second Johnson bounds from the catalog.
    rep = best_bounds(make_params(25, 7, 2), Side::pack);
    for (const auto& e : rep.entries)
        if (e.id == BoundId::johnson2_weak || e.id == BoundId::johnson2_strong)
            CHECK(!e.applicable);
    CHECK(rep.best == 28);  // johnson1 = floor(25*8/7); thm_1_2 = 29 is weaker
    CHECK(rep.best_source == BoundId::johnson1);
}
