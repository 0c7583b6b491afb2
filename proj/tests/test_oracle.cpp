#include <doctest.h>

#include "covera/design.hpp"
#include "covera/errors.hpp"
#include "covera/matrix.hpp"
#include "covera/oracle.hpp"

using namespace covera;

TEST_CASE("known covering numbers") {
    auto res = min_cover(5, 3, 1);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.value == 4);
    CHECK(classify(res.witness).is_covering());

    res = min_cover(6, 3, 1);
    CHECK(res.value == 6);

    res = min_cover(7, 3, 1);
    CHECK(res.value == 7);
    CHECK(res.witness.b() == 7);
    CHECK(classify(res.witness).kind == DesignKind::exact_design);  // Fano

    res = min_cover(9, 4, 1);
    CHECK(res.value == 8);
}

TEST_CASE("known packing numbers") {
    auto res = max_pack(5, 3, 1);
    REQUIRE(res.status == SearchStatus::found);
    CHECK(res.value == 2);
    CHECK(classify(res.witness).is_packing());

    res = max_pack(7, 3, 1);
    CHECK(res.value == 7);

    res = max_pack(8, 4, 1);
    CHECK(res.value == 2);

    res = max_pack(9, 3, 1);
    CHECK(res.value == 12);  // resolvable triple system
}

TEST_CASE("witnesses satisfy the rank bound and serialize consistently") {
    for (auto [v, k, lambda] : {std::tuple{5, 3, 1}, {7, 3, 1}, {8, 4, 1}, {6, 3, 2}}) {
        auto cover = min_cover(v, k, lambda);
        REQUIRE(cover.status == SearchStatus::found);
        CHECK((long long)cover.witness.b() == cover.value);
        CHECK(cover.value >= bose_lower(cover.witness));

        auto pack = max_pack(v, k, lambda);
        REQUIRE(pack.status == SearchStatus::found);
        CHECK((long long)pack.witness.b() == pack.value);
        CHECK(pack.value >= bose_lower(pack.witness));
    }
}

TEST_CASE("canonical search equals the order-free reference search") {
    for (int v = 4; v <= 6; ++v)
        for (int k = 3; k < v; ++k)
            for (int lambda = 1; lambda <= 2; ++lambda) {
                auto canonical = min_cover(v, k, lambda);
                auto reference = min_cover(v, k, lambda, {}, SearchMode::reference);
                REQUIRE(canonical.status == SearchStatus::found);
                REQUIRE(reference.status == SearchStatus::found);
                CHECK(canonical.value == reference.value);

                auto pack_c = max_pack(v, k, lambda);
                auto pack_r = max_pack(v, k, lambda, {}, SearchMode::reference);
                REQUIRE(pack_c.status == SearchStatus::found);
                REQUIRE(pack_r.status == SearchStatus::found);
                CHECK(pack_c.value == pack_r.value);
            }
}

TEST_CASE("search is deterministic") {
    auto a = min_cover(7, 3, 1);
    auto b = min_cover(7, 3, 1);
    CHECK(a.witness == b.witness);
    auto c = max_pack(8, 3, 1);
    auto d = max_pack(8, 3, 1);
    CHECK(c.witness == d.witness);
}

TEST_CASE("budget exhaustion reports status instead of an answer") {
    SearchBudget tiny;
    tiny.max_nodes = 10;
    auto res = min_cover(9, 3, 2, tiny);
    CHECK(res.status == SearchStatus::budget_exceeded);
    CHECK(res.nodes <= 11);

    auto pack = max_pack(9, 4, 2, tiny);
    CHECK(pack.status == SearchStatus::budget_exceeded);

    SearchBudget timed;
    timed.max_seconds = 1e-9;  // already expired at the first time check
    auto slow = min_cover(10, 3, 2, timed);
    CHECK(slow.status == SearchStatus::budget_exceeded);

    CHECK_THROWS_AS(min_cover(5, 5, 1, {}), TrivialParamsError);
    CHECK_THROWS_AS(max_pack(5, 2, 1, {}), TrivialParamsError);
}
