#include "hsdyn/interval_union.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace hsdyn;
using testsupport::Rng;

TEST_CASE("normalize merges touching and overlapping intervals") {
    CHECK(IntervalUnion({{Q(0), Q(1, 2)}, {Q(1, 2), Q(1)}}) == IntervalUnion::whole());
    CHECK(IntervalUnion({{Q(1, 4), Q(1, 4)}}).intervals().size() == 1);
    CHECK(IntervalUnion({{Q(0), Q(1, 3)}, {Q(1, 4), Q(1, 2)}}) ==
          IntervalUnion({{Q(0), Q(1, 2)}}));
}

TEST_CASE("normalize rejects empty input and out-of-range endpoints") {
    CHECK_THROWS_AS(IntervalUnion({}), Error);
    CHECK_THROWS_AS(IntervalUnion({{Q(0), Q(3, 2)}}), Error);
    CHECK_THROWS_AS(IntervalUnion({{Q(-1, 2), Q(1, 2)}}), Error);
}

TEST_CASE("normalize is idempotent and order-insensitive") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntervalUnion::Interval> raw;
        int count = 1 + static_cast<int>(rng.below(5));
        for (int i = 0; i < count; ++i) {
            int a = static_cast<int>(rng.below(17));
            int b = static_cast<int>(rng.below(17));
            raw.push_back({Q(std::min(a, b), 16), Q(std::max(a, b), 16)});
        }
        IntervalUnion u(raw);
        CHECK(IntervalUnion(u.intervals()) == u);
        std::reverse(raw.begin(), raw.end());
        CHECK(IntervalUnion(raw) == u);
    }
}

TEST_CASE("hausdorff on the named instances") {
    IntervalUnion whole = IntervalUnion::whole();
    CHECK(hausdorff(whole, whole) == 0);
    CHECK(hausdorff(IntervalUnion::point(Q(0)), IntervalUnion::point(Q(1))) == 1);

    // farthest point of [0,1] from {0,1} is the midpoint
    IntervalUnion endpoints({{Q(0), Q(0)}, {Q(1), Q(1)}});
    Q d = hausdorff(whole, endpoints);
    CHECK(d == Q(1, 2));
    double oracle = testsupport::grid_hausdorff_oracle(whole, endpoints, 1024);
    CHECK(std::abs(testsupport::to_double(d) - oracle) <= 1.0 / 1024);
}

TEST_CASE("hausdorff satisfies the metric axioms on random sets") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalUnion a = testsupport::random_interval_union(rng, 16, 3);
        IntervalUnion b = testsupport::random_interval_union(rng, 16, 3);
        IntervalUnion c = testsupport::random_interval_union(rng, 16, 3);
        Q dab = hausdorff(a, b), dba = hausdorff(b, a);
        CHECK(dab == dba);
        CHECK((dab == 0) == (a == b));
        CHECK(dab <= hausdorff(a, c) + hausdorff(c, b));
    }
}

TEST_CASE("hausdorff agrees with the grid oracle on random sets") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        IntervalUnion a = testsupport::random_interval_union(rng, 64, 3);
        IntervalUnion b = testsupport::random_interval_union(rng, 64, 3);
        double exact = testsupport::to_double(hausdorff(a, b));
        double oracle = testsupport::grid_hausdorff_oracle(a, b, 1024);
        CHECK(std::abs(exact - oracle) <= 1.0 / 1024);
    }
}

TEST_CASE("within_hausdorff matches the exact comparison") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        IntervalUnion a = testsupport::random_interval_union(rng, 16, 3);
        IntervalUnion b = testsupport::random_interval_union(rng, 16, 3);
        Q eps(static_cast<int>(rng.below(5)), 16);
        CHECK(within_hausdorff(a, b, eps) == (hausdorff(a, b) <= eps));
    }
}

TEST_CASE("set operations") {
    IntervalUnion a({{Q(0), Q(1, 2)}});
    IntervalUnion b({{Q(1, 4), Q(3, 4)}});
    CHECK(*intersect(a, b) == IntervalUnion({{Q(1, 4), Q(1, 2)}}));
    CHECK(union_of(a, b) == IntervalUnion({{Q(0), Q(3, 4)}}));
    CHECK(subset_of(IntervalUnion({{Q(1, 4), Q(1, 2)}}), a));
    CHECK(!subset_of(b, a));
    CHECK(!intersect(IntervalUnion::point(Q(0)), IntervalUnion::point(Q(1))).has_value());

    auto far = far_set(IntervalUnion({{Q(1, 4), Q(1, 2)}}), Q(1, 4));
    REQUIRE(far.has_value());
    CHECK(*far == IntervalUnion({{Q(0), Q(0)}, {Q(3, 4), Q(1)}}));
    CHECK(!far_set(IntervalUnion::whole(), Q(1, 8)).has_value());
}

TEST_CASE("mesh of simplex-chain covers") {
    CHECK(mesh(CoverTuple::simplex_chain({Q(1, 2)})) == Q(1, 2));
    CHECK(mesh(CoverTuple::simplex_chain({})) == Q(1));
    CHECK(mesh(CoverTuple::simplex_chain({Q(1, 4), Q(1, 2)})) == Q(1, 2));
    CHECK(CoverTuple::simplex_chain({Q(1, 4)}).is_simplex_chain());

    CoverTuple not_cover(
        {IntervalUnion({{Q(0), Q(1, 4)}}), IntervalUnion({{Q(1, 2), Q(1)}})});
    CHECK(!not_cover.is_cover());
    CHECK_THROWS_AS(mesh(not_cover), Error);
}
