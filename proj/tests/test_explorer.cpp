#include "hsdyn/explorer.hpp"

#include "support.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace hsdyn;
using testsupport::Rng;

using testsupport::minimal_invariant_oracle;

TEST_CASE("grid_generators enumerates the breakpoint lattice") {
    CHECK(grid_generators(1, 1).elements == std::vector<PLHomeo>{PLHomeo::identity()});

    GridGenOptions opt;
    opt.max_interior = 1;
    opt.symmetric = true;
    GeneratorSet gens = grid_generators(2, 4, opt);
    // j=2/4 collapses onto the identity; the two bends and their inverses remain
    CHECK(gens.elements.size() == 5);
    auto has = [&](std::initializer_list<std::pair<Q, Q>> bps) {
        PLHomeo g{std::vector<PLHomeo::Breakpoint>(bps)};
        return std::find(gens.elements.begin(), gens.elements.end(), g) !=
               gens.elements.end();
    };
    CHECK(has({{Q(0), Q(0)}, {Q(1), Q(1)}}));
    CHECK(has({{Q(0), Q(0)}, {Q(1, 2), Q(1, 4)}, {Q(1), Q(1)}}));
    CHECK(has({{Q(0), Q(0)}, {Q(1, 2), Q(3, 4)}, {Q(1), Q(1)}}));
    CHECK(has({{Q(0), Q(0)}, {Q(1, 4), Q(1, 2)}, {Q(1), Q(1)}}));
    CHECK(has({{Q(0), Q(0)}, {Q(3, 4), Q(1, 2)}, {Q(1), Q(1)}}));

    CHECK(grid_generators(4, 16).elements.front() == PLHomeo::identity());

    GridGenOptions tight;
    tight.cap = 3;
    CHECK_THROWS_AS(grid_generators(4, 16, tight), Error);
    CHECK_THROWS_AS(grid_generators(4, 2), Error);
}

TEST_CASE("transition graph on fixed points") {
    GeneratorSet gens = grid_generators(2, 4, {.max_interior = 1, .symmetric = true});

    TransitionGraph zero =
        transition_graph({IntervalUnion::point(Q(0))}, gens, Q(1, 16), 100);
    CHECK(zero.nodes.size() == 1);
    CHECK(zero.edges.size() == gens.elements.size());
    for (const auto& e : zero.edges) CHECK(e.to == 0);

    TransitionGraph whole = transition_graph({IntervalUnion::whole()}, gens, Q(1, 16), 100);
    CHECK(whole.nodes.size() == 1);

    auto comps = bottom_components(zero);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].nodes.size() == 1);
    CHECK(comps[0].diameter == 0);
}

TEST_CASE("reflection yields the two-point swap component") {
    GeneratorSet gens({PLHomeo::identity(), PLHomeo::reflection()}, false);
    TransitionGraph g = transition_graph({IntervalUnion::point(Q(0))}, gens, Q(1, 16), 100);
    CHECK(g.nodes.size() == 2);
    auto comps = bottom_components(g);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].nodes.size() == 2);
    CHECK(comps[0].diameter == 1);
}

TEST_CASE("identity-only generators leave every node its own component") {
    GeneratorSet gens({PLHomeo::identity()}, false);
    std::vector<HyperPoint> seeds{IntervalUnion::point(Q(0)), IntervalUnion::point(Q(1, 2)),
                                  IntervalUnion::point(Q(1))};
    TransitionGraph g = transition_graph(seeds, gens, Q(1, 16), 100);
    auto comps = bottom_components(g);
    CHECK(comps.size() == 3);
    for (const auto& c : comps) {
        CHECK(c.nodes.size() == 1);
        CHECK(c.diameter == 0);
    }
}

TEST_CASE("snapping soundness holds on random explorations") {
    Rng rng(301);
    GeneratorSet gens = grid_generators(4, 8, {.max_interior = 1, .symmetric = true});
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<HyperPoint> seeds;
        int k = 1 + static_cast<int>(rng.below(3));
        for (int i = 0; i < k; ++i)
            seeds.push_back(testsupport::random_interval_union(rng, 8, 2));
        Q eps(1, 8);
        TransitionGraph g = transition_graph(seeds, gens, eps, 400);
        REQUIRE(!g.truncated);
        for (const auto& e : g.edges) {
            HyperPoint exact = hyper_act(gens.elements[e.gen], g.nodes[e.from]);
            CHECK(hyper_dist(exact, g.nodes[e.to]) <= eps);
        }
        // bottom components are closed under every generator
        auto comps = bottom_components(g);
        for (const auto& c : comps) {
            std::set<std::size_t> inside(c.nodes.begin(), c.nodes.end());
            std::map<std::size_t, std::map<std::size_t, std::size_t>> edge_map;
            for (const auto& e : g.edges) edge_map[e.from][e.gen] = e.to;
            for (std::size_t v : c.nodes)
                for (std::size_t gi = 0; gi < gens.elements.size(); ++gi)
                    CHECK(inside.count(edge_map[v][gi]) == 1);
        }
    }
}

TEST_CASE("curve-family orbits explore the curve space") {
    // iterating one bend drives the graph family toward the corner curve;
    // snapping at 1/16 keeps the orbit finite
    PLHomeo bend({{Q(0), Q(0)}, {Q(1, 2), Q(1, 4)}, {Q(1), Q(1)}});
    GeneratorSet gens({bend}, false);
    std::vector<HyperPoint> seeds{CurveFamily({StaircaseCurve::diagonal()})};
    TransitionGraph g = transition_graph(seeds, gens, Q(1, 16), 50);
    REQUIRE(!g.truncated);
    CHECK(g.nodes.size() > 1);
    for (const auto& e : g.edges) {
        HyperPoint exact = hyper_act(gens.elements[e.gen], g.nodes[e.from]);
        CHECK(hyper_dist(exact, g.nodes[e.to]) <= Q(1, 16));
    }
    auto comps = bottom_components(g);
    REQUIRE(comps.size() == 1);  // the contraction has a single attractor
}

TEST_CASE("budget truncation is explicit") {
    GeneratorSet gens = grid_generators(2, 4, {.max_interior = 1, .symmetric = true});
    std::vector<HyperPoint> seeds{IntervalUnion::point(Q(1, 2))};
    TransitionGraph g = transition_graph(seeds, gens, Q(1, 64), 2);
    CHECK(g.truncated);
}

TEST_CASE("bottom components agree with the direct invariant-set oracle") {
    GeneratorSet gens = grid_generators(4, 8, {.max_interior = 1, .symmetric = true});
    // all 31 nonempty subsets of the grid {0,1/4,...,1}, bitmask order
    std::vector<HyperPoint> seeds;
    for (unsigned mask = 1; mask < 32; ++mask) {
        std::vector<IntervalUnion::Interval> pts;
        for (unsigned i = 0; i < 5; ++i)
            if (mask & (1u << i)) pts.push_back({Q(i, 4), Q(i, 4)});
        seeds.push_back(IntervalUnion(pts));
    }
    TransitionGraph g = transition_graph(seeds, gens, Q(1, 8), 1000);
    REQUIRE(!g.truncated);
    CHECK(g.nodes.size() == 31);

    auto comps = bottom_components(g);
    auto oracle = minimal_invariant_oracle(g);
    REQUIRE(comps.size() == oracle.size());
    for (const auto& c : comps) {
        std::set<std::size_t> nodes(c.nodes.begin(), c.nodes.end());
        CHECK(std::find(oracle.begin(), oracle.end(), nodes) != oracle.end());
    }
}

TEST_CASE("boundary_margin measures the face gap") {
    CHECK(boundary_margin(SimplexPoint({Q(1, 3), Q(2, 3)})) == Q(1, 3));
    CHECK(boundary_margin(SimplexPoint({Q(0), Q(1, 2)})) == 0);
    CHECK(boundary_margin(SimplexPoint({Q(1, 4), Q(1, 2), Q(3, 4)})) == Q(1, 4));
    CHECK(boundary_margin(SimplexPoint({Q(1, 2)})) == Q(1, 2));
}

TEST_CASE("fill_defect scans the epsilon/2 grid") {
    // the full grid covers itself
    std::vector<SimplexPoint> grid;
    for (int i = 0; i <= 8; ++i)
        for (int j = i; j <= 8; ++j) grid.push_back(SimplexPoint({Q(i, 8), Q(j, 8)}));
    CHECK(fill_defect(grid, Q(1, 4)) == 0);

    CHECK(fill_defect({SimplexPoint({Q(1, 2), Q(1, 2)})}, Q(1, 8)) == Q(1, 2));
    CHECK(fill_defect({SimplexPoint({Q(0)}), SimplexPoint({Q(1, 2)}), SimplexPoint({Q(1)})},
                      Q(1, 2)) == Q(1, 4));
}

TEST_CASE("dichotomy resolves the singleton instance via the interpolant") {
    GeneratorSet gens({PLHomeo::identity()}, false);
    DichotomyResult r =
        dichotomy_search({SimplexPoint({Q(1, 3), Q(2, 3)})}, Q(1, 16), gens, 2);
    CHECK(r.outcome == DichotomyResult::Outcome::BoundaryPush);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_word == "boundary-interpolant");
    // independent re-certification
    SimplexPoint moved = act_simplex(*r.witness, SimplexPoint({Q(1, 3), Q(2, 3)}));
    CHECK(boundary_margin(moved) == r.margin_after);
    CHECK(r.margin_after == Q(1, 96));
    CHECK(r.margin_after <= Q(1, 16));
}

TEST_CASE("dichotomy recognizes an already-filling grid") {
    std::vector<SimplexPoint> grid;
    for (int i = 0; i <= 16; ++i)
        for (int j = i; j <= 16; ++j) grid.push_back(SimplexPoint({Q(i, 16), Q(j, 16)}));
    GeneratorSet gens({PLHomeo::identity()}, false);
    DichotomyResult r = dichotomy_search(grid, Q(1, 8), gens, 1);
    CHECK(r.outcome == DichotomyResult::Outcome::Fill);
    CHECK(r.witness_word == "identity");
    CHECK(r.covering_after <= Q(1, 8));
}

TEST_CASE("dichotomy recognizes boundary points in place") {
    GeneratorSet gens({PLHomeo::identity()}, false);
    DichotomyResult r = dichotomy_search({SimplexPoint({Q(0), Q(1)})}, Q(1, 16), gens, 1);
    CHECK(r.outcome == DichotomyResult::Outcome::BoundaryPush);
    CHECK(r.witness_word == "identity");
    CHECK(r.margin_after == 0);
}

TEST_CASE("dichotomy finds generator words when they suffice") {
    // one generator crushing [0,3/4] into [0,1/16]
    PLHomeo crush({{Q(0), Q(0)}, {Q(3, 4), Q(1, 16)}, {Q(1), Q(1)}});
    GeneratorSet gens({crush}, false);
    DichotomyResult r =
        dichotomy_search({SimplexPoint({Q(1, 4), Q(1, 2)})}, Q(1, 16), gens, 3);
    CHECK(r.outcome == DichotomyResult::Outcome::BoundaryPush);
    CHECK(r.witness_word == "g0");
    CHECK(r.margin_after <= Q(1, 16));
}
