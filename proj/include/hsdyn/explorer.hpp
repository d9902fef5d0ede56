#pragma once

#include "hsdyn/families.hpp"
#include "hsdyn/interval_union.hpp"
#include "hsdyn/pl_homeo.hpp"
#include "hsdyn/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hsdyn {

struct GeneratorSet {
    std::vector<PLHomeo> elements;
    bool symmetric = false;  // inverses included

    GeneratorSet() = default;
    GeneratorSet(std::vector<PLHomeo> els, bool sym);
};

struct GridGenOptions {
    int max_interior = 2;
    std::size_t cap = 100000;
    bool symmetric = false;
    bool include_reflection = false;
};

// All PL homeos with interior breakpoints on {i/k}, values on {j/m}, at most
// max_interior interior breakpoints, in deterministic enumeration order
// (breakpoint count, then positions, then values), deduplicated in canonical
// form. Throws BudgetExceeded past the cap.
GeneratorSet grid_generators(int k, int m, const GridGenOptions& opt = {});

// A point of one of the explored hyperspaces.
using HyperPoint = std::variant<IntervalUnion, SetFamilyTuple, CurveFamily, TupleFamily>;

Q hyper_dist(const HyperPoint& a, const HyperPoint& b);
bool hyper_within(const HyperPoint& a, const HyperPoint& b, const Q& eps);
HyperPoint hyper_act(const PLHomeo& g, const HyperPoint& p);

struct TransitionEdge {
    std::size_t from;
    std::size_t gen;
    std::size_t to;
};

// Epsilon-net of an orbit closure: images snap to the earliest node within
// epsilon, new nodes append in discovery order.
struct TransitionGraph {
    std::vector<HyperPoint> nodes;
    std::vector<TransitionEdge> edges;
    Q epsilon;
    bool truncated = false;
};

TransitionGraph transition_graph(const std::vector<HyperPoint>& seeds,
                                 const GeneratorSet& gens, const Q& epsilon,
                                 std::size_t budget);

struct BottomComponent {
    std::vector<std::size_t> nodes;  // ascending indices
    Q diameter;                      // max pairwise node distance
};

// Strongly connected components without outgoing edges, the finite surrogate
// for minimal closed invariant subsets. Sound only on complete graphs;
// results on truncated graphs are lower bounds.
std::vector<BottomComponent> bottom_components(const TransitionGraph& g);

// Point of the ordered n-simplex: 0 <= x_1 <= ... <= x_n <= 1.
struct SimplexPoint {
    std::vector<Q> coords;

    explicit SimplexPoint(std::vector<Q> cs);
    std::size_t dim() const { return coords.size(); }
    bool operator==(const SimplexPoint& o) const { return coords == o.coords; }
};

// Gap measure to the boundary faces {x_1=0}, {x_n=1}, {x_i=x_{i+1}}: zero
// exactly on the boundary.
Q boundary_margin(const SimplexPoint& x);

// Covering radius of the set over the candidate grid of the simplex at
// resolution epsilon/2 (L-infinity); the set epsilon-fills iff <= epsilon.
Q fill_defect(const std::vector<SimplexPoint>& points, const Q& epsilon);

// Diagonal action, coordinates re-sorted.
SimplexPoint act_simplex(const PLHomeo& g, const SimplexPoint& x);

struct DichotomyResult {
    enum class Outcome { BoundaryPush, Fill, Unresolved };

    Outcome outcome = Outcome::Unresolved;
    std::optional<PLHomeo> witness;
    std::string witness_word;  // "identity", generator word, or the interpolant tag
    Q epsilon;
    Q margin_after;    // max boundary margin over the (best) image
    Q covering_after;  // fill defect of the (best) image
};

// Searches the identity, generator words of length <= depth (length-then-lex
// order), then the deterministic interpolating heuristics; returns the first
// certified branch. Unresolved is a value carrying the best metrics seen.
DichotomyResult dichotomy_search(const std::vector<SimplexPoint>& s, const Q& epsilon,
                                 const GeneratorSet& gens, int depth);

}  // namespace hsdyn
