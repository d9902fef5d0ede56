#pragma once

#include "hsdyn/interval_union.hpp"
#include "hsdyn/rational.hpp"
#include "hsdyn/staircase.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace hsdyn {

// Piecewise-linear self-bijection of [0,1], stored as breakpoints with
// strictly increasing x. Orientation-preserving elements (the default) fix 0
// and 1 and have strictly increasing values; orientation-reversing elements
// (negative controls such as x -> 1-x) swap the endpoints. Canonical form
// drops collinear breakpoints, so equality is pointwise equality.
class PLHomeo {
public:
    using Breakpoint = std::pair<Q, Q>;

    explicit PLHomeo(std::vector<Breakpoint> breakpoints);

    static PLHomeo identity() {
        return PLHomeo({{Q(0), Q(0)}, {Q(1), Q(1)}});
    }
    static PLHomeo reflection() {
        return PLHomeo({{Q(0), Q(1)}, {Q(1), Q(0)}});
    }

    const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
    bool orientation_preserving() const { return increasing_; }
    bool is_identity() const;

    Q operator()(const Q& x) const;

    bool operator==(const PLHomeo& o) const { return breakpoints_ == o.breakpoints_; }
    std::strong_ordering operator<=>(const PLHomeo& o) const;

private:
    std::vector<Breakpoint> breakpoints_;
    bool increasing_;
};

// Affine interpolation between the surrounding breakpoints; throws OutOfRange
// for x outside [0,1].
Q eval(const PLHomeo& g, const Q& x);

PLHomeo inverse(const PLHomeo& g);

// (g o h)(x) = g(h(x)); breakpoints at h's breakpoints plus h-preimages of
// g's breakpoints.
PLHomeo compose(const PLHomeo& g, const PLHomeo& h);

// Exact inverse image of an interval union.
IntervalUnion preimage(const PLHomeo& g, const IntervalUnion& a);
IntervalUnion image(const PLHomeo& g, const IntervalUnion& a);

// sup_x |f(x) - g(x)|, attained on the combined breakpoint grid.
Q sup_dist(const PLHomeo& f, const PLHomeo& g);
// Same, also reporting the smallest x attaining the sup.
std::pair<Q, Q> sup_dist_witness(const PLHomeo& f, const PLHomeo& g);

// Graph of an orientation-preserving element as a staircase curve.
StaircaseCurve graph(const PLHomeo& g);

struct FarnessWitness {
    std::size_t a_index;
    std::size_t b_index;
    Q x;
    Q separation;  // |f(x) - g(x)| = sup_dist(f, g)
};

// Uniform lower bound 2*delta = min over A x B of sup_dist, with one witness
// point per pair. For finite sets this decides farness in the right
// uniformity exactly.
struct FarnessCertificate {
    Q two_delta;
    std::vector<FarnessWitness> witnesses;
};

// Throws NotFar when some pair coincides (sup_dist = 0).
FarnessCertificate farness(const std::vector<PLHomeo>& a, const std::vector<PLHomeo>& b);

}  // namespace hsdyn
