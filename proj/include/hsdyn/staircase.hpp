#pragma once

#include "hsdyn/rational.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace hsdyn {

using PlanarPoint = std::pair<Q, Q>;

// Monotone polyline from (0,0) to (1,1) in the unit square: both coordinates
// weakly increasing vertex-to-vertex, so the curve never goes down and may
// contain horizontal and vertical segments. Canonical form removes collinear
// interior vertices; equality is equality of closed images.
class StaircaseCurve {
public:
    explicit StaircaseCurve(std::vector<PlanarPoint> vertices);

    static StaircaseCurve diagonal() {
        return StaircaseCurve({{Q(0), Q(0)}, {Q(1), Q(1)}});
    }

    const std::vector<PlanarPoint>& vertices() const { return vertices_; }

    bool operator==(const StaircaseCurve& o) const { return vertices_ == o.vertices_; }
    std::strong_ordering operator<=>(const StaircaseCurve& o) const;

private:
    std::vector<PlanarPoint> vertices_;
};

// Max over the curve of |x - y|; x - y is affine on each segment, so the max
// sits at a vertex.
Q diag_deviation(const StaircaseCurve& f);

// L-infinity distance from a point to the curve, exact.
Q point_to_curve(const PlanarPoint& p, const StaircaseCurve& g);

// Exact Hausdorff distance under the L-infinity metric on the square.
Q curve_hausdorff(const StaircaseCurve& f1, const StaircaseCurve& f2);

// Sound lower bound from vertex scans alone (vertices lie on the curves).
Q curve_vertex_lower_bound(const StaircaseCurve& f1, const StaircaseCurve& f2);

// Decision form with sound shortcuts: true iff curve_hausdorff >= bound.
bool curve_hausdorff_at_least(const StaircaseCurve& f1, const StaircaseCurve& f2,
                              const Q& bound);

}  // namespace hsdyn
