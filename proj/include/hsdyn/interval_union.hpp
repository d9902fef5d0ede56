#pragma once

#include "hsdyn/rational.hpp"

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace hsdyn {

// A nonempty closed subset of [0,1] stored as sorted, strictly disjoint
// closed intervals. Degenerate intervals (a == b) are points. The class
// canonicalizes on construction: sorted, touching/overlapping intervals
// merged, so b_i < a_{i+1} holds between neighbours.
class IntervalUnion {
public:
    using Interval = std::pair<Q, Q>;

    // Throws EmptyInput / OutOfRange per the normalize contract.
    explicit IntervalUnion(std::vector<Interval> raw);

    static IntervalUnion point(const Q& x) { return IntervalUnion({{x, x}}); }
    static IntervalUnion whole() { return IntervalUnion({{Q(0), Q(1)}}); }

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t component_count() const { return intervals_.size(); }

    const Q& min() const { return intervals_.front().first; }
    const Q& max() const { return intervals_.back().second; }
    Q diameter() const { return max() - min(); }

    bool contains(const Q& x) const;
    // Distance from a point to the set (0 when inside).
    Q distance_to(const Q& x) const;

    bool operator==(const IntervalUnion& o) const { return intervals_ == o.intervals_; }
    // Total order used for canonical sorting of family members and nodes.
    std::strong_ordering operator<=>(const IntervalUnion& o) const;

private:
    std::vector<Interval> intervals_;
};

// Canonical form of a raw interval list.
IntervalUnion normalize(std::vector<IntervalUnion::Interval> raw);

// Exact Hausdorff distance for the Euclidean metric on [0,1]. The sup of
// d(.,B) over A is attained at an endpoint of A or at a midpoint of a gap of
// B lying inside A; both directions enumerate those candidates.
Q hausdorff(const IntervalUnion& a, const IntervalUnion& b);

// True iff hausdorff(a, b) <= eps; exits early on the first witness of
// violation (sound, exact).
bool within_hausdorff(const IntervalUnion& a, const IntervalUnion& b, const Q& eps);

std::optional<IntervalUnion> intersect(const IntervalUnion& a, const IntervalUnion& b);
inline bool meets(const IntervalUnion& a, const IntervalUnion& b) {
    return intersect(a, b).has_value();
}
IntervalUnion union_of(const IntervalUnion& a, const IntervalUnion& b);
bool subset_of(const IntervalUnion& a, const IntervalUnion& b);

// Closed set {x : d(x, s) >= delta}; empty for large delta.
std::optional<IntervalUnion> far_set(const IntervalUnion& s, const Q& delta);

// Tuple of interval unions covering [0,1]; the simplex family consists of
// chains ([0,x1],[x1,x2],...,[xn,1]).
class CoverTuple {
public:
    explicit CoverTuple(std::vector<IntervalUnion> parts);

    static CoverTuple simplex_chain(const std::vector<Q>& cuts);

    const std::vector<IntervalUnion>& parts() const { return parts_; }
    std::size_t arity() const { return parts_.size(); }

    bool is_cover() const;
    bool is_simplex_chain() const;

    bool operator==(const CoverTuple& o) const { return parts_ == o.parts_; }

private:
    std::vector<IntervalUnion> parts_;
};

// Max part diameter; throws NotACover when the parts do not union to [0,1].
Q mesh(const CoverTuple& c);

}  // namespace hsdyn
