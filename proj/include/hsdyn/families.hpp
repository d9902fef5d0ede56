#pragma once

#include "hsdyn/interval_union.hpp"
#include "hsdyn/pl_homeo.hpp"
#include "hsdyn/rational.hpp"
#include "hsdyn/staircase.hpp"

#include <compare>
#include <vector>

namespace hsdyn {

// gF = {(x, g y) : (x, y) in F}: the action on the square that leaves the
// first coordinate alone. Requires an increasing g so the result is again a
// staircase curve.
StaircaseCurve act_curve(const PLHomeo& g, const StaircaseCurve& f);

// Tuple of interval unions, a point of (Exp X)^n.
class SetFamilyTuple {
public:
    explicit SetFamilyTuple(std::vector<IntervalUnion> parts);

    const std::vector<IntervalUnion>& parts() const { return parts_; }
    std::size_t arity() const { return parts_.size(); }

    bool operator==(const SetFamilyTuple& o) const { return parts_ == o.parts_; }
    std::strong_ordering operator<=>(const SetFamilyTuple& o) const;

private:
    std::vector<IntervalUnion> parts_;
};

// Coordinatewise image under g.
SetFamilyTuple act_tuple(const PLHomeo& g, const SetFamilyTuple& t);

// max over coordinates of the interval-union Hausdorff distance; throws
// ArityMismatch.
Q tuple_dist(const SetFamilyTuple& a, const SetFamilyTuple& b);

// Finite set of staircase curves, a point of Exp R. Members are kept sorted
// and deduplicated, so equality is set equality.
class CurveFamily {
public:
    explicit CurveFamily(std::vector<StaircaseCurve> members);

    const std::vector<StaircaseCurve>& members() const { return members_; }
    bool contains(const StaircaseCurve& c) const;

    bool operator==(const CurveFamily& o) const { return members_ == o.members_; }
    std::strong_ordering operator<=>(const CurveFamily& o) const;

private:
    std::vector<StaircaseCurve> members_;
};

CurveFamily act_family(const PLHomeo& g, const CurveFamily& q);

// Finite set of tuples of common arity, a point of Exp Y_n.
class TupleFamily {
public:
    explicit TupleFamily(std::vector<SetFamilyTuple> members);

    const std::vector<SetFamilyTuple>& members() const { return members_; }
    std::size_t arity() const { return members_.front().arity(); }
    bool contains(const SetFamilyTuple& t) const;

    bool operator==(const TupleFamily& o) const { return members_ == o.members_; }
    std::strong_ordering operator<=>(const TupleFamily& o) const;

private:
    std::vector<SetFamilyTuple> members_;
};

TupleFamily act_family(const PLHomeo& g, const TupleFamily& q);

// Hausdorff distance between finite families induced by the member metric.
Q family_hausdorff(const CurveFamily& q1, const CurveFamily& q2);
Q family_hausdorff(const TupleFamily& q1, const TupleFamily& q2);

// Decision form: true iff family_hausdorff(q1, q2) >= bound. Uses sound
// exact lower bounds before falling back to the full computation.
bool family_separation_at_least(const CurveFamily& q1, const CurveFamily& q2,
                                const Q& bound);
bool family_separation_at_least(const TupleFamily& q1, const TupleFamily& q2,
                                const Q& bound);

}  // namespace hsdyn
