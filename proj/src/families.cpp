#include "hsdyn/families.hpp"

#include <algorithm>

namespace hsdyn {

StaircaseCurve act_curve(const PLHomeo& g, const StaircaseCurve& f) {
    if (!g.orientation_preserving())
        throw Error(ErrorCode::OutOfRange, "curve action requires an increasing element");
    const auto& vs = f.vertices();
    std::vector<PlanarPoint> out;
    out.reserve(vs.size() + g.breakpoints().size());
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            // split the incoming segment where it crosses g's breakpoint levels
            const auto& a = vs[i - 1];
            const auto& b = vs[i];
            if (a.second < b.second) {
                for (const auto& bp : g.breakpoints()) {
                    const Q& level = bp.first;
                    if (level > a.second && level < b.second) {
                        Q x = a.first + (b.first - a.first) * (level - a.second) /
                                            (b.second - a.second);
                        out.push_back({x, bp.second});
                    }
                }
            }
        }
        out.push_back({vs[i].first, eval(g, vs[i].second)});
    }
    return StaircaseCurve(std::move(out));
}

SetFamilyTuple::SetFamilyTuple(std::vector<IntervalUnion> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::EmptyInput, "tuple must have arity >= 1");
}

std::strong_ordering SetFamilyTuple::operator<=>(const SetFamilyTuple& o) const {
    for (std::size_t i = 0; i < parts_.size() && i < o.parts_.size(); ++i) {
        if (auto c = parts_[i] <=> o.parts_[i]; c != 0) return c;
    }
    return parts_.size() <=> o.parts_.size();
}

SetFamilyTuple act_tuple(const PLHomeo& g, const SetFamilyTuple& t) {
    std::vector<IntervalUnion> out;
    out.reserve(t.arity());
    for (const auto& p : t.parts()) out.push_back(image(g, p));
    return SetFamilyTuple(std::move(out));
}

Q tuple_dist(const SetFamilyTuple& a, const SetFamilyTuple& b) {
    if (a.arity() != b.arity())
        throw Error(ErrorCode::ArityMismatch, "tuples have different arity");
    Q best(0);
    for (std::size_t i = 0; i < a.arity(); ++i)
        best = q_max(best, hausdorff(a.parts()[i], b.parts()[i]));
    return best;
}

namespace {

template <typename T>
std::vector<T> canonical_members(std::vector<T> members) {
    if (members.empty())
        throw Error(ErrorCode::EmptyInput, "family must be nonempty");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return members;
}

template <typename T, typename Dist>
Q family_hausdorff_impl(const std::vector<T>& q1, const std::vector<T>& q2, Dist&& dist) {
    // the member metric is symmetric: one matrix serves both directed sups
    std::vector<std::vector<Q>> d(q1.size(), std::vector<Q>(q2.size()));
    for (std::size_t i = 0; i < q1.size(); ++i)
        for (std::size_t j = 0; j < q2.size(); ++j) d[i][j] = dist(q1[i], q2[j]);
    Q best(0);
    for (std::size_t i = 0; i < q1.size(); ++i) {
        Q nearest = d[i][0];
        for (std::size_t j = 1; j < q2.size() && nearest > 0; ++j)
            nearest = q_min(nearest, d[i][j]);
        best = q_max(best, nearest);
    }
    for (std::size_t j = 0; j < q2.size(); ++j) {
        Q nearest = d[0][j];
        for (std::size_t i = 1; i < q1.size() && nearest > 0; ++i)
            nearest = q_min(nearest, d[i][j]);
        best = q_max(best, nearest);
    }
    return best;
}

}  // namespace

CurveFamily::CurveFamily(std::vector<StaircaseCurve> members)
    : members_(canonical_members(std::move(members))) {}

bool CurveFamily::contains(const StaircaseCurve& c) const {
    return std::binary_search(members_.begin(), members_.end(), c);
}

std::strong_ordering CurveFamily::operator<=>(const CurveFamily& o) const {
    for (std::size_t i = 0; i < members_.size() && i < o.members_.size(); ++i) {
        if (auto c = members_[i] <=> o.members_[i]; c != 0) return c;
    }
    return members_.size() <=> o.members_.size();
}

CurveFamily act_family(const PLHomeo& g, const CurveFamily& q) {
    std::vector<StaircaseCurve> out;
    out.reserve(q.members().size());
    for (const auto& m : q.members()) out.push_back(act_curve(g, m));
    return CurveFamily(std::move(out));
}

TupleFamily::TupleFamily(std::vector<SetFamilyTuple> members)
    : members_(canonical_members(std::move(members))) {
    for (const auto& m : members_) {
        if (m.arity() != members_.front().arity())
            throw Error(ErrorCode::ArityMismatch, "family members must share arity");
    }
}

bool TupleFamily::contains(const SetFamilyTuple& t) const {
    return std::binary_search(members_.begin(), members_.end(), t);
}

std::strong_ordering TupleFamily::operator<=>(const TupleFamily& o) const {
    for (std::size_t i = 0; i < members_.size() && i < o.members_.size(); ++i) {
        if (auto c = members_[i] <=> o.members_[i]; c != 0) return c;
    }
    return members_.size() <=> o.members_.size();
}

TupleFamily act_family(const PLHomeo& g, const TupleFamily& q) {
    std::vector<SetFamilyTuple> out;
    out.reserve(q.members().size());
    for (const auto& m : q.members()) out.push_back(act_tuple(g, m));
    return TupleFamily(std::move(out));
}

Q family_hausdorff(const CurveFamily& q1, const CurveFamily& q2) {
    return family_hausdorff_impl(q1.members(), q2.members(),
                                 [](const StaircaseCurve& a, const StaircaseCurve& b) {
                                     return curve_hausdorff(a, b);
                                 });
}

Q family_hausdorff(const TupleFamily& q1, const TupleFamily& q2) {
    if (q1.arity() != q2.arity())
        throw Error(ErrorCode::ArityMismatch, "families have different arity");
    return family_hausdorff_impl(q1.members(), q2.members(),
                                 [](const SetFamilyTuple& a, const SetFamilyTuple& b) {
                                     return tuple_dist(a, b);
                                 });
}

bool family_separation_at_least(const CurveFamily& q1, const CurveFamily& q2,
                                const Q& bound) {
    if (bound <= 0) return true;
    // a point (x,y) with |x-y| = c sits c/2 from the diagonal, so a family
    // containing the diagonal is >= bound from any family whose members all
    // deviate by at least 2*bound
    StaircaseCurve diag = StaircaseCurve::diagonal();
    auto diagonal_witness = [&](const CurveFamily& with_diag, const CurveFamily& other) {
        if (!with_diag.contains(diag)) return false;
        for (const auto& v : other.members())
            if (diag_deviation(v) < 2 * bound) return false;
        return true;
    };
    if (diagonal_witness(q1, q2) || diagonal_witness(q2, q1)) return true;

    // a member of q1 with every q2-member >= bound away witnesses the
    // directed sup; vertex scans give sound lower bounds per pair, so this
    // phase never computes a full distance
    auto cheap_witness = [&](const std::vector<StaircaseCurve>& from,
                             const std::vector<StaircaseCurve>& to) {
        for (const auto& u : from) {
            bool all_far = true;
            for (const auto& v : to) {
                if (curve_vertex_lower_bound(u, v) < bound) {
                    all_far = false;
                    break;
                }
            }
            if (all_far) return true;
        }
        return false;
    };
    if (cheap_witness(q1.members(), q2.members())) return true;
    if (cheap_witness(q2.members(), q1.members())) return true;
    return family_hausdorff(q1, q2) >= bound;
}

bool family_separation_at_least(const TupleFamily& q1, const TupleFamily& q2,
                                const Q& bound) {
    return family_hausdorff(q1, q2) >= bound;
}

}  // namespace hsdyn
