#include "hsdyn/interval_union.hpp"

#include <algorithm>

namespace hsdyn {

IntervalUnion::IntervalUnion(std::vector<Interval> raw) {
    if (raw.empty()) throw Error(ErrorCode::EmptyInput, "interval union must be nonempty");
    for (auto& [a, b] : raw) {
        if (b < a) std::swap(a, b);
        if (a < 0 || b > 1)
            throw Error(ErrorCode::OutOfRange, "interval endpoint outside [0,1]");
    }
    std::sort(raw.begin(), raw.end());
    intervals_.push_back(raw.front());
    for (std::size_t i = 1; i < raw.size(); ++i) {
        auto& last = intervals_.back();
        if (raw[i].first <= last.second) {
            if (last.second < raw[i].second) last.second = raw[i].second;
        } else {
            intervals_.push_back(raw[i]);
        }
    }
}

bool IntervalUnion::contains(const Q& x) const {
    for (const auto& [a, b] : intervals_) {
        if (x < a) return false;
        if (x <= b) return true;
    }
    return false;
}

Q IntervalUnion::distance_to(const Q& x) const {
    // intervals sorted and disjoint: binary search for the first interval
    // whose right end is >= x.
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), x,
                               [](const Interval& iv, const Q& v) { return iv.second < v; });
    if (it == intervals_.end()) return x - intervals_.back().second;
    if (x >= it->first) return Q(0);
    Q right = it->first - x;
    if (it == intervals_.begin()) return right;
    Q left = x - std::prev(it)->second;
    return q_min(left, right);
}

std::strong_ordering IntervalUnion::operator<=>(const IntervalUnion& o) const {
    const auto& a = intervals_;
    const auto& b = o.intervals_;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first)
            return a[i].first < b[i].first ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
        if (a[i].second != b[i].second)
            return a[i].second < b[i].second ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
    }
    return a.size() <=> b.size();
}

IntervalUnion normalize(std::vector<IntervalUnion::Interval> raw) {
    return IntervalUnion(std::move(raw));
}

namespace {

// One-sided sup_{x in a} d(x, b), candidates: endpoints of a, midpoints of
// b's gaps inside a.
Q directed_hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
    Q best(0);
    for (const auto& [lo, hi] : a.intervals()) {
        best = q_max(best, b.distance_to(lo));
        best = q_max(best, b.distance_to(hi));
    }
    const auto& bi = b.intervals();
    for (std::size_t i = 0; i + 1 < bi.size(); ++i) {
        Q mid = (bi[i].second + bi[i + 1].first) / 2;
        if (a.contains(mid)) best = q_max(best, b.distance_to(mid));
    }
    return best;
}

bool directed_within(const IntervalUnion& a, const IntervalUnion& b, const Q& eps) {
    for (const auto& [lo, hi] : a.intervals()) {
        if (b.distance_to(lo) > eps || b.distance_to(hi) > eps) return false;
    }
    const auto& bi = b.intervals();
    for (std::size_t i = 0; i + 1 < bi.size(); ++i) {
        Q mid = (bi[i].second + bi[i + 1].first) / 2;
        if (a.contains(mid) && b.distance_to(mid) > eps) return false;
    }
    return true;
}

}  // namespace

Q hausdorff(const IntervalUnion& a, const IntervalUnion& b) {
    return q_max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

bool within_hausdorff(const IntervalUnion& a, const IntervalUnion& b, const Q& eps) {
    if (a.min() > b.min() + eps || b.min() > a.min() + eps) return false;
    if (a.max() > b.max() + eps || b.max() > a.max() + eps) return false;
    return directed_within(a, b, eps) && directed_within(b, a, eps);
}

std::optional<IntervalUnion> intersect(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<IntervalUnion::Interval> out;
    const auto& ai = a.intervals();
    const auto& bi = b.intervals();
    std::size_t i = 0, j = 0;
    while (i < ai.size() && j < bi.size()) {
        const Q& lo = q_max(ai[i].first, bi[j].first);
        const Q& hi = q_min(ai[i].second, bi[j].second);
        if (lo <= hi) out.push_back({lo, hi});
        if (ai[i].second < bi[j].second)
            ++i;
        else
            ++j;
    }
    if (out.empty()) return std::nullopt;
    return IntervalUnion(std::move(out));
}

IntervalUnion union_of(const IntervalUnion& a, const IntervalUnion& b) {
    auto raw = a.intervals();
    raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
    return IntervalUnion(std::move(raw));
}

bool subset_of(const IntervalUnion& a, const IntervalUnion& b) {
    auto cap = intersect(a, b);
    return cap.has_value() && *cap == a;
}

std::optional<IntervalUnion> far_set(const IntervalUnion& s, const Q& delta) {
    // complement of the open delta-neighbourhood of s, clipped to [0,1]
    std::vector<IntervalUnion::Interval> out;
    const auto& iv = s.intervals();
    Q left_end = iv.front().first - delta;
    if (left_end >= 0) out.push_back({Q(0), left_end});
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
        Q lo = iv[i].second + delta;
        Q hi = iv[i + 1].first - delta;
        if (lo <= hi) out.push_back({lo, hi});
    }
    Q right_end = iv.back().second + delta;
    if (right_end <= 1) out.push_back({right_end, Q(1)});
    if (out.empty()) return std::nullopt;
    return IntervalUnion(std::move(out));
}

CoverTuple::CoverTuple(std::vector<IntervalUnion> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::EmptyInput, "cover tuple must have parts");
}

CoverTuple CoverTuple::simplex_chain(const std::vector<Q>& cuts) {
    std::vector<IntervalUnion> parts;
    Q prev(0);
    for (const Q& x : cuts) {
        if (x < prev || x > 1)
            throw Error(ErrorCode::OutOfRange, "simplex cuts must be nondecreasing in [0,1]");
        parts.push_back(IntervalUnion({{prev, x}}));
        prev = x;
    }
    parts.push_back(IntervalUnion({{prev, Q(1)}}));
    return CoverTuple(std::move(parts));
}

bool CoverTuple::is_cover() const {
    IntervalUnion u = parts_.front();
    for (std::size_t i = 1; i < parts_.size(); ++i) u = union_of(u, parts_[i]);
    return u == IntervalUnion::whole();
}

bool CoverTuple::is_simplex_chain() const {
    Q prev(0);
    for (const auto& p : parts_) {
        if (p.component_count() != 1) return false;
        if (p.min() != prev) return false;
        prev = p.max();
    }
    return prev == 1;
}

Q mesh(const CoverTuple& c) {
    if (!c.is_cover())
        throw Error(ErrorCode::NotACover, "parts do not union to [0,1]");
    Q best(0);
    for (const auto& p : c.parts()) best = q_max(best, p.diameter());
    return best;
}

}  // namespace hsdyn
