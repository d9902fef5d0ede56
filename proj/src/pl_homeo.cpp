#include "hsdyn/pl_homeo.hpp"

#include <algorithm>

namespace hsdyn {

namespace {

bool collinear(const PLHomeo::Breakpoint& a, const PLHomeo::Breakpoint& b,
               const PLHomeo::Breakpoint& c) {
    return (c.second - a.second) * (b.first - a.first) ==
           (b.second - a.second) * (c.first - a.first);
}

}  // namespace

PLHomeo::PLHomeo(std::vector<Breakpoint> breakpoints) {
    if (breakpoints.size() < 2)
        throw Error(ErrorCode::EmptyInput, "PL homeo needs at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (breakpoints[i].first <= breakpoints[i - 1].first)
            throw Error(ErrorCode::OutOfRange, "breakpoint x-coordinates must increase");
    }
    if (breakpoints.front().first != 0 || breakpoints.back().first != 1)
        throw Error(ErrorCode::OutOfRange, "domain must be [0,1]");

    increasing_ = breakpoints.front().second < breakpoints.back().second;
    if (increasing_) {
        if (breakpoints.front().second != 0 || breakpoints.back().second != 1)
            throw Error(ErrorCode::OutOfRange, "increasing element must fix 0 and 1");
        for (std::size_t i = 1; i < breakpoints.size(); ++i)
            if (breakpoints[i].second <= breakpoints[i - 1].second)
                throw Error(ErrorCode::OutOfRange, "values must strictly increase");
    } else {
        if (breakpoints.front().second != 1 || breakpoints.back().second != 0)
            throw Error(ErrorCode::OutOfRange, "decreasing element must swap 0 and 1");
        for (std::size_t i = 1; i < breakpoints.size(); ++i)
            if (breakpoints[i].second >= breakpoints[i - 1].second)
                throw Error(ErrorCode::OutOfRange, "values must strictly decrease");
    }

    for (const auto& bp : breakpoints) {
        while (breakpoints_.size() >= 2 &&
               collinear(breakpoints_[breakpoints_.size() - 2], breakpoints_.back(), bp)) {
            breakpoints_.pop_back();
        }
        breakpoints_.push_back(bp);
    }
}

bool PLHomeo::is_identity() const {
    return breakpoints_.size() == 2 && increasing_;
}

Q PLHomeo::operator()(const Q& x) const { return eval(*this, x); }

std::strong_ordering PLHomeo::operator<=>(const PLHomeo& o) const {
    const auto& a = breakpoints_;
    const auto& b = o.breakpoints_;
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

Q eval(const PLHomeo& g, const Q& x) {
    if (x < 0 || x > 1) throw Error(ErrorCode::OutOfRange, "eval outside [0,1]");
    const auto& bp = g.breakpoints();
    auto it = std::lower_bound(bp.begin(), bp.end(), x,
                               [](const PLHomeo::Breakpoint& p, const Q& v) {
                                   return p.first < v;
                               });
    if (it->first == x) return it->second;
    const auto& hi = *it;
    const auto& lo = *std::prev(it);
    return lo.second + (hi.second - lo.second) * (x - lo.first) / (hi.first - lo.first);
}

PLHomeo inverse(const PLHomeo& g) {
    std::vector<PLHomeo::Breakpoint> out;
    out.reserve(g.breakpoints().size());
    for (const auto& [x, y] : g.breakpoints()) out.push_back({y, x});
    if (!g.orientation_preserving()) std::reverse(out.begin(), out.end());
    return PLHomeo(std::move(out));
}

PLHomeo compose(const PLHomeo& g, const PLHomeo& h) {
    // grid: h's breakpoints plus h-preimages of g's breakpoint abscissae
    std::vector<Q> xs;
    for (const auto& bp : h.breakpoints()) xs.push_back(bp.first);
    PLHomeo hinv = inverse(h);
    for (const auto& bp : g.breakpoints()) xs.push_back(eval(hinv, bp.first));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<PLHomeo::Breakpoint> out;
    out.reserve(xs.size());
    for (const Q& x : xs) out.push_back({x, eval(g, eval(h, x))});
    return PLHomeo(std::move(out));
}

IntervalUnion preimage(const PLHomeo& g, const IntervalUnion& a) {
    PLHomeo ginv = inverse(g);
    std::vector<IntervalUnion::Interval> out;
    out.reserve(a.component_count());
    for (const auto& [lo, hi] : a.intervals())
        out.push_back({eval(ginv, lo), eval(ginv, hi)});  // ctor reorders if reversed
    return IntervalUnion(std::move(out));
}

IntervalUnion image(const PLHomeo& g, const IntervalUnion& a) {
    std::vector<IntervalUnion::Interval> out;
    out.reserve(a.component_count());
    for (const auto& [lo, hi] : a.intervals()) out.push_back({eval(g, lo), eval(g, hi)});
    return IntervalUnion(std::move(out));
}

std::pair<Q, Q> sup_dist_witness(const PLHomeo& f, const PLHomeo& g) {
    std::vector<Q> xs;
    for (const auto& bp : f.breakpoints()) xs.push_back(bp.first);
    for (const auto& bp : g.breakpoints()) xs.push_back(bp.first);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    Q best(0), arg(0);
    for (const Q& x : xs) {
        Q d = q_abs(eval(f, x) - eval(g, x));
        if (d > best) {
            best = d;
            arg = x;
        }
    }
    return {best, arg};
}

Q sup_dist(const PLHomeo& f, const PLHomeo& g) { return sup_dist_witness(f, g).first; }

StaircaseCurve graph(const PLHomeo& g) {
    if (!g.orientation_preserving())
        throw Error(ErrorCode::OutOfRange,
                    "graph as a staircase curve requires an increasing element");
    std::vector<PlanarPoint> pts(g.breakpoints().begin(), g.breakpoints().end());
    return StaircaseCurve(std::move(pts));
}

FarnessCertificate farness(const std::vector<PLHomeo>& a, const std::vector<PLHomeo>& b) {
    if (a.empty() || b.empty())
        throw Error(ErrorCode::EmptyInput, "farness needs nonempty sets");
    FarnessCertificate cert;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto [d, x] = sup_dist_witness(a[i], b[j]);
            if (d == 0)
                throw Error(ErrorCode::NotFar, "sets share an element, not far");
            cert.witnesses.push_back({i, j, x, d});
            if (first || d < cert.two_delta) cert.two_delta = d;
            first = false;
        }
    }
    return cert;
}

}  // namespace hsdyn
