#include "hsdyn/staircase.hpp"

#include "hsdyn/plfun.hpp"

#include <algorithm>

namespace hsdyn {

namespace {

bool collinear(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
    return (c.second - a.second) * (b.first - a.first) ==
           (b.second - a.second) * (c.first - a.first);
}

}  // namespace

StaircaseCurve::StaircaseCurve(std::vector<PlanarPoint> vertices) {
    if (vertices.size() < 2)
        throw Error(ErrorCode::EmptyInput, "staircase curve needs at least two vertices");
    if (vertices.front() != PlanarPoint{Q(0), Q(0)} ||
        vertices.back() != PlanarPoint{Q(1), Q(1)})
        throw Error(ErrorCode::OutOfRange, "staircase curve must run from (0,0) to (1,1)");
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        if (vertices[i].first < vertices[i - 1].first ||
            vertices[i].second < vertices[i - 1].second)
            throw Error(ErrorCode::OutOfRange, "staircase curve must never go down");
    }
    // endpoints plus monotonicity already confine the curve to the square
    // canonical image: drop repeats and collinear interior vertices
    for (const auto& v : vertices) {
        if (!vertices_.empty() && vertices_.back() == v) continue;
        while (vertices_.size() >= 2 &&
               collinear(vertices_[vertices_.size() - 2], vertices_.back(), v)) {
            vertices_.pop_back();
        }
        vertices_.push_back(v);
    }
}

std::strong_ordering StaircaseCurve::operator<=>(const StaircaseCurve& o) const {
    const auto& a = vertices_;
    const auto& b = o.vertices_;
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

Q diag_deviation(const StaircaseCurve& f) {
    Q best(0);
    for (const auto& [x, y] : f.vertices()) best = q_max(best, q_abs(x - y));
    return best;
}

namespace {

// L-infinity distance from a fixed point to one segment [c, d].
Q point_to_segment(const PlanarPoint& p, const PlanarPoint& c, const PlanarPoint& d) {
    Q alpha = p.first - c.first;
    Q beta = p.second - c.second;
    Q wx = d.first - c.first;
    Q wy = d.second - c.second;

    auto value_at = [&](const Q& s) {
        return q_max(q_abs(alpha - s * wx), q_abs(beta - s * wy));
    };
    auto clamp = [](const Q& s) { return s < 0 ? Q(0) : (s > 1 ? Q(1) : s); };

    // convex in s: the min over [0,1] sits at a boundary or a kink
    Q best = q_min(value_at(Q(0)), value_at(Q(1)));
    if (wx != wy) best = q_min(best, value_at(clamp((alpha - beta) / (wx - wy))));
    if (wx + wy != 0) best = q_min(best, value_at(clamp((alpha + beta) / (wx + wy))));
    if (wx != 0) best = q_min(best, value_at(clamp(alpha / wx)));
    if (wy != 0) best = q_min(best, value_at(clamp(beta / wy)));
    return best;
}

// Bounding-box lower bound for the distance between a segment and a segment.
Q box_gap(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
          const PlanarPoint& d) {
    // monotone segments: boxes are [a, b] and [c, d] componentwise
    Q gx(0), gy(0);
    if (c.first > b.first) gx = c.first - b.first;
    if (a.first > d.first) gx = a.first - d.first;
    if (c.second > b.second) gy = c.second - b.second;
    if (a.second > d.second) gy = a.second - d.second;
    return q_max(gx, gy);
}

// d(gamma(t), sigma) as an exact PL function of t, where gamma runs over the
// segment [a, b] of the fixed curve and sigma = [c, d]. Convex in t; built
// from the kink/boundary candidate set of the inner minimization.
PLFun segment_distance_fun(const PlanarPoint& a, const PlanarPoint& b,
                           const PlanarPoint& c, const PlanarPoint& d) {
    PLFun alpha = PLFun::affine(a.first - c.first, b.first - c.first);
    PLFun beta = PLFun::affine(a.second - c.second, b.second - c.second);
    Q wx = d.first - c.first;
    Q wy = d.second - c.second;

    auto with_s = [&](const PLFun& s) {
        PLFun d1 = alpha - s.scaled(wx);
        PLFun d2 = beta - s.scaled(wy);
        return PLFun::max(d1.abs(), d2.abs());
    };

    PLFun result = with_s(PLFun::constant(Q(0)));
    result = PLFun::min(result, with_s(PLFun::constant(Q(1))));
    if (wx != wy)
        result = PLFun::min(result, with_s((alpha - beta).scaled(Q(1) / (wx - wy)).clamp01()));
    if (wx + wy != 0)
        result = PLFun::min(result, with_s((alpha + beta).scaled(Q(1) / (wx + wy)).clamp01()));
    if (wx != 0) result = PLFun::min(result, with_s(alpha.scaled(Q(1) / wx).clamp01()));
    if (wy != 0) result = PLFun::min(result, with_s(beta.scaled(Q(1) / wy).clamp01()));
    return result;
}

// One-sided sup over f of d(., g).
Q directed_curve_sup(const StaircaseCurve& f, const StaircaseCurve& g) {
    const auto& fv = f.vertices();
    const auto& gv = g.vertices();

    Q best(0);
    std::vector<Q> vertex_dist(fv.size());
    for (std::size_t i = 0; i < fv.size(); ++i) {
        vertex_dist[i] = point_to_curve(fv[i], g);
        best = q_max(best, vertex_dist[i]);
    }

    // Interior maxima can exceed vertex values only where the nearest feature
    // of g changes; the distance field is 1-Lipschitz, which bounds how much.
    // Processing the most promising segments first tightens the prune.
    std::vector<std::pair<Q, std::size_t>> tents;
    for (std::size_t i = 0; i + 1 < fv.size(); ++i) {
        Q len = q_max(fv[i + 1].first - fv[i].first, fv[i + 1].second - fv[i].second);
        Q tent = (vertex_dist[i] + vertex_dist[i + 1] + len) / 2;
        if (tent > best) tents.push_back({tent, i});
    }
    std::sort(tents.begin(), tents.end(),
              [](const auto& x, const auto& y) { return y.first < x.first; });

    for (const auto& [tent, i] : tents) {
        if (tent <= best) continue;
        const auto& a = fv[i];
        const auto& b = fv[i + 1];
        bool have = false;
        PLFun envelope = PLFun::constant(Q(0));
        for (std::size_t j = 0; j + 1 < gv.size(); ++j) {
            if (box_gap(a, b, gv[j], gv[j + 1]) > tent) continue;
            PLFun dj = segment_distance_fun(a, b, gv[j], gv[j + 1]);
            envelope = have ? PLFun::min(envelope, dj) : dj;
            have = true;
        }
        if (have) best = q_max(best, envelope.max_value());
    }
    return best;
}

}  // namespace

Q point_to_curve(const PlanarPoint& p, const StaircaseCurve& g) {
    const auto& gv = g.vertices();
    Q best = point_to_segment(p, gv[0], gv[1]);
    for (std::size_t j = 1; j + 1 < gv.size(); ++j) {
        if (best == 0) break;
        if (box_gap(p, p, gv[j], gv[j + 1]) >= best) continue;
        best = q_min(best, point_to_segment(p, gv[j], gv[j + 1]));
    }
    return best;
}

Q curve_hausdorff(const StaircaseCurve& f1, const StaircaseCurve& f2) {
    return q_max(directed_curve_sup(f1, f2), directed_curve_sup(f2, f1));
}

Q curve_vertex_lower_bound(const StaircaseCurve& f1, const StaircaseCurve& f2) {
    Q best(0);
    for (const auto& v : f1.vertices()) best = q_max(best, point_to_curve(v, f2));
    for (const auto& v : f2.vertices()) best = q_max(best, point_to_curve(v, f1));
    return best;
}

bool curve_hausdorff_at_least(const StaircaseCurve& f1, const StaircaseCurve& f2,
                              const Q& bound) {
    if (bound <= 0) return true;
    for (const auto& v : f1.vertices())
        if (point_to_curve(v, f2) >= bound) return true;
    for (const auto& v : f2.vertices())
        if (point_to_curve(v, f1) >= bound) return true;
    return curve_hausdorff(f1, f2) >= bound;
}

}  // namespace hsdyn
