#include "hsdyn/plfun.hpp"

#include <algorithm>
#include <cassert>

namespace hsdyn {

namespace {

Q interp(const PLFun::Point& a, const PLFun::Point& b, const Q& t) {
    if (a.first == b.first) return a.second;
    return a.second + (b.second - a.second) * (t - a.first) / (b.first - a.first);
}

// Drop interior points collinear with their neighbours.
std::vector<PLFun::Point> simplify(std::vector<PLFun::Point> pts) {
    std::vector<PLFun::Point> out;
    for (const auto& p : pts) {
        while (out.size() >= 2) {
            const auto& a = out[out.size() - 2];
            const auto& b = out.back();
            // b on segment [a, p]?
            if ((p.second - a.second) * (b.first - a.first) ==
                (b.second - a.second) * (p.first - a.first)) {
                out.pop_back();
            } else {
                break;
            }
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

PLFun PLFun::from_points(std::vector<Point> pts) {
    assert(!pts.empty());
    assert(pts.front().first == 0 && pts.back().first == 1);
    for (std::size_t i = 1; i < pts.size(); ++i) assert(pts[i - 1].first < pts[i].first);
    return PLFun(simplify(std::move(pts)));
}

Q PLFun::operator()(const Q& t) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), t,
                               [](const Point& p, const Q& v) { return p.first < v; });
    if (it == pts_.end()) return pts_.back().second;
    if (it->first == t) return it->second;
    return interp(*std::prev(it), *it, t);
}

PLFun PLFun::scaled(const Q& c) const {
    auto pts = pts_;
    for (auto& p : pts) p.second *= c;
    return PLFun(simplify(std::move(pts)));
}

PLFun PLFun::shifted(const Q& c) const {
    auto pts = pts_;
    for (auto& p : pts) p.second += c;
    return PLFun(std::move(pts));
}

PLFun PLFun::abs() const {
    std::vector<Point> out;
    out.push_back({pts_.front().first, q_abs(pts_.front().second)});
    for (std::size_t i = 1; i < pts_.size(); ++i) {
        const auto& a = pts_[i - 1];
        const auto& b = pts_[i];
        if ((a.second < 0 && b.second > 0) || (a.second > 0 && b.second < 0)) {
            Q t0 = a.first + (b.first - a.first) * (-a.second) / (b.second - a.second);
            out.push_back({t0, Q(0)});
        }
        out.push_back({b.first, q_abs(b.second)});
    }
    return PLFun(simplify(std::move(out)));
}

PLFun PLFun::clamp01() const {
    return PLFun::min(PLFun::max(*this, PLFun::constant(Q(0))), PLFun::constant(Q(1)));
}

namespace {

// Merge breakpoint grids and combine values; `pick` selects the output value
// on each cell and inserts crossings when needed.
template <typename Combine>
PLFun merge(const PLFun& f, const PLFun& g, Combine&& combine, bool insert_crossings) {
    const auto& fp = f.points();
    const auto& gp = g.points();
    std::vector<Q> grid;
    grid.reserve(fp.size() + gp.size());
    {
        std::size_t i = 0, j = 0;
        while (i < fp.size() || j < gp.size()) {
            if (j >= gp.size() || (i < fp.size() && fp[i].first <= gp[j].first)) {
                if (grid.empty() || grid.back() != fp[i].first) grid.push_back(fp[i].first);
                ++i;
            } else {
                if (grid.empty() || grid.back() != gp[j].first) grid.push_back(gp[j].first);
                ++j;
            }
        }
    }
    std::vector<PLFun::Point> out;
    Q prev_f = f(grid[0]), prev_g = g(grid[0]);
    out.push_back({grid[0], combine(prev_f, prev_g)});
    for (std::size_t k = 1; k < grid.size(); ++k) {
        Q cur_f = f(grid[k]), cur_g = g(grid[k]);
        if (insert_crossings) {
            Q d0 = prev_f - prev_g, d1 = cur_f - cur_g;
            if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
                Q t0 = grid[k - 1] + (grid[k] - grid[k - 1]) * (-d0) / (d1 - d0);
                Q v = f(t0);  // == g(t0)
                out.push_back({t0, v});
            }
        }
        out.push_back({grid[k], combine(cur_f, cur_g)});
        prev_f = cur_f;
        prev_g = cur_g;
    }
    return PLFun::from_points(std::move(out));
}

}  // namespace

PLFun operator+(const PLFun& f, const PLFun& g) {
    return merge(f, g, [](const Q& a, const Q& b) { return a + b; }, false);
}

PLFun operator-(const PLFun& f, const PLFun& g) {
    return merge(f, g, [](const Q& a, const Q& b) { return a - b; }, false);
}

PLFun PLFun::min(const PLFun& f, const PLFun& g) {
    return merge(f, g, [](const Q& a, const Q& b) { return q_min(a, b); }, true);
}

PLFun PLFun::max(const PLFun& f, const PLFun& g) {
    return merge(f, g, [](const Q& a, const Q& b) { return q_max(a, b); }, true);
}

Q PLFun::max_value() const {
    Q best = pts_.front().second;
    for (const auto& p : pts_) best = q_max(best, p.second);
    return best;
}

Q PLFun::min_value() const {
    Q best = pts_.front().second;
    for (const auto& p : pts_) best = q_min(best, p.second);
    return best;
}

}  // namespace hsdyn
