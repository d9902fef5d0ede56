#pragma once

#include "hsdyn/cantor.hpp"
#include "hsdyn/explorer.hpp"
#include "hsdyn/interval_union.hpp"
#include "hsdyn/pl_homeo.hpp"
#include "hsdyn/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace testsupport {

using hsdyn::Q;

// Deterministic across standard libraries: raw mt19937_64 output only.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    bool flip() { return next() & 1; }

private:
    std::uint64_t state_;
};

inline double to_double(const Q& q) {
    return static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
}

// Random interval union with endpoints on the 1/denom grid.
inline hsdyn::IntervalUnion random_interval_union(Rng& rng, int denom, int max_components) {
    int count = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(max_components)));
    std::vector<hsdyn::IntervalUnion::Interval> raw;
    for (int i = 0; i < count; ++i) {
        int a = static_cast<int>(rng.below(static_cast<std::size_t>(denom + 1)));
        int b = static_cast<int>(rng.below(static_cast<std::size_t>(denom + 1)));
        raw.push_back({Q(std::min(a, b), denom), Q(std::max(a, b), denom)});
    }
    return hsdyn::IntervalUnion(std::move(raw));
}

// Random increasing PL homeo with up to max_breaks interior breakpoints on
// the 1/denom grid.
inline hsdyn::PLHomeo random_pl_homeo(Rng& rng, int denom, int max_breaks) {
    int count = static_cast<int>(rng.below(static_cast<std::size_t>(max_breaks + 1)));
    std::vector<int> xs, ys;
    for (int i = 0; i < count; ++i) {
        xs.push_back(1 + static_cast<int>(rng.below(static_cast<std::size_t>(denom - 1))));
        ys.push_back(1 + static_cast<int>(rng.below(static_cast<std::size_t>(denom - 1))));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    std::size_t n = std::min(xs.size(), ys.size());
    std::vector<hsdyn::PLHomeo::Breakpoint> bps;
    bps.push_back({Q(0), Q(0)});
    for (std::size_t i = 0; i < n; ++i) bps.push_back({Q(xs[i], denom), Q(ys[i], denom)});
    bps.push_back({Q(1), Q(1)});
    return hsdyn::PLHomeo(std::move(bps));
}

// Random complete prefix-free address list with leaves at depth <= max_depth.
inline std::vector<std::string> random_partition(Rng& rng, std::size_t leaves,
                                                 std::size_t max_depth) {
    std::vector<std::string> words{""};
    while (words.size() < leaves) {
        std::vector<std::size_t> splittable;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (words[i].size() < max_depth) splittable.push_back(i);
        if (splittable.empty()) break;
        std::size_t pick = splittable[rng.below(splittable.size())];
        std::string w = words[pick];
        words.erase(words.begin() + static_cast<std::ptrdiff_t>(pick));
        words.push_back(w + "0");
        words.push_back(w + "1");
    }
    std::sort(words.begin(), words.end());
    return words;
}

inline hsdyn::CantorHomeo random_cantor_homeo(Rng& rng, std::size_t max_depth) {
    std::size_t leaves = 1 + rng.below(max_depth * 2);
    std::vector<std::string> dom = random_partition(rng, leaves, max_depth);
    std::vector<std::string> range;
    // grow a second tree with exactly the same leaf count
    while (true) {
        range = random_partition(rng, dom.size(), max_depth);
        if (range.size() == dom.size()) break;
    }
    return hsdyn::CantorHomeo(std::move(dom), std::move(range));
}

// Independent oracle for bottom components: a node set is a minimal
// invariant set iff it is the forward closure of each of its nodes.
inline std::vector<std::set<std::size_t>> minimal_invariant_oracle(
    const hsdyn::TransitionGraph& g) {
    std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges) adj[e.from].push_back(e.to);
    std::vector<std::set<std::size_t>> closures(n);
    auto closure = [&](std::size_t start) -> const std::set<std::size_t>& {
        if (!closures[start].empty()) return closures[start];
        std::set<std::size_t> seen{start};
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adj[v])
                if (seen.insert(w).second) stack.push_back(w);
        }
        closures[start] = std::move(seen);
        return closures[start];
    };
    std::vector<std::set<std::size_t>> out;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& c = closure(v);
        bool minimal = true;
        for (std::size_t w : c)
            if (closure(w) != c) {
                minimal = false;
                break;
            }
        if (minimal && std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    }
    return out;
}

// Brute-force grid oracle for the interval-union Hausdorff distance.
inline double grid_hausdorff_oracle(const hsdyn::IntervalUnion& a,
                                    const hsdyn::IntervalUnion& b, int resolution) {
    auto sample = [&](const hsdyn::IntervalUnion& u) {
        std::vector<double> pts;
        for (int i = 0; i <= resolution; ++i) {
            Q x(i, resolution);
            if (u.contains(x)) pts.push_back(to_double(x));
        }
        return pts;
    };
    std::vector<double> pa = sample(a), pb = sample(b);
    auto directed = [](const std::vector<double>& from, const std::vector<double>& to) {
        double worst = 0;
        for (double x : from) {
            double nearest = 2;
            // sorted: binary search window
            auto it = std::lower_bound(to.begin(), to.end(), x);
            if (it != to.end()) nearest = std::min(nearest, *it - x);
            if (it != to.begin()) nearest = std::min(nearest, x - *std::prev(it));
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(pa, pb), directed(pb, pa));
}

// Dense point sample of a staircase curve with L-infinity spacing <= 1/res.
inline std::vector<std::pair<double, double>> sample_curve(const hsdyn::StaircaseCurve& c,
                                                           int res) {
    std::vector<std::pair<double, double>> pts;
    const auto& vs = c.vertices();
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
        double ax = to_double(vs[i].first), ay = to_double(vs[i].second);
        double bx = to_double(vs[i + 1].first), by = to_double(vs[i + 1].second);
        double span = std::max(bx - ax, by - ay);
        int steps = std::max(1, static_cast<int>(std::ceil(span * res)));
        for (int s = 0; s < steps; ++s) {
            double t = static_cast<double>(s) / steps;
            pts.push_back({ax + (bx - ax) * t, ay + (by - ay) * t});
        }
    }
    pts.push_back({1.0, 1.0});
    return pts;
}

// Brute-force sampled oracle for the curve Hausdorff distance (L-infinity).
inline double sampled_curve_hausdorff_oracle(const hsdyn::StaircaseCurve& f,
                                             const hsdyn::StaircaseCurve& g, int res) {
    auto pf = sample_curve(f, res);
    auto pg = sample_curve(g, res);
    auto directed = [](const std::vector<std::pair<double, double>>& from,
                       const std::vector<std::pair<double, double>>& to) {
        double worst = 0;
        for (const auto& p : from) {
            double nearest = 2;
            // x-sorted samples allow early exit once the x-gap alone exceeds it
            auto it = std::lower_bound(to.begin(), to.end(), p,
                                       [](const std::pair<double, double>& a,
                                          const std::pair<double, double>& b) {
                                           return a.first < b.first;
                                       });
            std::size_t start = static_cast<std::size_t>(it - to.begin());
            for (std::size_t j = start; j < to.size(); ++j) {
                double dx = to[j].first - p.first;
                if (dx >= nearest) break;
                nearest = std::min(nearest,
                                   std::max(std::abs(dx), std::abs(to[j].second - p.second)));
            }
            for (std::size_t j = start; j-- > 0;) {
                double dx = p.first - to[j].first;
                if (dx >= nearest) break;
                nearest = std::min(nearest,
                                   std::max(std::abs(dx), std::abs(to[j].second - p.second)));
            }
            worst = std::max(worst, nearest);
        }
        return worst;
    };
    return std::max(directed(pf, pg), directed(pg, pf));
}

}  // namespace testsupport
