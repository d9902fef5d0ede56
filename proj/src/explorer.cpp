#include "hsdyn/explorer.hpp"

#include <algorithm>
#include <set>

namespace hsdyn {

GeneratorSet::GeneratorSet(std::vector<PLHomeo> els, bool sym)
    : elements(std::move(els)), symmetric(sym) {
    if (elements.empty())
        throw Error(ErrorCode::EmptyInput, "generator set must be nonempty");
    if (symmetric) {
        std::set<PLHomeo> seen(elements.begin(), elements.end());
        std::size_t n = elements.size();
        for (std::size_t i = 0; i < n; ++i) {
            PLHomeo inv = inverse(elements[i]);
            if (seen.insert(inv).second) elements.push_back(std::move(inv));
        }
    }
}

namespace {

// next r-subset of {0..n-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<int>& idx, int n) {
    int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[static_cast<std::size_t>(i)] < n - (r - i)) {
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < r; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

GeneratorSet grid_generators(int k, int m, const GridGenOptions& opt) {
    if (k < 1 || m < k)
        throw Error(ErrorCode::OutOfRange, "grid generators need m >= k >= 1");

    std::vector<PLHomeo> out;
    std::set<PLHomeo> seen;
    auto add = [&](PLHomeo g) {
        if (seen.insert(g).second) {
            out.push_back(std::move(g));
            if (out.size() > opt.cap)
                throw Error(ErrorCode::BudgetExceeded, "generator enumeration exceeds cap");
        }
    };

    add(PLHomeo::identity());
    for (int r = 1; r <= opt.max_interior && r <= k - 1; ++r) {
        std::vector<int> pos(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) pos[static_cast<std::size_t>(i)] = i;
        do {
            std::vector<int> val(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) val[static_cast<std::size_t>(i)] = i;
            do {
                std::vector<PLHomeo::Breakpoint> bps;
                bps.push_back({Q(0), Q(0)});
                for (int i = 0; i < r; ++i)
                    bps.push_back({Q(pos[static_cast<std::size_t>(i)] + 1, k),
                                   Q(val[static_cast<std::size_t>(i)] + 1, m)});
                bps.push_back({Q(1), Q(1)});
                add(PLHomeo(std::move(bps)));
            } while (next_subset(val, m - 1));
        } while (next_subset(pos, k - 1));
    }

    GeneratorSet gens(std::move(out), opt.symmetric);
    if (opt.include_reflection) {
        PLHomeo r = PLHomeo::reflection();
        if (std::find(gens.elements.begin(), gens.elements.end(), r) == gens.elements.end())
            gens.elements.push_back(std::move(r));
    }
    if (gens.elements.size() > opt.cap)
        throw Error(ErrorCode::BudgetExceeded, "generator enumeration exceeds cap");
    return gens;
}

Q hyper_dist(const HyperPoint& a, const HyperPoint& b) {
    if (a.index() != b.index())
        throw Error(ErrorCode::ArityMismatch, "hyperspace points of different kinds");
    return std::visit(
        [&](const auto& x) -> Q {
            using T = std::decay_t<decltype(x)>;
            const T& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, IntervalUnion>) return hausdorff(x, y);
            else if constexpr (std::is_same_v<T, SetFamilyTuple>) return tuple_dist(x, y);
            else return family_hausdorff(x, y);
        },
        a);
}

bool hyper_within(const HyperPoint& a, const HyperPoint& b, const Q& eps) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<IntervalUnion>(a))
        return within_hausdorff(std::get<IntervalUnion>(a), std::get<IntervalUnion>(b), eps);
    try {
        return hyper_dist(a, b) <= eps;
    } catch (const Error&) {
        return false;  // arity mismatch between tuples of the same kind
    }
}

HyperPoint hyper_act(const PLHomeo& g, const HyperPoint& p) {
    return std::visit(
        [&](const auto& x) -> HyperPoint {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, IntervalUnion>) return image(g, x);
            else if constexpr (std::is_same_v<T, SetFamilyTuple>) return act_tuple(g, x);
            else return act_family(g, x);
        },
        p);
}

namespace {

// Floating shadow of an interval union for fast snap prefiltering. The
// mirror of the exact candidate enumeration is accurate to rounding, so
// rejecting at eps plus a safety band never discards a true match; matches
// are always confirmed exactly.
using Shadow = std::vector<std::pair<double, double>>;
constexpr double kShadowSlack = 1e-9;

double to_double(const Q& q) {
    return static_cast<double>(numerator(q)) / static_cast<double>(denominator(q));
}

Shadow make_shadow(const HyperPoint& p) {
    Shadow s;
    if (const auto* u = std::get_if<IntervalUnion>(&p)) {
        s.reserve(u->intervals().size());
        for (const auto& [a, b] : u->intervals()) s.push_back({to_double(a), to_double(b)});
    }
    return s;
}

double shadow_point_dist(const Shadow& s, double x) {
    double left = 2.0;
    for (const auto& [a, b] : s) {
        if (x < a) return std::min(left, a - x);
        if (x <= b) return 0.0;
        left = x - b;
    }
    return left;
}

bool shadow_contains(const Shadow& s, double x) {
    for (const auto& [a, b] : s) {
        if (x < a) return false;
        if (x <= b) return true;
    }
    return false;
}

double shadow_hausdorff(const Shadow& a, const Shadow& b) {
    double worst = 0.0;
    auto directed = [&](const Shadow& from, const Shadow& to) {
        for (const auto& [lo, hi] : from) {
            worst = std::max(worst, shadow_point_dist(to, lo));
            worst = std::max(worst, shadow_point_dist(to, hi));
        }
        for (std::size_t i = 0; i + 1 < to.size(); ++i) {
            double mid = (to[i].second + to[i + 1].first) / 2;
            if (shadow_contains(from, mid))
                worst = std::max(worst, shadow_point_dist(to, mid));
        }
    };
    directed(a, b);
    directed(b, a);
    return worst;
}

}  // namespace

TransitionGraph transition_graph(const std::vector<HyperPoint>& seeds,
                                 const GeneratorSet& gens, const Q& epsilon,
                                 std::size_t budget) {
    if (seeds.empty()) throw Error(ErrorCode::EmptyInput, "no seeds");
    if (epsilon <= 0) throw Error(ErrorCode::OutOfRange, "epsilon must be positive");

    TransitionGraph graph;
    graph.epsilon = epsilon;
    const double eps_d = to_double(epsilon) + kShadowSlack;
    std::vector<Shadow> shadows;

    auto append_node = [&](HyperPoint p) {
        shadows.push_back(make_shadow(p));
        graph.nodes.push_back(std::move(p));
    };

    auto snap = [&](const HyperPoint& p) -> std::optional<std::size_t> {
        Shadow sp = make_shadow(p);
        for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
            if (!sp.empty() && !shadows[i].empty() &&
                shadow_hausdorff(sp, shadows[i]) > eps_d)
                continue;
            if (hyper_within(p, graph.nodes[i], epsilon)) return i;
        }
        return std::nullopt;
    };

    for (const auto& s : seeds) {
        if (snap(s)) continue;
        if (graph.nodes.size() >= budget) {
            graph.truncated = true;
            return graph;
        }
        append_node(s);
    }

    for (std::size_t u = 0; u < graph.nodes.size(); ++u) {
        for (std::size_t gi = 0; gi < gens.elements.size(); ++gi) {
            HyperPoint img = hyper_act(gens.elements[gi], graph.nodes[u]);
            auto target = snap(img);
            if (!target) {
                if (graph.nodes.size() < budget) {
                    append_node(std::move(img));
                    target = graph.nodes.size() - 1;
                } else {
                    graph.truncated = true;
                    continue;
                }
            }
            graph.edges.push_back({u, gi, *target});
        }
    }
    return graph;
}

namespace {

// Iterative Tarjan; node count can be large, so no recursion.
struct TarjanState {
    std::vector<int> index, low, on_stack, comp;
    std::vector<std::size_t> stack;
    int next_index = 0;
    int comp_count = 0;
};

std::vector<int> strongly_connected_components(std::size_t n,
                                               const std::vector<std::vector<std::size_t>>& adj) {
    TarjanState st;
    st.index.assign(n, -1);
    st.low.assign(n, 0);
    st.on_stack.assign(n, 0);
    st.comp.assign(n, -1);

    struct Frame {
        std::size_t v;
        std::size_t child;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (st.index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        st.index[root] = st.low[root] = st.next_index++;
        st.stack.push_back(root);
        st.on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.child < adj[f.v].size()) {
                std::size_t w = adj[f.v][f.child++];
                if (st.index[w] == -1) {
                    st.index[w] = st.low[w] = st.next_index++;
                    st.stack.push_back(w);
                    st.on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (st.on_stack[w]) {
                    st.low[f.v] = std::min(st.low[f.v], st.index[w]);
                }
            } else {
                if (st.low[f.v] == st.index[f.v]) {
                    while (true) {
                        std::size_t w = st.stack.back();
                        st.stack.pop_back();
                        st.on_stack[w] = 0;
                        st.comp[w] = st.comp_count;
                        if (w == f.v) break;
                    }
                    ++st.comp_count;
                }
                std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    st.low[frames.back().v] = std::min(st.low[frames.back().v], st.low[v]);
            }
        }
    }
    return st.comp;
}

}  // namespace

std::vector<BottomComponent> bottom_components(const TransitionGraph& g) {
    std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : g.edges) adj[e.from].push_back(e.to);

    std::vector<int> comp = strongly_connected_components(n, adj);
    int comp_count = 0;
    for (int c : comp) comp_count = std::max(comp_count, c + 1);

    std::vector<char> has_exit(static_cast<std::size_t>(comp_count), 0);
    for (const auto& e : g.edges)
        if (comp[e.from] != comp[e.to]) has_exit[static_cast<std::size_t>(comp[e.from])] = 1;

    std::vector<BottomComponent> out;
    std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(comp_count));
    for (std::size_t v = 0; v < n; ++v)
        members[static_cast<std::size_t>(comp[v])].push_back(v);

    for (std::size_t c = 0; c < members.size(); ++c) {
        if (has_exit[c]) continue;
        BottomComponent bc;
        bc.nodes = members[c];
        std::sort(bc.nodes.begin(), bc.nodes.end());
        bc.diameter = Q(0);
        for (std::size_t i = 0; i < bc.nodes.size(); ++i)
            for (std::size_t j = i + 1; j < bc.nodes.size(); ++j)
                bc.diameter = q_max(bc.diameter,
                                    hyper_dist(g.nodes[bc.nodes[i]], g.nodes[bc.nodes[j]]));
        out.push_back(std::move(bc));
    }
    std::sort(out.begin(), out.end(), [](const BottomComponent& a, const BottomComponent& b) {
        return a.nodes.front() < b.nodes.front();
    });
    return out;
}

SimplexPoint::SimplexPoint(std::vector<Q> cs) : coords(std::move(cs)) {
    if (coords.empty()) throw Error(ErrorCode::EmptyInput, "simplex point needs coordinates");
    if (coords.front() < 0 || coords.back() > 1)
        throw Error(ErrorCode::OutOfRange, "simplex coordinates must lie in [0,1]");
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (coords[i] < coords[i - 1])
            throw Error(ErrorCode::OutOfRange, "simplex coordinates must be sorted");
}

Q boundary_margin(const SimplexPoint& x) {
    Q margin = x.coords.front();
    margin = q_min(margin, Q(1) - x.coords.back());
    for (std::size_t i = 1; i < x.coords.size(); ++i)
        margin = q_min(margin, x.coords[i] - x.coords[i - 1]);
    return margin;
}

namespace {

std::vector<Q> grid_coords(const Q& step) {
    std::vector<Q> coords;
    Q t(0);
    while (t < 1) {
        coords.push_back(t);
        t += step;
    }
    coords.push_back(Q(1));
    return coords;
}

Q linf(const SimplexPoint& a, const SimplexPoint& b) {
    Q best(0);
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        best = q_max(best, q_abs(a.coords[i] - b.coords[i]));
    return best;
}

// enumerate monotone tuples over coords, calling visit on each
template <typename Visit>
void walk_simplex_grid(const std::vector<Q>& coords, std::size_t dim, Visit&& visit) {
    std::vector<std::size_t> idx(dim, 0);
    while (true) {
        visit(idx);
        std::size_t j = dim;
        while (j > 0) {
            --j;
            if (idx[j] + 1 < coords.size()) {
                ++idx[j];
                for (std::size_t l = j + 1; l < dim; ++l) idx[l] = idx[j];
                break;
            }
            if (j == 0) return;
        }
    }
}

}  // namespace

Q fill_defect(const std::vector<SimplexPoint>& points, const Q& epsilon) {
    if (points.empty()) throw Error(ErrorCode::EmptyInput, "no points");
    if (epsilon <= 0) throw Error(ErrorCode::OutOfRange, "epsilon must be positive");
    std::size_t dim = points.front().dim();
    for (const auto& p : points)
        if (p.dim() != dim) throw Error(ErrorCode::ArityMismatch, "mixed dimensions");

    std::vector<Q> coords = grid_coords(epsilon / 2);
    Q worst(0);
    walk_simplex_grid(coords, dim, [&](const std::vector<std::size_t>& idx) {
        std::vector<Q> cs(dim);
        for (std::size_t i = 0; i < dim; ++i) cs[i] = coords[idx[i]];
        SimplexPoint y(std::move(cs));
        Q nearest = linf(y, points.front());
        for (std::size_t i = 1; i < points.size() && nearest > 0; ++i)
            nearest = q_min(nearest, linf(y, points[i]));
        worst = q_max(worst, nearest);
    });
    return worst;
}

SimplexPoint act_simplex(const PLHomeo& g, const SimplexPoint& x) {
    std::vector<Q> cs;
    cs.reserve(x.coords.size());
    for (const Q& c : x.coords) cs.push_back(eval(g, c));
    std::sort(cs.begin(), cs.end());
    return SimplexPoint(std::move(cs));
}

namespace {

Q margin_max(const std::vector<SimplexPoint>& s) {
    Q worst(0);
    for (const auto& p : s) worst = q_max(worst, boundary_margin(p));
    return worst;
}

std::vector<SimplexPoint> act_all(const PLHomeo& g, const std::vector<SimplexPoint>& s) {
    std::vector<SimplexPoint> out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(act_simplex(g, p));
    return out;
}

// Grid cardinality argument: with fewer points than cells no set can
// epsilon-fill, so the fill checks can be skipped wholesale.
bool fill_plausible(std::size_t point_count, std::size_t dim, const Q& epsilon) {
    std::vector<Q> coords = grid_coords(epsilon / 2);
    // each point covers at most 5^dim grid nodes (radius epsilon = 2 steps)
    Z per_point = 1;
    for (std::size_t i = 0; i < dim; ++i) per_point *= 5;
    // monotone tuples over g coords: C(g + dim - 1, dim)
    Z g(coords.size());
    Z total = 1, denom = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= g + Z(i);
        denom *= Z(i) + 1;
    }
    total /= denom;
    return Z(point_count) * per_point >= total;
}

// strictly increasing distinct interior coordinate values of the set
std::vector<Q> interior_values(const std::vector<SimplexPoint>& s) {
    std::vector<Q> vals;
    for (const auto& p : s)
        for (const Q& c : p.coords)
            if (c > 0 && c < 1) vals.push_back(c);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

std::optional<PLHomeo> interpolant(const std::vector<Q>& from, const std::vector<Q>& to) {
    std::vector<PLHomeo::Breakpoint> bps;
    bps.push_back({Q(0), Q(0)});
    for (std::size_t i = 0; i < from.size(); ++i) bps.push_back({from[i], to[i]});
    bps.push_back({Q(1), Q(1)});
    try {
        return PLHomeo(std::move(bps));
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

DichotomyResult dichotomy_search(const std::vector<SimplexPoint>& s, const Q& epsilon,
                                 const GeneratorSet& gens, int depth) {
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty point set");
    if (epsilon <= 0) throw Error(ErrorCode::OutOfRange, "epsilon must be positive");
    std::size_t dim = s.front().dim();
    for (const auto& p : s)
        if (p.dim() != dim) throw Error(ErrorCode::ArityMismatch, "mixed dimensions");

    DichotomyResult best;
    best.epsilon = epsilon;
    bool check_fill = fill_plausible(s.size(), dim, epsilon);
    best.margin_after = margin_max(s);
    best.covering_after = check_fill ? fill_defect(s, epsilon) : Q(1);

    auto certify = [&](const PLHomeo& g, const std::string& word,
                       DichotomyResult& r) -> bool {
        std::vector<SimplexPoint> moved = act_all(g, s);
        Q margin = margin_max(moved);
        if (margin < r.margin_after) r.margin_after = margin;
        if (margin <= epsilon) {
            r.outcome = DichotomyResult::Outcome::BoundaryPush;
            r.witness = g;
            r.witness_word = word;
            r.margin_after = margin;
            return true;
        }
        if (check_fill) {
            Q defect = fill_defect(moved, epsilon);
            if (defect < r.covering_after) r.covering_after = defect;
            if (defect <= epsilon) {
                r.outcome = DichotomyResult::Outcome::Fill;
                r.witness = g;
                r.witness_word = word;
                r.covering_after = defect;
                return true;
            }
        }
        return false;
    };

    if (certify(PLHomeo::identity(), "identity", best)) return best;

    // generator words, shortest first, lexicographic within a length
    constexpr std::size_t kWordBudget = 100000;
    std::size_t words_seen = 0;
    std::vector<std::pair<PLHomeo, std::string>> level;
    level.push_back({PLHomeo::identity(), ""});
    for (int len = 1; len <= depth && words_seen < kWordBudget; ++len) {
        std::vector<std::pair<PLHomeo, std::string>> next;
        next.reserve(level.size() * gens.elements.size());
        for (const auto& [prefix, word] : level) {
            for (std::size_t gi = 0; gi < gens.elements.size(); ++gi) {
                if (++words_seen > kWordBudget) break;
                PLHomeo g = compose(prefix, gens.elements[gi]);
                std::string w = word.empty() ? "g" + std::to_string(gi)
                                             : word + "*g" + std::to_string(gi);
                if (certify(g, w, best)) return best;
                next.push_back({std::move(g), std::move(w)});
            }
        }
        level = std::move(next);
    }

    // deterministic interpolating heuristics on the coordinate multiset;
    // with no interior coordinates the set is already on the boundary and
    // the identity check above has fired
    std::vector<Q> vals = interior_values(s);
    if (!vals.empty()) {
        std::size_t m = vals.size();
        std::vector<Q> near_boundary, near_uniform;
        near_boundary.reserve(m);
        near_uniform.reserve(m);
        for (std::size_t j = 1; j <= m; ++j) {
            near_boundary.push_back(epsilon / 2 * Q(j, m + 1));
            near_uniform.push_back(Q(j, m + 1));
        }
        if (auto g = interpolant(vals, near_boundary))
            if (certify(*g, "boundary-interpolant", best)) return best;
        if (auto g = interpolant(vals, near_uniform))
            if (certify(*g, "uniform-interpolant", best)) return best;
    }

    best.outcome = DichotomyResult::Outcome::Unresolved;
    return best;
}

}  // namespace hsdyn
