#include "hsdyn/json_io.hpp"

namespace hsdyn {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw Error(ErrorCode::ParseError, std::string("missing field: ") + key);
    return j.at(key);
}

Q rat(const Json& j) { return rational_from_json(j); }

}  // namespace

Json to_json(const Q& q) { return to_string(q); }

Q rational_from_json(const Json& j) {
    if (!j.is_string()) throw Error(ErrorCode::ParseError, "rational must be a string");
    return parse_rational(j.get<std::string>());
}

Json to_json(const IntervalUnion& u) {
    Json out = Json::array();
    for (const auto& [a, b] : u.intervals()) out.push_back({to_string(a), to_string(b)});
    return out;
}

IntervalUnion interval_union_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "interval union must be an array");
    std::vector<IntervalUnion::Interval> raw;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error(ErrorCode::ParseError, "interval must be a pair");
        raw.push_back({rat(pair[0]), rat(pair[1])});
    }
    return IntervalUnion(std::move(raw));
}

Json to_json(const CoverTuple& c) {
    Json out = Json::array();
    for (const auto& p : c.parts()) out.push_back(to_json(p));
    return out;
}

CoverTuple cover_tuple_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "cover tuple must be an array");
    std::vector<IntervalUnion> parts;
    for (const auto& p : j) parts.push_back(interval_union_from_json(p));
    return CoverTuple(std::move(parts));
}

Json to_json(const PLHomeo& g) {
    Json bps = Json::array();
    for (const auto& [x, y] : g.breakpoints()) bps.push_back({to_string(x), to_string(y)});
    return Json{{"breakpoints", bps}};
}

PLHomeo pl_homeo_from_json(const Json& j) {
    const Json& bps = require(j, "breakpoints");
    if (!bps.is_array()) throw Error(ErrorCode::ParseError, "breakpoints must be an array");
    std::vector<PLHomeo::Breakpoint> out;
    for (const auto& bp : bps) {
        if (!bp.is_array() || bp.size() != 2)
            throw Error(ErrorCode::ParseError, "breakpoint must be a pair");
        out.push_back({rat(bp[0]), rat(bp[1])});
    }
    return PLHomeo(std::move(out));
}

Json to_json(const CantorHomeo& u) {
    return Json{{"domain", u.domain()}, {"range", u.range()}};
}

CantorHomeo cantor_homeo_from_json(const Json& j) {
    const Json& dom = require(j, "domain");
    const Json& rng = require(j, "range");
    return CantorHomeo(dom.get<std::vector<std::string>>(),
                       rng.get<std::vector<std::string>>());
}

Json to_json(const StaircaseCurve& c) {
    Json vs = Json::array();
    for (const auto& [x, y] : c.vertices()) vs.push_back({to_string(x), to_string(y)});
    return Json{{"vertices", vs}};
}

StaircaseCurve staircase_from_json(const Json& j) {
    const Json& vs = require(j, "vertices");
    std::vector<PlanarPoint> out;
    for (const auto& v : vs) {
        if (!v.is_array() || v.size() != 2)
            throw Error(ErrorCode::ParseError, "vertex must be a pair");
        out.push_back({rat(v[0]), rat(v[1])});
    }
    return StaircaseCurve(std::move(out));
}

Json to_json(const SetFamilyTuple& t) {
    Json out = Json::array();
    for (const auto& p : t.parts()) out.push_back(to_json(p));
    return out;
}

SetFamilyTuple tuple_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "tuple must be an array");
    std::vector<IntervalUnion> parts;
    for (const auto& p : j) parts.push_back(interval_union_from_json(p));
    return SetFamilyTuple(std::move(parts));
}

Json to_json(const CurveFamily& f) {
    Json out = Json::array();
    for (const auto& m : f.members()) out.push_back(to_json(m));
    return out;
}

CurveFamily curve_family_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "family must be an array");
    std::vector<StaircaseCurve> members;
    for (const auto& m : j) members.push_back(staircase_from_json(m));
    return CurveFamily(std::move(members));
}

Json to_json(const TupleFamily& f) {
    Json out = Json::array();
    for (const auto& m : f.members()) out.push_back(to_json(m));
    return out;
}

TupleFamily tuple_family_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "family must be an array");
    std::vector<SetFamilyTuple> members;
    for (const auto& m : j) members.push_back(tuple_from_json(m));
    return TupleFamily(std::move(members));
}

Json to_json(const SimplexPoint& p) {
    Json out = Json::array();
    for (const auto& c : p.coords) out.push_back(to_string(c));
    return out;
}

SimplexPoint simplex_point_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "simplex point must be an array");
    std::vector<Q> coords;
    for (const auto& c : j) coords.push_back(rat(c));
    return SimplexPoint(std::move(coords));
}

Json to_json(const FarnessCertificate& c) {
    Json ws = Json::array();
    for (const auto& w : c.witnesses) {
        ws.push_back(Json{{"a_index", w.a_index},
                          {"b_index", w.b_index},
                          {"x", to_string(w.x)},
                          {"separation", to_string(w.separation)}});
    }
    return Json{{"two_delta", to_string(c.two_delta)}, {"witnesses", ws}};
}

Json to_json(const RCertificate& c) {
    Json a = Json::array(), b = Json::array();
    for (const auto& g : c.a_set) a.push_back(to_json(g));
    for (const auto& g : c.b_set) b.push_back(to_json(g));
    Json l1 = Json::array();
    for (const auto& e : c.l1)
        l1.push_back(Json{{"a_index", e.a_index}, {"diagonal_in_image", e.diagonal_in_image}});
    Json l2 = Json::array();
    for (const auto& e : c.l2)
        l2.push_back(Json{{"b_index", e.b_index},
                          {"a_index", e.a_index},
                          {"deviation", to_string(e.deviation)},
                          {"vertex", {to_string(e.vertex.first), to_string(e.vertex.second)}}});
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "r-certificate"},
                {"a_set", a},
                {"b_set", b},
                {"delta", to_string(c.delta)},
                {"p", to_json(c.p)},
                {"l1_evidence", l1},
                {"l2_evidence", l2},
                {"separation_bound", to_string(c.separation_bound)}};
}

RCertificate r_certificate_from_json(const Json& j) {
    std::vector<PLHomeo> a, b;
    for (const auto& g : require(j, "a_set")) a.push_back(pl_homeo_from_json(g));
    for (const auto& g : require(j, "b_set")) b.push_back(pl_homeo_from_json(g));
    std::vector<RL1Evidence> l1;
    for (const auto& e : require(j, "l1_evidence"))
        l1.push_back({e.at("a_index").get<std::size_t>(), e.at("diagonal_in_image").get<bool>()});
    std::vector<RL2Evidence> l2;
    for (const auto& e : require(j, "l2_evidence"))
        l2.push_back({e.at("b_index").get<std::size_t>(), e.at("a_index").get<std::size_t>(),
                      rat(e.at("deviation")),
                      {rat(e.at("vertex")[0]), rat(e.at("vertex")[1])}});
    return RCertificate{std::move(a),
                        std::move(b),
                        rat(require(j, "delta")),
                        curve_family_from_json(require(j, "p")),
                        std::move(l1),
                        std::move(l2),
                        rat(require(j, "separation_bound"))};
}

Json to_json(const CoverCertificate& c) {
    Json a = Json::array(), b = Json::array();
    for (const auto& g : c.a_set) a.push_back(to_json(g));
    for (const auto& g : c.b_set) b.push_back(to_json(g));
    Json dsets = Json::array();
    for (const auto& d : c.d_sets) dsets.push_back(d ? to_json(*d) : Json(nullptr));
    Json k1 = Json::array();
    for (const auto& e : c.k1)
        k1.push_back(Json{{"a_index", e.a_index}, {"maps_to_cover", e.maps_to_cover}});
    Json k2 = Json::array();
    for (const auto& e : c.k2)
        k2.push_back(Json{{"b_index", e.b_index},
                          {"a_index", e.a_index},
                          {"part_index", e.part_index},
                          {"x", to_string(e.x)},
                          {"hx", to_string(e.hx)}});
    return Json{{"schema_version", kSchemaVersion},
                {"kind", "cover-certificate"},
                {"a_set", a},
                {"b_set", b},
                {"delta", to_string(c.delta)},
                {"cover", to_json(c.cover)},
                {"d_sets", dsets},
                {"p", to_json(c.p)},
                {"k1_evidence", k1},
                {"k2_evidence", k2},
                {"separation_bound", to_string(c.separation_bound)}};
}

CoverCertificate cover_certificate_from_json(const Json& j) {
    std::vector<PLHomeo> a, b;
    for (const auto& g : require(j, "a_set")) a.push_back(pl_homeo_from_json(g));
    for (const auto& g : require(j, "b_set")) b.push_back(pl_homeo_from_json(g));
    std::vector<std::optional<IntervalUnion>> dsets;
    for (const auto& d : require(j, "d_sets")) {
        if (d.is_null())
            dsets.push_back(std::nullopt);
        else
            dsets.push_back(interval_union_from_json(d));
    }
    std::vector<CoverK1Evidence> k1;
    for (const auto& e : require(j, "k1_evidence"))
        k1.push_back({e.at("a_index").get<std::size_t>(), e.at("maps_to_cover").get<bool>()});
    std::vector<CoverK2Evidence> k2;
    for (const auto& e : require(j, "k2_evidence"))
        k2.push_back({e.at("b_index").get<std::size_t>(), e.at("a_index").get<std::size_t>(),
                      e.at("part_index").get<std::size_t>(), rat(e.at("x")),
                      rat(e.at("hx"))});
    return CoverCertificate{std::move(a),
                            std::move(b),
                            rat(require(j, "delta")),
                            cover_tuple_from_json(require(j, "cover")),
                            std::move(dsets),
                            tuple_family_from_json(require(j, "p")),
                            std::move(k1),
                            std::move(k2),
                            rat(require(j, "separation_bound"))};
}

Json to_json(const VerificationReport& r) {
    Json out = Json::array();
    for (const auto& c : r.checks) {
        out.push_back(Json{{"check", c.check},
                           {"status", c.passed ? "pass" : "fail"},
                           {"witness", c.witness}});
    }
    return out;
}

Json to_json(const HyperPoint& p) {
    return std::visit(
        [](const auto& x) -> Json {
            using T = std::decay_t<decltype(x)>;
            const char* kind = std::is_same_v<T, IntervalUnion>    ? "interval-union"
                               : std::is_same_v<T, SetFamilyTuple> ? "tuple"
                               : std::is_same_v<T, CurveFamily>    ? "curve-family"
                                                                   : "tuple-family";
            return Json{{"kind", kind}, {"value", to_json(x)}};
        },
        p);
}

HyperPoint hyper_point_from_json(const Json& j) {
    std::string kind = require(j, "kind").get<std::string>();
    const Json& value = require(j, "value");
    if (kind == "interval-union") return interval_union_from_json(value);
    if (kind == "tuple") return tuple_from_json(value);
    if (kind == "curve-family") return curve_family_from_json(value);
    if (kind == "tuple-family") return tuple_family_from_json(value);
    throw Error(ErrorCode::ParseError, "unknown hyperspace point kind: " + kind);
}

Json to_json(const TransitionGraph& g) {
    Json nodes = Json::array();
    for (const auto& n : g.nodes) nodes.push_back(to_json(n));
    Json adjacency = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) adjacency.push_back(Json::array());
    for (const auto& e : g.edges)
        adjacency[e.from].push_back(Json{{"gen", e.gen}, {"to", e.to}});
    return Json{{"epsilon", to_string(g.epsilon)},
                {"truncated", g.truncated},
                {"nodes", nodes},
                {"adjacency", adjacency}};
}

TransitionGraph transition_graph_from_json(const Json& j) {
    TransitionGraph g;
    g.epsilon = rat(require(j, "epsilon"));
    g.truncated = require(j, "truncated").get<bool>();
    for (const auto& n : require(j, "nodes")) g.nodes.push_back(hyper_point_from_json(n));
    const Json& adjacency = require(j, "adjacency");
    for (std::size_t u = 0; u < adjacency.size(); ++u) {
        for (const auto& e : adjacency[u])
            g.edges.push_back({u, e.at("gen").get<std::size_t>(), e.at("to").get<std::size_t>()});
    }
    return g;
}

Json to_json(const BottomComponent& c) {
    return Json{{"nodes", c.nodes}, {"diameter", to_string(c.diameter)}};
}

Json to_json(const DichotomyResult& r) {
    const char* outcome = r.outcome == DichotomyResult::Outcome::BoundaryPush ? "boundary-push"
                          : r.outcome == DichotomyResult::Outcome::Fill       ? "fill"
                                                                              : "unresolved";
    Json out{{"outcome", outcome},
             {"epsilon", to_string(r.epsilon)},
             {"margin_after", to_string(r.margin_after)},
             {"covering_after", to_string(r.covering_after)},
             // the boundary gauge is a modelling choice, recorded per report
             {"boundary_gauge", "min(x1, 1-xn, min_i(x_{i+1}-x_i))"}};
    if (r.witness) {
        out["witness"] = to_json(*r.witness);
        out["witness_word"] = r.witness_word;
    }
    return out;
}

}  // namespace hsdyn
