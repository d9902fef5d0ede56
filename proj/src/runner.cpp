#include "hsdyn/runner.hpp"

#include "hsdyn/certificates.hpp"
#include "hsdyn/explorer.hpp"

#include <chrono>
#include <fstream>

namespace hsdyn {

namespace {

struct SpaceSpec {
    bool cantor = false;
    int depth = 6;
};

SpaceSpec parse_space(const Json& config) {
    SpaceSpec s;
    if (!config.contains("space")) return s;
    std::string spec = config.at("space").get<std::string>();
    if (spec == "interval") return s;
    if (spec.rfind("cantor:", 0) == 0) {
        s.cantor = true;
        s.depth = std::stoi(spec.substr(7));
        if (s.depth < 0) throw Error(ErrorCode::OutOfRange, "cantor depth must be >= 0");
        return s;
    }
    if (spec == "cantor") {
        s.cantor = true;
        return s;
    }
    throw Error(ErrorCode::ParseError, "unknown space: " + spec);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    Json j;
    in >> j;
    return j;
}

// Group elements arrive inline ("a") or via file ("a_file"); cantor-space
// elements are tree pairs converted to their canonical interval extensions.
std::vector<PLHomeo> load_group(const Json& config, const std::string& key,
                                const SpaceSpec& space, Json& echo) {
    Json list;
    if (config.contains(key)) {
        list = config.at(key);
    } else if (config.contains(key + "_file")) {
        list = load_json_file(config.at(key + "_file").get<std::string>());
        if (list.is_object() && list.contains("elements")) list = list.at("elements");
    } else {
        throw Error(ErrorCode::ParseError, "config needs \"" + key + "\" or \"" + key +
                                               "_file\"");
    }
    if (!list.is_array() || list.empty())
        throw Error(ErrorCode::ParseError, "group " + key + " must be a nonempty array");
    echo[key] = list;
    std::vector<PLHomeo> out;
    for (const auto& e : list) {
        if (space.cantor)
            out.push_back(cantor_to_interval(cantor_homeo_from_json(e)));
        else
            out.push_back(pl_homeo_from_json(e));
    }
    return out;
}

GeneratorSet load_generators(const Json& config, const SpaceSpec& space, Json& echo) {
    if (!config.contains("generators"))
        throw Error(ErrorCode::ParseError, "config needs \"generators\"");
    const Json& spec = config.at("generators");
    echo["generators"] = spec;
    std::string kind = spec.value("kind", "explicit");
    if (kind == "grid") {
        GridGenOptions opt;
        opt.max_interior = spec.value("max_interior", 2);
        opt.cap = spec.value("cap", std::size_t{100000});
        opt.symmetric = spec.value("symmetric", false);
        opt.include_reflection = spec.value("include_reflection", false);
        return grid_generators(spec.at("k").get<int>(), spec.at("m").get<int>(), opt);
    }
    if (kind == "explicit") {
        std::vector<PLHomeo> elements;
        for (const auto& e : spec.at("elements")) {
            if (space.cantor)
                elements.push_back(cantor_to_interval(cantor_homeo_from_json(e)));
            else
                elements.push_back(pl_homeo_from_json(e));
        }
        return GeneratorSet(std::move(elements), spec.value("symmetric", false));
    }
    throw Error(ErrorCode::ParseError, "unknown generator kind: " + kind);
}

Q required_rational(const Json& config, const std::string& key) {
    if (!config.contains(key))
        throw Error(ErrorCode::ParseError, "config needs \"" + key + "\"");
    return rational_from_json(config.at(key));
}

GeneratorSet generators_from_echo(const Json& echo, const SpaceSpec& space) {
    Json shim = Json::object();
    shim["generators"] = echo.at("generators");
    Json sink = Json::object();
    return load_generators(shim, space, sink);
}

Json base_report(const Json& config, const std::string& mode) {
    Json report;
    report["schema_version"] = kSchemaVersion;
    report["tool_version"] = kToolVersion;
    report["mode"] = mode;
    report["config"] = Json::object();
    report["config"]["mode"] = mode;
    if (config.contains("space")) report["config"]["space"] = config.at("space");
    for (const char* key : {"epsilon", "delta", "mu", "budget", "depth", "seed"})
        if (config.contains(key)) report["config"][key] = config.at(key);
    return report;
}

RunReport run_certify_r(const Json& config, Json report, const SpaceSpec& space) {
    auto a = load_group(config, "a", space, report["config"]);
    auto b = load_group(config, "b", space, report["config"]);
    RCertificate cert = build_r_certificate(a, b);
    VerificationReport ver = verify_r_certificate(cert);
    report["certificate"] = to_json(cert);
    report["verification"] = to_json(ver);
    report["outcome"] = ver.passed() ? "verified" : "verification-failed";
    report["separation_bound"] = to_string(cert.separation_bound);
    return {std::move(report), ver.passed() ? kExitOk : kExitVerification};
}

RunReport run_certify_covers(const Json& config, Json report, const SpaceSpec& space) {
    auto a = load_group(config, "a", space, report["config"]);
    auto b = load_group(config, "b", space, report["config"]);
    Q delta = required_rational(config, "delta");
    CoverTuple cover =
        config.contains("cover") ? cover_tuple_from_json(config.at("cover"))
                                 : uniform_cover(delta);
    report["config"]["cover"] = to_json(cover);
    CoverCertificate cert = build_cover_certificate(a, b, cover, delta);
    VerificationReport ver = verify_cover_certificate(cert);
    report["certificate"] = to_json(cert);
    report["verification"] = to_json(ver);
    report["outcome"] = ver.passed() ? "verified" : "verification-failed";
    report["separation_bound"] = to_string(cert.separation_bound);
    return {std::move(report), ver.passed() ? kExitOk : kExitVerification};
}

std::vector<HyperPoint> load_seeds(const Json& config, Json& echo) {
    std::vector<HyperPoint> seeds;
    if (config.contains("seeds")) {
        echo["seeds"] = config.at("seeds");
        for (const auto& s : config.at("seeds")) seeds.push_back(hyper_point_from_json(s));
        return seeds;
    }
    if (config.contains("exhaustive_grid")) {
        echo["exhaustive_grid"] = config.at("exhaustive_grid");
        Q step = rational_from_json(config.at("exhaustive_grid"));
        if (step <= 0 || step > 1)
            throw Error(ErrorCode::OutOfRange, "grid step must lie in (0,1]");
        std::vector<Q> grid;
        Q t(0);
        while (t < 1) {
            grid.push_back(t);
            t += step;
        }
        grid.push_back(Q(1));
        if (grid.size() > 12)
            throw Error(ErrorCode::BudgetExceeded,
                        "exhaustive grid too fine: " + std::to_string(grid.size()) +
                            " points");
        // all nonempty subsets in ascending bitmask order (bit i = grid[i])
        std::size_t total = (std::size_t{1} << grid.size()) - 1;
        for (std::size_t mask = 1; mask <= total; ++mask) {
            std::vector<IntervalUnion::Interval> pts;
            for (std::size_t i = 0; i < grid.size(); ++i)
                if (mask & (std::size_t{1} << i)) pts.push_back({grid[i], grid[i]});
            seeds.push_back(IntervalUnion(std::move(pts)));
        }
        return seeds;
    }
    throw Error(ErrorCode::ParseError, "config needs \"seeds\" or \"exhaustive_grid\"");
}

RunReport run_minimal_scan(const Json& config, Json report, const SpaceSpec& space) {
    GeneratorSet gens = load_generators(config, space, report["config"]);
    std::vector<HyperPoint> seeds = load_seeds(config, report["config"]);
    Q epsilon = required_rational(config, "epsilon");
    std::size_t budget = config.value("budget", std::size_t{100000});

    TransitionGraph graph = transition_graph(seeds, gens, epsilon, budget);
    std::vector<BottomComponent> comps = bottom_components(graph);

    Json comp_json = Json::array();
    bool all_singletons = true;
    for (const auto& c : comps) {
        comp_json.push_back(to_json(c));
        if (c.nodes.size() > 1 || c.diameter != 0) all_singletons = false;
    }
    report["graph"] = to_json(graph);
    report["components"] = comp_json;
    report["all_singletons"] = all_singletons;
    report["lower_bound_only"] = graph.truncated;
    report["outcome"] = graph.truncated ? "truncated" : "complete";
    return {std::move(report), graph.truncated ? kExitTruncated : kExitOk};
}

RunReport run_dichotomy(const Json& config, Json report, const SpaceSpec& space) {
    GeneratorSet gens = load_generators(config, space, report["config"]);
    if (!config.contains("points"))
        throw Error(ErrorCode::ParseError, "config needs \"points\"");
    report["config"]["points"] = config.at("points");
    std::vector<SimplexPoint> points;
    for (const auto& p : config.at("points")) points.push_back(simplex_point_from_json(p));
    Q epsilon = required_rational(config, "epsilon");
    int depth = config.value("depth", 4);

    DichotomyResult result = dichotomy_search(points, epsilon, gens, depth);
    report["dichotomy"] = to_json(result);
    bool resolved = result.outcome != DichotomyResult::Outcome::Unresolved;
    report["outcome"] = resolved ? "resolved" : "unresolved";
    return {std::move(report), resolved ? kExitOk : kExitTruncated};
}

RunReport run_mesh_check(const Json& config, Json report, const SpaceSpec&) {
    Q mu = config.contains("mu") ? required_rational(config, "mu")
                                 : required_rational(config, "delta");
    CoverTuple cover = config.contains("cover")
                           ? cover_tuple_from_json(config.at("cover"))
                           : uniform_cover(mu);
    Q m = mesh(cover);
    report["cover"] = to_json(cover);
    report["parts"] = cover.arity();
    report["mesh"] = to_string(m);
    report["refines"] = m <= mu;
    report["outcome"] = "complete";
    return {std::move(report), kExitOk};
}

RunReport finish(RunReport r, std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    r.document["timing_ms"] = ms;
    return r;
}

RunReport error_report(Json report, const Error& e) {
    report["outcome"] = "error";
    report["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}};
    int exit_code = kExitIo;
    switch (e.code()) {
    case ErrorCode::NotFar:
    case ErrorCode::NotFarEnough:
    case ErrorCode::MeshTooCoarse:
    case ErrorCode::NotACover:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::OutOfRange:
    case ErrorCode::EmptyInput:
    case ErrorCode::ArityMismatch:
        exit_code = kExitPrecondition;
        report["outcome"] = "precondition-failed";
        break;
    case ErrorCode::ParseError:
        exit_code = kExitIo;
        break;
    }
    return {std::move(report), exit_code};
}

}  // namespace

RunReport run(const Json& config) {
    auto start = std::chrono::steady_clock::now();
    std::string mode = config.value("mode", "");
    Json report = base_report(config, mode);
    try {
        SpaceSpec space = parse_space(config);
        if (mode == "certify-r")
            return finish(run_certify_r(config, std::move(report), space), start);
        if (mode == "certify-covers")
            return finish(run_certify_covers(config, std::move(report), space), start);
        if (mode == "minimal-scan")
            return finish(run_minimal_scan(config, std::move(report), space), start);
        if (mode == "dichotomy")
            return finish(run_dichotomy(config, std::move(report), space), start);
        if (mode == "mesh-check")
            return finish(run_mesh_check(config, std::move(report), space), start);
        throw Error(ErrorCode::ParseError, "unknown mode: " + mode);
    } catch (const Error& e) {
        return finish(error_report(std::move(report), e), start);
    } catch (const Json::exception& e) {
        return finish(error_report(std::move(report),
                                   Error(ErrorCode::ParseError, e.what())),
                      start);
    }
}

namespace {

RunReport replay_certify(const Json& report, Json out, bool cover_mode) {
    VerificationReport ver;
    if (cover_mode) {
        CoverCertificate cert = cover_certificate_from_json(report.at("certificate"));
        ver = verify_cover_certificate(cert);
    } else {
        RCertificate cert = r_certificate_from_json(report.at("certificate"));
        ver = verify_r_certificate(cert);
    }
    out["verification"] = to_json(ver);
    out["outcome"] = ver.passed() ? "verified" : "verification-failed";
    return {std::move(out), ver.passed() ? kExitOk : kExitVerification};
}

RunReport replay_minimal_scan(const Json& report, Json out) {
    TransitionGraph graph = transition_graph_from_json(report.at("graph"));
    SpaceSpec space = parse_space(report.at("config"));
    GeneratorSet gens = generators_from_echo(report.at("config"), space);

    // snapping soundness: each edge target within epsilon of the exact image
    bool snapping_ok = true;
    for (const auto& e : graph.edges) {
        HyperPoint exact = hyper_act(gens.elements[e.gen], graph.nodes[e.from]);
        if (!hyper_within(exact, graph.nodes[e.to], graph.epsilon)) {
            snapping_ok = false;
            break;
        }
    }
    std::vector<BottomComponent> comps = bottom_components(graph);
    Json comp_json = Json::array();
    for (const auto& c : comps) comp_json.push_back(to_json(c));
    bool components_match = comp_json == report.at("components");

    out["snapping_sound"] = snapping_ok;
    out["components_match"] = components_match;
    out["lower_bound_only"] = graph.truncated;
    if (!snapping_ok || !components_match) {
        out["outcome"] = "verification-failed";
        return {std::move(out), kExitVerification};
    }
    out["outcome"] = graph.truncated ? "truncated" : "verified";
    return {std::move(out), graph.truncated ? kExitTruncated : kExitOk};
}

RunReport replay_dichotomy(const Json& report, Json out) {
    const Json& result = report.at("dichotomy");
    std::string outcome = result.at("outcome").get<std::string>();
    if (outcome == "unresolved") {
        out["outcome"] = "unresolved";
        return {std::move(out), kExitTruncated};
    }
    std::vector<SimplexPoint> points;
    for (const auto& p : report.at("config").at("points"))
        points.push_back(simplex_point_from_json(p));
    PLHomeo witness = pl_homeo_from_json(result.at("witness"));
    Q epsilon = rational_from_json(result.at("epsilon"));

    bool ok = false;
    if (outcome == "boundary-push") {
        Q worst(0);
        for (const auto& p : points)
            worst = q_max(worst, boundary_margin(act_simplex(witness, p)));
        ok = worst <= epsilon;
        out["margin_recheck"] = to_string(worst);
    } else if (outcome == "fill") {
        std::vector<SimplexPoint> moved;
        for (const auto& p : points) moved.push_back(act_simplex(witness, p));
        Q defect = fill_defect(moved, epsilon);
        ok = defect <= epsilon;
        out["covering_recheck"] = to_string(defect);
    }
    out["outcome"] = ok ? "verified" : "verification-failed";
    return {std::move(out), ok ? kExitOk : kExitVerification};
}

RunReport replay_mesh_check(const Json& report, Json out) {
    CoverTuple cover = cover_tuple_from_json(report.at("cover"));
    Q m = mesh(cover);
    bool ok = to_string(m) == report.at("mesh").get<std::string>();
    out["mesh_recheck"] = to_string(m);
    out["outcome"] = ok ? "verified" : "verification-failed";
    return {std::move(out), ok ? kExitOk : kExitVerification};
}

}  // namespace

RunReport replay(const Json& report) {
    auto start = std::chrono::steady_clock::now();
    std::string mode = report.value("mode", "");
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["tool_version"] = kToolVersion;
    out["mode"] = "replay:" + mode;
    try {
        if (mode == "certify-r") return finish(replay_certify(report, std::move(out), false), start);
        if (mode == "certify-covers")
            return finish(replay_certify(report, std::move(out), true), start);
        if (mode == "minimal-scan")
            return finish(replay_minimal_scan(report, std::move(out)), start);
        if (mode == "dichotomy") return finish(replay_dichotomy(report, std::move(out)), start);
        if (mode == "mesh-check")
            return finish(replay_mesh_check(report, std::move(out)), start);
        throw Error(ErrorCode::ParseError, "cannot replay mode: " + mode);
    } catch (const Error& e) {
        return finish(error_report(std::move(out), e), start);
    } catch (const Json::exception& e) {
        return finish(error_report(std::move(out), Error(ErrorCode::ParseError, e.what())),
                      start);
    }
}

RunReport run_config_file(const std::string& path) {
    try {
        return run(load_json_file(path));
    } catch (const Error& e) {
        return error_report(Json{{"mode", "unknown"}}, e);
    } catch (const Json::exception& e) {
        return error_report(Json{{"mode", "unknown"}},
                            Error(ErrorCode::ParseError, e.what()));
    }
}

RunReport replay_file(const std::string& path) {
    try {
        return replay(load_json_file(path));
    } catch (const Error& e) {
        return error_report(Json{{"mode", "replay"}}, e);
    } catch (const Json::exception& e) {
        return error_report(Json{{"mode", "replay"}},
                            Error(ErrorCode::ParseError, e.what()));
    }
}

}  // namespace hsdyn
