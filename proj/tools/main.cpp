#include "hsdyn/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    std::string epsilon, delta, space;
    std::optional<long long> budget, depth, seed;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "experiment config (JSON)");
    cmd->add_option("--out", opts.out_path, "write the report here instead of stdout");
    cmd->add_option("--epsilon", opts.epsilon, "resolution, e.g. 1/16");
    cmd->add_option("--delta", opts.delta, "separation parameter, e.g. 1/8");
    cmd->add_option("--budget", opts.budget, "node budget for exploration");
    cmd->add_option("--depth", opts.depth, "search depth / cantor depth");
    cmd->add_option("--seed", opts.seed, "seed echoed into the report");
    cmd->add_option("--space", opts.space, "interval or cantor:<depth>");
}

hsdyn::Json build_config(const std::string& mode, const CommonOpts& opts) {
    hsdyn::Json config = hsdyn::Json::object();
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) {
            std::cerr << "cannot open config: " << opts.config_path << "\n";
            std::exit(hsdyn::kExitIo);
        }
        try {
            in >> config;
        } catch (const std::exception& e) {
            std::cerr << "config parse error: " << e.what() << "\n";
            std::exit(hsdyn::kExitIo);
        }
    }
    config["mode"] = mode;
    if (!opts.epsilon.empty()) config["epsilon"] = opts.epsilon;
    if (!opts.delta.empty()) config["delta"] = opts.delta;
    if (!opts.space.empty()) config["space"] = opts.space;
    if (opts.budget) config["budget"] = *opts.budget;
    if (opts.depth) config["depth"] = *opts.depth;
    if (opts.seed) config["seed"] = *opts.seed;
    return config;
}

int emit(const hsdyn::RunReport& report, const std::string& out_path) {
    std::string text = report.document.dump(2);
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return hsdyn::kExitIo;
        }
        out << text << "\n";
    }
    if (report.document.contains("outcome"))
        std::cerr << "outcome: " << report.document["outcome"].get<std::string>() << "\n";
    return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hyperspace dynamics for homeomorphism groups"};
    app.require_subcommand(1);

    const char* modes[] = {"certify-r", "certify-covers", "minimal-scan", "dichotomy",
                           "mesh-check"};
    const char* descriptions[] = {
        "build and verify a graph-family separation certificate",
        "build and verify a cover-family separation certificate",
        "explore an epsilon-net orbit graph and report bottom components",
        "search for a boundary-push / fill witness on the simplex",
        "build the uniform cover for a mesh and check refinement",
    };
    std::vector<CommonOpts> opts(5);
    for (int i = 0; i < 5; ++i) add_common(app.add_subcommand(modes[i], descriptions[i]), opts[i]);

    std::string replay_path, replay_out;
    auto* replay_cmd = app.add_subcommand("replay", "re-verify an existing report");
    replay_cmd->add_option("report", replay_path, "report JSON to re-check")->required();
    replay_cmd->add_option("--out", replay_out, "write the replay result here");

    CLI11_PARSE(app, argc, argv);

    if (replay_cmd->parsed()) return emit(hsdyn::replay_file(replay_path), replay_out);
    for (int i = 0; i < 5; ++i) {
        if (app.get_subcommand(modes[i])->parsed())
            return emit(hsdyn::run(build_config(modes[i], opts[i])), opts[i].out_path);
    }
    return hsdyn::kExitIo;
}
