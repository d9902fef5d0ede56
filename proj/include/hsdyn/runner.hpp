#pragma once

#include "hsdyn/json_io.hpp"

#include <string>

namespace hsdyn {

// Exit contract shared by run and replay.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitTruncated = 4;
inline constexpr int kExitIo = 5;

struct RunReport {
    Json document;
    int exit_code = kExitOk;
};

// Dispatches on config["mode"]: certify-r, certify-covers, minimal-scan,
// dichotomy, mesh-check. Deterministic given (config, seed); the timing_ms
// field is the only nondeterministic part of the document.
RunReport run(const Json& config);

// Re-checks an existing report without re-running the build.
RunReport replay(const Json& report);

RunReport run_config_file(const std::string& path);
RunReport replay_file(const std::string& path);

}  // namespace hsdyn
