#ifndef CONELAB_RUNNER_HPP
#define CONELAB_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "conelab/parser.hpp"

namespace conelab {

// Stable exit-code contract.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceCap = 3;
inline constexpr int kExitInternalError = 4;

struct RunOptions {
    std::optional<std::string> order;           // ring order override: lex | grevlex
    std::optional<std::string> param;           // family parameter override
    std::optional<std::string> test_ideal_file; // script providing the test ideal
    uint64_t seed = 0;
    bool saturate = false; // also evaluate the saturation variant
    bool verify = false;   // verdict: verify the conclusion by direct computation
    size_t max_pairs = 500000;
    std::vector<std::string> dirs;          // direction variable names
    std::optional<std::string> poly;        // inline polynomial (no script file)
    std::optional<std::string> ideal_name;  // binding override
};

struct RunResult {
    nlohmann::json report;
    int exit_code = kExitTrue;
};

// Dispatch one command against the bindings of a parsed script.  Input errors
// and resource caps are reported inside the result, never thrown.
RunResult run_command(const SessionScript& script, const std::string& command,
                      const std::vector<std::string>& args, const RunOptions& opts);

// Convenience: script text from a --poly flag, inferring the ring from the
// order of first occurrence of identifiers (plus the declared parameter).
SessionScript script_from_inline_poly(const std::string& poly_text,
                                      const std::optional<std::string>& param);

} // namespace conelab

#endif
