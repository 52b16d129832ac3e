#pragma once

// Pipeline driver behind the command-line tool: parse a run configuration,
// fit the drift parameter, extrapolate, and serialize a report (json, csv,
// or text).  Identical configurations produce byte-identical reports.

#include "walkextrap/extrapolate.hpp"

#include <optional>
#include <ostream>
#include <string>

namespace walkextrap {

struct RunConfig {
    std::string walk = "ctqw"; // ctqw | dtqw | rw | ctrw-z | dtrw-z
    int n = 2;
    std::optional<double> a;   // may be inferred from a csv function table
    double b = 0.0;
    std::optional<double> r;   // dtqw coin parameter, default 1/sqrt(2)
    std::string function = "builtin:identity"; // builtin:<name> | csv:<path>
    std::string format = "json";               // json | csv | text
    int emit_v_curve = 0;                      // number of p samples, 0 = off
    std::string out;                           // output path, empty = stdout
};

// exit codes shared by run() and the CLI wrapper
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitNumericFailure = 3;

// Runs the full pipeline and writes the serialized report to `out`.
// Diagnostics (and WALK_EXTRAP_LOG-gated progress lines) go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Loads a sampled function from CSV with header "x,y" and strictly
// increasing x starting at 0.
FunctionSpec load_function_csv(const std::string& path);

} // namespace walkextrap
