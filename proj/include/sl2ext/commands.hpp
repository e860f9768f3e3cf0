#pragma once

// Command layer behind the sl2ext executable.  Every command returns the
// bytes destined for stdout and stderr together with an exit status, so the
// same code paths are exercised by tests and by the binary.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2ext/integer.hpp"
#include "sl2ext/trace.hpp"

namespace sl2ext {

inline constexpr const char* engine_version = "1.0.0";

enum ExitStatus : int { exit_success = 0, exit_check_failure = 1, exit_usage_error = 2 };

struct CommandOutput {
    std::string out;
    std::string err;
    int status = exit_success;
};

using Json = nlohmann::ordered_json;

/// Decimal JSON number when it fits in 64 bits, otherwise a decimal string.
Json natural_to_json(const Natural& x);

/// {"root": id, "nodes": {id: {"m","n","s","rule","dim","children":[{"i","node_id"}]}}}
/// A DAG with several roots carries "roots" instead of "root".
Json trace_to_json(const TraceDag& dag);

CommandOutput cmd_ext(Index p, Index r, std::optional<Index> q);
CommandOutput cmd_ext_dn(Index p, Index n, Index m, Index s);
CommandOutput cmd_trace(Index p, Index n, Index m, Index s, const std::string& format, bool prune);
CommandOutput cmd_blocks(Index p, Index lambda, Index mu, std::optional<Index> oracle_bound);
CommandOutput cmd_verify(const std::vector<Index>& primes, Index r_max);
CommandOutput cmd_hilbert(Index p, Index r, Index max_degree);

/// Parses argv and dispatches.  argv[0] is the program name.
CommandOutput run_cli(const std::vector<std::string>& args);

} // namespace sl2ext
