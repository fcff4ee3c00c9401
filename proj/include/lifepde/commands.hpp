#pragma once

#include <string>

#include "lifepde/config.hpp"

namespace lifepde {

/// Exit codes shared by the CLI: 0 success, 1 config error, 2 solver error,
/// 3 validation failure.
enum ExitCode : int {
    kOk = 0,
    kConfigError = 1,
    kSolverError = 2,
    kValidationError = 3,
};

struct CommandResult {
    int exit_code = kOk;
    std::string output;   // file payload (written to config.out or stdout)
    std::string message;  // one-line diagnostic for stderr when exit_code != 0
};

/// Pricing run over the configured lambda0 list; requires exactly one n.
CommandResult cmd_price(const RunConfig& cfg);

/// Per-n convergence report (n, A/n, B/n, P, gap, bound); fails with exit 3
/// if any gap exceeds 1/n + 2/sqrt(n) + 5e-3.
CommandResult cmd_converge(const RunConfig& cfg);

/// PDE vs Monte Carlo cross-check for net premium, P and B at each lambda0;
/// fails with exit 3 if any |z| > 4.
CommandResult cmd_mc_check(const RunConfig& cfg);

/// Dumps one solved surface as CSV.  quantity is one of
/// f, g, f0 (density at alpha = 0), P, net, A, B (A and B use the single
/// configured n).
CommandResult cmd_export_surface(const RunConfig& cfg, const std::string& quantity);

}  // namespace lifepde
