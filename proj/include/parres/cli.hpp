#pragma once

#include "parres/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace parres::cli {

// Exit codes: 0 success, 1 configuration error, 2 numerical failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumeric = 2;

/// Table of reference unstable zones (orders 3, 4, 6) at the standard
/// perturber distance, next to the embedded reference columns.
void cmd_table1(const RunConfig& cfg, std::ostream& out);

/// Width/gap/margin versus eccentricity for the configured order n.
void cmd_fig1(const RunConfig& cfg, std::ostream& out);

/// Grid scans: kind is one of zones | floquet | rtbp | overlap.
void cmd_scan(const RunConfig& cfg, const std::string& kind, std::ostream& out);

/// Dump the assembled Hill coefficients for the configured orbit.
void cmd_coeffs(const RunConfig& cfg, std::ostream& out);

/// Closed-form smallest overlapping order for the configured m and b_ref.
void cmd_critical_order(const RunConfig& cfg, std::ostream& out);

/// Full command-line entry point (argument parsing, config loading, output
/// redirection). Streams are injectable so tests can run commands
/// in-process.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace parres::cli
