#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bmv/config.hpp"
#include "bmv/conventions.hpp"

namespace bmv {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailure = 1,
  kExitConfigError = 2,
  kExitComputationError = 3,
};

// Each command renders its complete output into a string; nothing is written
// until the whole computation has succeeded. Computation errors propagate as
// bmv::Error, configuration problems as ConfigError.
std::string cmd_evolve(const RunConfig& cfg);
std::string cmd_fig2(const RunConfig& cfg);
std::string cmd_fig3(const RunConfig& cfg);
std::string cmd_snr(const RunConfig& cfg);
std::string cmd_feasibility(const RunConfig& cfg);

// Writes one JSON object per property plus a summary object; returns
// kExitOk or kExitPropertyFailure.
int cmd_check(std::ostream& out, const SignConventions& conv = kCanonicalConventions);

// theta2 values plotted by fig2 when the config gives none:
// 0, phi/4, phi/2, 3 phi/4, phi, pi.
std::vector<double> default_fig2_theta2_values(double phi);

// grid plus 101 points over [0, phi], sorted and deduplicated.
std::vector<double> with_fine_points(std::vector<double> grid, double phi);

// Full command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bmv
