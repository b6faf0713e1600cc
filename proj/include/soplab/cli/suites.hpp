#pragma once

#include <vector>

#include "soplab/cli/config.hpp"
#include "soplab/report.hpp"

namespace soplab::cli {

/// Runs the configured suite and returns its reports in claim/params order.
/// Deterministic given the config. Throws Error(Usage) for an unknown suite.
std::vector<CheckReport> run_suite(SuiteConfig const& cfg);

}  // namespace soplab::cli
