#pragma once

#include <string>
#include <vector>

#include "soplab/cli/config.hpp"
#include "soplab/report.hpp"

namespace soplab::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;
inline constexpr int kExitInternal = 70;

/// One JSON object per line, keys sorted; runtime only when `timing`.
std::string render_json_lines(std::vector<CheckReport> const& reports, bool timing = false);
/// Per-claim pass/fail/inconclusive counts and a total line ("0 checks" when
/// empty).
std::string render_summary(std::vector<CheckReport> const& reports);
std::string render(std::vector<CheckReport> const& reports, Format format, bool timing = false);

/// Writes to `path`, or stdout when empty. Throws Error(Io) when the file
/// cannot be written.
void emit_report(std::vector<CheckReport> const& reports, Format format, std::string const& path,
                 bool timing = false);

/// 1 if any report failed, else 2 if any is inconclusive, else 0.
int exit_code(std::vector<CheckReport> const& reports);

}  // namespace soplab::cli
