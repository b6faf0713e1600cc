#pragma once

#include <chrono>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace soplab {

enum class Status { Pass, Fail, Inconclusive };

std::string_view to_string(Status status);
Status status_from_string(std::string_view text);

/// Outcome of one verification claim.
///
/// `claim` is a frozen identifier such as "banach.eq1" or "groups.triangle".
/// Exact quantities live in `values` as "p/q" strings, keyed by name; the
/// witness payload is free-form JSON and must be populated whenever the
/// status is Fail.
struct CheckReport {
  std::string claim;
  Status status = Status::Pass;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> values;
  nlohmann::json witness = nlohmann::json::object();
  std::vector<std::string> notes;
  std::chrono::nanoseconds runtime{0};

  bool passed() const { return status == Status::Pass; }

  /// Marks the report failed and records the witness.
  void falsify(std::string note, nlohmann::json payload);

  /// Downgrades Pass to Inconclusive; Fail stays Fail.
  void inconclusive(std::string note);

  /// JSON record without the runtime field, so equal inputs give equal bytes.
  nlohmann::json to_json(bool with_runtime = false) const;
  static CheckReport from_json(nlohmann::json const& j);
};

/// Throws FalsificationError when the report failed.
void require_pass(CheckReport const& report);

/// Sort key used whenever reports are merged: claim id, then parameters.
bool report_order(CheckReport const& a, CheckReport const& b);

/// Runs `body` and stores its wall time into `report.runtime`.
template <typename F>
void timed(CheckReport& report, F&& body) {
  auto const start = std::chrono::steady_clock::now();
  body();
  report.runtime = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
}

}  // namespace soplab
