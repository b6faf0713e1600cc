#include "soplab/report.hpp"

#include <tuple>

#include "soplab/error.hpp"

namespace soplab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedBasis:
      return "unsupported-basis";
    case ErrorKind::Domain:
      return "domain";
    case ErrorKind::Range:
      return "range";
    case ErrorKind::Structural:
      return "structural";
    case ErrorKind::Shape:
      return "shape";
    case ErrorKind::Construction:
      return "construction";
    case ErrorKind::Consistency:
      return "internal-consistency";
    case ErrorKind::ProviderInvariant:
      return "provider-invariant";
    case ErrorKind::Falsification:
      return "falsification";
    case ErrorKind::Parse:
      return "parse";
    case ErrorKind::Usage:
      return "usage";
    case ErrorKind::Io:
      return "io";
  }
  return "unknown";
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

Status status_from_string(std::string_view text) {
  if (text == "pass") return Status::Pass;
  if (text == "fail") return Status::Fail;
  if (text == "inconclusive") return Status::Inconclusive;
  fail(ErrorKind::Parse, "unknown status '" + std::string(text) + "'");
}

void CheckReport::falsify(std::string note, nlohmann::json payload) {
  status = Status::Fail;
  notes.push_back(std::move(note));
  if (witness.is_object() && payload.is_object()) {
    for (auto& [k, v] : payload.items()) witness[k] = v;
  } else {
    witness = std::move(payload);
  }
}

void CheckReport::inconclusive(std::string note) {
  if (status == Status::Pass) status = Status::Inconclusive;
  notes.push_back(std::move(note));
}

nlohmann::json CheckReport::to_json(bool with_runtime) const {
  nlohmann::json j;
  j["claim"] = claim;
  j["status"] = std::string(to_string(status));
  j["params"] = params;
  j["values"] = values;
  j["witness"] = witness;
  j["notes"] = notes;
  if (with_runtime) j["runtime_ns"] = runtime.count();
  return j;
}

CheckReport CheckReport::from_json(nlohmann::json const& j) {
  CheckReport r;
  r.claim = j.at("claim").get<std::string>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.values = j.at("values").get<std::map<std::string, std::string>>();
  r.witness = j.at("witness");
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("runtime_ns"))
    r.runtime = std::chrono::nanoseconds(j.at("runtime_ns").get<long long>());
  return r;
}

void require_pass(CheckReport const& report) {
  if (report.status == Status::Fail) {
    std::string what = report.claim + " falsified";
    if (!report.notes.empty()) what += ": " + report.notes.front();
    throw FalsificationError(what, report.witness);
  }
}

bool report_order(CheckReport const& a, CheckReport const& b) {
  return std::tie(a.claim, a.params) < std::tie(b.claim, b.params);
}

}  // namespace soplab
