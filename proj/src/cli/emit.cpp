#include "soplab/cli/emit.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "soplab/error.hpp"

namespace soplab::cli {

std::string render_json_lines(std::vector<CheckReport> const& reports, bool timing) {
  std::string out;
  for (auto const& r : reports) out += r.to_json(timing).dump() + "\n";
  return out;
}

std::string render_summary(std::vector<CheckReport> const& reports) {
  struct Counts {
    std::size_t pass = 0, fail = 0, inconclusive = 0;
    void add(Status s) {
      (s == Status::Pass ? pass : s == Status::Fail ? fail : inconclusive) += 1;
    }
  };
  std::map<std::string, Counts> by_claim;
  Counts total;
  for (auto const& r : reports) {
    by_claim[r.claim].add(r.status);
    total.add(r.status);
  }
  std::ostringstream out;
  for (auto const& [claim, c] : by_claim)
    out << claim << ": " << c.pass << " pass, " << c.fail << " fail, " << c.inconclusive
        << " inconclusive\n";
  out << reports.size() << (reports.size() == 1 ? " check" : " checks");
  if (!reports.empty())
    out << ": " << total.pass << " pass, " << total.fail << " fail, " << total.inconclusive
        << " inconclusive";
  out << "\n";
  return out.str();
}

std::string render(std::vector<CheckReport> const& reports, Format format, bool timing) {
  return format == Format::JsonLines ? render_json_lines(reports, timing) : render_summary(reports);
}

void emit_report(std::vector<CheckReport> const& reports, Format format, std::string const& path,
                 bool timing) {
  auto const text = render(reports, format, timing);
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) fail(ErrorKind::Io, "write to " + path + " failed");
}

int exit_code(std::vector<CheckReport> const& reports) {
  bool inconclusive = false;
  for (auto const& r : reports) {
    if (r.status == Status::Fail) return kExitFail;
    if (r.status == Status::Inconclusive) inconclusive = true;
  }
  return inconclusive ? kExitInconclusive : kExitPass;
}

}  // namespace soplab::cli
