#include <doctest.h>

#include <sys/wait.h>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "soplab/cli/emit.hpp"
#include "soplab/cli/suites.hpp"
#include "soplab/error.hpp"
#include "soplab/qlinalg/rational.hpp"

using namespace soplab;
using namespace soplab::cli;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

CheckReport make(std::string claim, Status s, std::string p = "") {
  CheckReport r;
  r.claim = std::move(claim);
  r.status = s;
  if (!p.empty()) r.params["p"] = p;
  if (s == Status::Fail) r.witness["why"] = "x";
  return r;
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / "soplab_cli_test";
  std::filesystem::create_directories(d);
  return d;
}

std::string slurp(std::filesystem::path const& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(std::string const& args, std::filesystem::path const& out = {}) {
  std::string cmd = std::string(SOPLAB_BIN) + " " + args;
  cmd += out.empty() ? " > /dev/null 2>&1" : " > " + out.string() + " 2>/dev/null";
  int const status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("summary and json-lines rendering") {
  CHECK(render_json_lines({}).empty());
  CHECK(render_summary({}) == "0 checks\n");

  auto const one = render_json_lines({make("groups.triangle", Status::Pass)});
  CHECK(std::count(one.begin(), one.end(), '\n') == 1);
  CHECK(nlohmann::json::parse(one).at("status") == "pass");
  CHECK_FALSE(nlohmann::json::parse(one).contains("runtime_ns"));
  CHECK(nlohmann::json::parse(render_json_lines({make("a", Status::Pass)}, true))
            .contains("runtime_ns"));

  std::vector<CheckReport> const mixed = {make("a.x", Status::Pass), make("a.x", Status::Fail),
                                          make("b.y", Status::Inconclusive),
                                          make("b.y", Status::Pass)};
  auto const lines = render_json_lines(mixed);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 4);
  auto const summary = render_summary(mixed);
  CHECK(summary.find("a.x: 1 pass, 1 fail, 0 inconclusive") != std::string::npos);
  CHECK(summary.find("b.y: 1 pass, 0 fail, 1 inconclusive") != std::string::npos);
  CHECK(summary.find("4 checks: 2 pass, 1 fail, 1 inconclusive") != std::string::npos);

  // Records survive a round trip.
  std::istringstream in(lines);
  std::string line;
  std::size_t i = 0;
  while (std::getline(in, line)) {
    auto const back = CheckReport::from_json(nlohmann::json::parse(line));
    CHECK(back.claim == mixed[i].claim);
    CHECK(back.status == mixed[i].status);
    ++i;
  }
}

TEST_CASE("exit code contract") {
  CHECK(exit_code({}) == kExitPass);
  CHECK(exit_code({make("a", Status::Pass)}) == kExitPass);
  CHECK(exit_code({make("a", Status::Pass), make("b", Status::Inconclusive)}) == kExitInconclusive);
  CHECK(exit_code({make("a", Status::Inconclusive), make("b", Status::Fail)}) == kExitFail);
}

TEST_CASE("config files") {
  SuiteConfig c;
  apply_config_text(c,
                    "# desk run\nsuite = groups enumerate\nmax-cosets = 500\npreset=cyclic-5\n"
                    "relabel = false\nformat = summary-text\n");
  CHECK(c.suite == "groups enumerate");
  CHECK(c.max_cosets == 500);
  CHECK(c.preset == "cyclic-5");
  CHECK_FALSE(c.relabel);
  CHECK(c.format == Format::SummaryText);

  SuiteConfig round;
  apply_config_text(round, to_config_text(c));
  CHECK(to_config_text(round) == to_config_text(c));

  CHECK(kind_of([&] { apply_config_text(c, "colour = red\n"); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { apply_config_text(c, "n = seven\n"); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { apply_config_text(c, "n 7\n"); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { apply_config_text(c, "suite = verify nothing\n"); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { apply_config_file(c, "/nonexistent/soplab.cfg"); }) == ErrorKind::Io);

  SuiteConfig bad;
  bad.n = 2;
  CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::Usage);
}

TEST_CASE("suites dispatch and sort") {
  SuiteConfig c;
  c.suite = "groups enumerate";
  c.preset = "triangle";
  auto const reports = run_suite(c);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].claim == "groups.enumerate");
  CHECK(reports[1].claim == "groups.triangle");
  CHECK(reports[1].witness.at("table") == "Closed(1)");
  CHECK(exit_code(reports) == kExitPass);

  c.suite = "groups chain-check";
  c.k = 2;
  CHECK(exit_code(run_suite(c)) == kExitPass);
  c.suite = "groups britton";
  CHECK(run_suite(c).front().values.at("nontrivial") == "1/1");
  c.suite = "groups amalgamate";
  CHECK(exit_code(run_suite(c)) == kExitPass);
  c.suite = "verify sop-type";
  CHECK(exit_code(run_suite(c)) == kExitPass);

  c.suite = "groups enumerate";
  c.preset = "pentagon";
  CHECK(kind_of([&] { run_suite(c); }) == ErrorKind::Usage);
  c.suite = "";
  CHECK(kind_of([&] { run_suite(c); }) == ErrorKind::Usage);
}

TEST_CASE("amalgam suite is deterministic") {
  SuiteConfig c;
  c.suite = "verify amalgam";
  c.provider = "simple";
  c.j = 3;
  c.seed = 5;
  auto const a = render_json_lines(run_suite(c));
  CHECK(a == render_json_lines(run_suite(c)));
  CHECK(exit_code(run_suite(c)) == kExitPass);
}

TEST_CASE("command line") {
  auto const dir = temp_dir();
  CHECK(run("groups enumerate --preset triangle --max-cosets 1000000") == kExitPass);
  CHECK(run("groups enumerate --preset higman --max-cosets 1000") == kExitInconclusive);
  CHECK(run("groups enumerate --preset nowhere") == kExitUsage);
  CHECK(run("verify") == kExitUsage);
  CHECK(run("--bogus") == kExitUsage);
  CHECK(run("") == kExitUsage);
  CHECK(run("--help") == kExitPass);
  CHECK(run("groups britton --word 'c-1 b c'") == kExitPass);
  CHECK(run("groups britton --word 'c-1 q c'") == kExitUsage);

  auto const out = dir / "amalgam.jsonl";
  std::filesystem::remove(out);
  CHECK(run("verify amalgam --provider simple --j 3 --seed 9 --out " + out.string()) == kExitPass);
  auto const first = slurp(out);
  CHECK_FALSE(first.empty());
  CHECK(run("verify amalgam --provider simple --j 3 --seed 9 --out " + out.string()) == kExitPass);
  CHECK(slurp(out) == first);
  CHECK(run("verify amalgam --provider simple --j 3 --out /nonexistent/dir/x.jsonl") == kExitIo);

  auto const cfg = dir / "run.cfg";
  std::ofstream(cfg) << "suite = groups enumerate\npreset = cyclic-5\nformat = summary-text\n";
  auto const summary = dir / "summary.txt";
  CHECK(run("--config " + cfg.string(), summary) == kExitPass);
  CHECK(slurp(summary).find("1 check: 1 pass") != std::string::npos);
  // Command-line flags override the file.
  CHECK(run("--config " + cfg.string() + " --format json-lines groups enumerate --preset two-cycle",
            summary) == kExitPass);
  CHECK(slurp(summary).find("\"two-cycle\"") != std::string::npos);
  CHECK(run("--config /nonexistent.cfg groups britton") == kExitIo);
}

TEST_CASE("report values are p/q strings and failures carry witnesses") {
  SuiteConfig c;
  c.trials = 50;
  c.samples = 50;
  c.max_cosets = 2000;
  c.k = 3;
  for (auto const& suite : suite_names()) {
    c.suite = suite;
    for (auto const& r : run_suite(c)) {
      for (auto const& [key, value] : r.values) {
        INFO(r.claim << " " << key << " = " << value);
        CHECK(value.find('/') != std::string::npos);
        CHECK(qlinalg::to_string(qlinalg::parse_rational(value)) == value);
      }
      if (r.status == Status::Fail) CHECK_FALSE(r.witness.empty());
    }
  }
}
