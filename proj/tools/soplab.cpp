// soplab: batch runner for the verification suites.

#include <CLI11.hpp>

#include <iostream>
#include <string_view>

#include "soplab/cli/emit.hpp"
#include "soplab/cli/suites.hpp"
#include "soplab/error.hpp"

using namespace soplab;
using namespace soplab::cli;

namespace {

int code_for(Error const& e) {
  switch (e.kind()) {
    case ErrorKind::Usage:
    case ErrorKind::Parse:
    case ErrorKind::Range:
      return kExitUsage;
    case ErrorKind::Io:
      return kExitIo;
    default:
      return kExitInternal;
  }
}

// --config is read before the command line so explicit flags override it.
std::string find_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    std::string_view const a = argv[i];
    if (a == "--config" && i + 1 < argc)
      path = argv[i + 1];
    else if (a.starts_with("--config="))
      path = std::string(a.substr(9));
  }
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  SuiteConfig cfg;
  try {
    if (auto const path = find_config(argc, argv); !path.empty()) apply_config_file(cfg, path);
  } catch (Error const& e) {
    std::cerr << "soplab: " << e.what() << "\n";
    return code_for(e);
  }

  CLI::App app{"Exact verification suites for the order-property toolkit"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  std::string config_path, format(to_string(cfg.format));
  app.add_option("--config", config_path, "flat key=value file with suite parameters");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--out", cfg.out, "output file (default: stdout)");
  app.add_option("--format", format, "json-lines or summary-text")
      ->check(CLI::IsMember({"json-lines", "summary-text"}));
  app.add_flag("--timing", cfg.timing, "include runtimes in json-lines records");

  auto* verify = app.add_subcommand("verify", "Banach-space and amalgam verification");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_banach = verify->add_subcommand("banach", "equalities, chain, cycles, term shift");
  v_banach->add_option("--n", cfg.n, "formula index n");
  v_banach->add_option("--range", cfg.range, "index range for the equalities");
  v_banach->add_option("--chain", cfg.chain, "chain length");
  v_banach->add_option("--trials", cfg.trials, "cycle attempts per m");
  v_banach->add_option("--samples", cfg.samples, "entailment samples");
  v_banach->add_option("--n-max", cfg.n_max, "term-shift bound");
  auto* v_amalgam = verify->add_subcommand("amalgam", "convergence claims and rho bounds");
  v_amalgam->add_option("--provider", cfg.provider, "canonical, simple, or a provider file");
  v_amalgam->add_option("--j", cfg.j, "stage parameter j (m = j^2)");
  v_amalgam->add_option("--jmax", cfg.j_max, "largest j for the rho interval");
  v_amalgam->add_option("--window", cfg.window, "indiscernibility window");
  v_amalgam->add_option("--samples", cfg.samples, "indiscernibility samples");
  auto* v_type = verify->add_subcommand("sop-type", "type p along the chain");
  v_type->add_option("--type-n", cfg.type_n, "number of conjuncts N");
  v_type->add_option("--chain", cfg.chain, "chain length");

  auto* grp = app.add_subcommand("groups", "combinatorial group theory checks");
  grp->require_subcommand(1);
  grp->fallthrough();
  auto* g_enum = grp->add_subcommand("enumerate", "coset enumeration over the trivial subgroup");
  g_enum->add_option("--preset", cfg.preset, "triangle, two-cycle, higman, chain-k, cyclic-N");
  g_enum->add_option("--presentation", cfg.presentation, "presentation file");
  g_enum->add_option("--max-cosets", cfg.max_cosets, "coset limit");
  auto* g_britton = grp->add_subcommand("britton", "Britton reduction in the path group");
  g_britton->add_option("--word", cfg.word, "word over a, b, c");
  auto* g_amalg = grp->add_subcommand("amalgamate", "free amalgamation of an adjacency type");
  g_amalg->add_option("--type", cfg.adjacency, "sq-pair, free-pair, central-pair");
  g_amalg->add_option("--relabel", cfg.relabel, "relabel the pair (3,0)");
  g_amalg->add_option("--max-cosets", cfg.max_cosets, "coset limit for tracing");
  auto* g_chain = grp->add_subcommand("chain-check", "affine chain model and chain probes");
  g_chain->add_option("--k", cfg.k, "longest chain presentation probed");
  g_chain->add_option("--max-cosets", cfg.max_cosets, "coset limit");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    cfg.format = format_from_string(format);
    for (auto* parent : {verify, grp})
      for (auto* sub : parent->get_subcommands())
        cfg.suite = parent->get_name() + " " + sub->get_name();
    if (cfg.suite.empty()) {
      std::cerr << "soplab: no suite given\n" << app.help();
      return kExitUsage;
    }
    auto const reports = run_suite(cfg);
    emit_report(reports, cfg.format, cfg.out, cfg.timing);
    return exit_code(reports);
  } catch (Error const& e) {
    std::cerr << "soplab: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return code_for(e);
  }
}
