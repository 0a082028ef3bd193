// Command-line front end: every verification as a batch run.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.

#include <cstddef>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uniformpt/commands.hpp"
#include "uniformpt/errors.hpp"

namespace {
  constexpr int EXIT_USAGE = 2;

  struct Dimensions {
    std::size_t n = 0;
    std::size_t m = 0;
  };

  void add_dimensions(CLI::App* sub, Dimensions& d) {
    sub->add_option("n", d.n, "Block size")->required()->check(
        CLI::Range(std::size_t(1), std::size_t(1000)));
    sub->add_option("m", d.m, "Number of blocks")
        ->required()
        ->check(CLI::Range(std::size_t(1), std::size_t(1000)));
  }
}  // namespace

int main(int argc, char** argv) {
  using namespace uniformpt;

  CLI::App app{"Partial transformations preserving a uniform partition"};
  app.require_subcommand(1);

  CommandOptions opts;
  bool           json      = false;
  bool           no_timing = false;
  app.add_option("--limit", opts.limit, "Enumeration element cap")
      ->capture_default_str();
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--no-timing", no_timing, "Omit elapsed times");

  Dimensions d;

  auto* order = app.add_subcommand("order", "Order of PT_{n x m}");
  bool  enumerate_flag = false;
  add_dimensions(order, d);
  order->add_flag("--enumerate", enumerate_flag, "Cross-check by enumeration");

  auto* gens = app.add_subcommand("verify-generators",
                                  "The five generators and their subsets");
  add_dimensions(gens, d);

  auto* cong = app.add_subcommand("verify-congruence",
                                  "Kernel of phi versus the one-pair congruence");
  add_dimensions(cong, d);

  auto*               pres = app.add_subcommand("verify-presentation",
                                  "Evaluate the relation sets");
  PresentationOptions popts;
  std::string         rp, rt;
  add_dimensions(pres, d);
  pres->add_option("--rp", rp, "Relations for PT_n over pi rho tau sigma")
      ->check(CLI::ExistingFile);
  pres->add_option("--rt", rt, "Relations for T_m over piB rhoB tauB")
      ->check(CLI::ExistingFile);
  pres->add_flag("--define", popts.define, "Run Todd-Coxeter on the presentations");
  pres->add_option("--node-limit", popts.node_limit, "Todd-Coxeter node cap")
      ->capture_default_str();

  auto*       eval = app.add_subcommand("eval", "Evaluate a word");
  std::string expr;
  bool        block = false;
  eval->add_option("word", expr, "Word, e.g. \"( rho sigma )^2\"")->required();
  add_dimensions(eval, d);
  eval->add_flag("--block", block, "Evaluate in PT_{n x m}");

  auto*            en = app.add_subcommand("enumerate", "Enumerate a submonoid");
  EnumerateOptions eopts;
  std::string      export_path, rules_path;
  add_dimensions(en, d);
  en->add_flag("--block", eopts.block, "Enumerate in PT_{n x m}");
  en->add_option("--generators", eopts.generators, "Generator names")
      ->delimiter(',');
  en->add_option("--export", export_path, "Write right Cayley edges");
  en->add_option("--rules", rules_path, "Write defining relations");

  for (auto* sub : {order, gens, cong, pres, eval, en}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : EXIT_USAGE;
  }

  RunReport report;
  try {
    if (*order) {
      report = cmd_order(d.n, d.m, enumerate_flag, opts);
    } else if (*gens) {
      report = cmd_verify_generators(d.n, d.m, opts);
    } else if (*cong) {
      report = cmd_verify_congruence(d.n, d.m, opts);
    } else if (*pres) {
      if (!rp.empty()) {
        popts.rp_path = rp;
      }
      if (!rt.empty()) {
        popts.rt_path = rt;
      }
      report = cmd_verify_presentation(d.n, d.m, popts, opts);
    } else if (*eval) {
      report = cmd_eval(expr, d.n, d.m, block);
    } else if (*en) {
      if (!export_path.empty()) {
        eopts.export_path = export_path;
      }
      if (!rules_path.empty()) {
        eopts.rules_path = rules_path;
      }
      report = cmd_enumerate(d.n, d.m, eopts, opts);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return EXIT_USAGE;
  }

  if (json) {
    std::cout << report.to_json(!no_timing).dump(2) << '\n';
  } else if (*eval) {
    std::cout << *report.value << '\n';
  } else {
    std::cout << report.to_text(!no_timing);
  }
  return report.exit_code();
}
