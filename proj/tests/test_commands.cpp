#include <filesystem>
#include <fstream>

#include "catch_amalgamated.hpp"

#include "uniformpt/commands.hpp"
#include "uniformpt/presentation.hpp"

namespace uniformpt {

  namespace {
    bool all_pass(RunReport const& r) {
      for (auto const& c : r.checks) {
        if (c.status != Status::pass) {
          return false;
        }
      }
      return !r.checks.empty();
    }

    std::filesystem::path temp_path(std::string const& name) {
      return std::filesystem::temp_directory_path()
             / ("uniformpt_test_" + name);
    }
  }  // namespace

  TEST_CASE("report formatting", "[report]") {
    RunReport r{"order 2 2", 2, 2, std::string("289"), {}};
    REQUIRE(r.passed());
    REQUIRE(r.exit_code() == 0);
    Check c;
    c.name   = "something";
    c.status = Status::pass;
    c.measure("size", "289");
    r.checks.push_back(c);
    c.status = Status::skipped;
    r.checks.push_back(c);
    REQUIRE(r.exit_code() == 0);
    auto const text = r.to_text(false);
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("[PASS] something"));
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("[SKIP] something"));
    REQUIRE_THAT(text, Catch::Matchers::ContainsSubstring("size=289"));
    REQUIRE_THAT(text, Catch::Matchers::EndsWith("result: PASS\n"));

    c.status = Status::fail;
    r.checks.push_back(c);
    REQUIRE(r.exit_code() == 1);
    auto const json = r.to_json(false);
    REQUIRE(json["result"] == "fail");
    REQUIRE(json["value"] == "289");
    REQUIRE(json["checks"].size() == 3);
    REQUIRE(json["checks"][0]["measured"]["size"] == "289");
    REQUIRE(!json["checks"][0].contains("elapsed_ms"));
    REQUIRE(r.to_json(true)["checks"][0].contains("elapsed_ms"));
  }

  TEST_CASE("cmd_order", "[commands]") {
    auto const r = cmd_order(5, 5, false);
    REQUIRE(r.value == "88798957515761812069376");
    REQUIRE(r.passed());
    auto const e = cmd_order(2, 2, true);
    REQUIRE(e.value == "289");
    REQUIRE(all_pass(e));
    REQUIRE(e.checks.size() >= 2);
    REQUIRE_THROWS_AS(cmd_order(0, 2, false), Error);
  }

  TEST_CASE("verification commands pass", "[commands]") {
    REQUIRE(all_pass(cmd_verify_generators(2, 2)));
    REQUIRE(all_pass(cmd_verify_congruence(2, 2)));
    REQUIRE(all_pass(cmd_verify_presentation(2, 2, {})));
    PresentationOptions define;
    define.define = true;
    auto const p = cmd_verify_presentation(2, 2, define);
    REQUIRE(all_pass(p));

    CommandOptions tiny;
    tiny.limit = 10;
    auto const limited = cmd_verify_generators(2, 2, tiny);
    REQUIRE(limited.exit_code() == 0);
    REQUIRE(limited.checks.front().status == Status::skipped);
  }

  TEST_CASE("verify-presentation with a broken R_P", "[commands]") {
    auto const path = temp_path("bad_rp.txt");
    {
      std::ofstream out(path);
      out << "# alphabet: pi rho tau sigma\n# label: R_P\nrho = pi\npi = 1\n";
    }
    PresentationOptions popts;
    popts.rp_path = path;
    popts.define  = true;
    auto const r  = cmd_verify_presentation(2, 2, popts);
    REQUIRE(r.exit_code() == 1);

    popts.rp_path = temp_path("does_not_exist.txt");
    auto const missing = cmd_verify_presentation(2, 2, popts);
    REQUIRE(missing.exit_code() == 0);
    bool skipped = false;
    for (auto const& c : missing.checks) {
      skipped = skipped || c.status == Status::skipped;
    }
    REQUIRE(skipped);
    std::filesystem::remove(path);
  }

  TEST_CASE("cmd_eval and cmd_enumerate", "[commands]") {
    REQUIRE(cmd_eval("( rho sigma )^2", 2, 2, true).value
            == "n=2 m=2 [-,-,3,4]");
    REQUIRE(cmd_eval("x1 x2", 2, 2, false).value == "([2,1] | [2,1] ; [2,1])");
    REQUIRE_THROWS_AS(cmd_eval("x1 (", 2, 2, false), ParseError);
    REQUIRE_THROWS_AS(cmd_eval("bogus", 2, 2, false), Error);

    EnumerateOptions eopts;
    eopts.rules_path  = temp_path("rules.txt");
    eopts.export_path = temp_path("edges.txt");
    auto const r      = cmd_enumerate(2, 2, eopts);
    REQUIRE(r.value == "324");
    auto const p = load_presentation(*eopts.rules_path);
    REQUIRE(free_quotient_size(p) == BigCount(324));
    std::ifstream edges(*eopts.export_path);
    std::size_t   lines = 0;
    for (std::string line; std::getline(edges, line);) {
      ++lines;
    }
    REQUIRE(lines == 324 * 5);

    eopts.block      = true;
    eopts.generators = {"pi", "rho", "tau", "sigma"};
    REQUIRE(cmd_enumerate(2, 2, eopts).value == "9");
    std::filesystem::remove(*eopts.rules_path);
    std::filesystem::remove(*eopts.export_path);
  }

  TEST_CASE("data directory override", "[commands]") {
    REQUIRE(default_rp_path(3).filename() == "rp_n3.txt");
    REQUIRE(default_rt_path(2).filename() == "rt_m2.txt");
    REQUIRE(std::filesystem::exists(default_rp_path(2)));
  }

}  // namespace uniformpt
