#include "uniformpt/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "uniformpt/congruence.hpp"
#include "uniformpt/errors.hpp"
#include "uniformpt/generators.hpp"

namespace uniformpt {

  namespace {
    std::string str(BigCount const& x) {
      return x.str();
    }

    std::string str(std::size_t x) {
      return std::to_string(x);
    }

    // Runs `body` and times it; an exceeded limit marks the check skipped.
    template <typename Body>
    Check run_check(std::string name, Body&& body) {
      Check     c;
      c.name = std::move(name);
      Stopwatch clock;
      try {
        body(c);
      } catch (LimitExceeded const& e) {
        c.status = Status::skipped;
        c.note   = e.what();
      }
      c.elapsed_ms = clock.elapsed_ms();
      return c;
    }

    Status status_of(bool ok) {
      return ok ? Status::pass : Status::fail;
    }

    template <typename Element>
    std::vector<Element> elements_of(Alphabet<Element> const&        a,
                                     std::vector<std::string> const& names) {
      std::vector<Element> result;
      for (auto const& name : names) {
        result.push_back(a.at(name));
      }
      return result;
    }

    std::size_t factorial(std::size_t k) {
      std::size_t result = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        result *= i;
      }
      return result;
    }

    std::size_t unit_group_order(std::size_t n, std::size_t m) {
      std::size_t result = factorial(m);
      for (std::size_t j = 0; j < m; ++j) {
        result *= factorial(n);
      }
      return result;
    }

    std::size_t int_pow(std::size_t b, std::size_t e) {
      std::size_t result = 1;
      for (std::size_t i = 0; i < e; ++i) {
        result *= b;
      }
      return result;
    }

    std::string order_command(std::size_t n, std::size_t m, bool enumerate) {
      return "order " + str(n) + " " + str(m)
             + (enumerate ? " --enumerate" : "");
    }

    template <typename Element>
    void add_relation_check(RunReport&               report,
                            std::string              name,
                            Alphabet<Element> const& a,
                            RelationList const&      rels,
                            bool                     expect_hold) {
      report.checks.push_back(run_check(std::move(name), [&](Check& c) {
        auto result = check_relations(a, rels);
        c.measure("relations", str(rels.size()))
            .measure("failures", str(result.failures()));
        bool ok = expect_hold ? result.all_hold()
                              : result.failures() == rels.size();
        c.status = status_of(ok);
        if (!expect_hold) {
          c.note = "expected to fail";
        }
        for (auto const& rc : result.checks) {
          if (rc.holds == expect_hold) {
            continue;
          }
          c.note += (c.note.empty() ? "" : "; ") + rc.relation.to_string();
          if (!rc.holds) {
            c.note += " gives " + rc.lhs_value + " vs " + rc.rhs_value;
          }
          break;
        }
      }));
    }

    std::optional<Presentation> try_load(std::filesystem::path const& path,
                                         std::string const&           label) {
      if (!std::filesystem::exists(path)) {
        return std::nullopt;
      }
      return load_presentation(path, label);
    }
  }  // namespace

  std::filesystem::path data_directory() {
    if (char const* env = std::getenv("UNIFORMPT_DATA_DIR");
        env != nullptr && *env != '\0') {
      return env;
    }
    return UNIFORMPT_DATA_DIR;
  }

  std::filesystem::path default_rp_path(std::size_t n) {
    return data_directory() / "presentations" / ("rp_n" + str(n) + ".txt");
  }

  std::filesystem::path default_rt_path(std::size_t m) {
    return data_directory() / "presentations" / ("rt_m" + str(m) + ".txt");
  }

  RunReport cmd_order(std::size_t           n,
                      std::size_t           m,
                      bool                  enumerate,
                      CommandOptions const& opts) {
    RunReport report{order_command(n, m, enumerate), n, m, {}, {}};
    BigCount const expected = order_formula(n, m);
    report.value            = str(expected);
    report.checks.push_back(run_check("formula", [&](Check& c) {
      c.measure("order", str(expected));
    }));
    if (!enumerate) {
      return report;
    }
    report.checks.push_back(
        run_check("closure of the five generators", [&](Check& c) {
          if (n < 2 || m < 2) {
            c.status = Status::skipped;
            c.note   = "the generators need n, m >= 2";
            return;
          }
          auto const block = block_alphabet(build_named_generators(n, m));
          auto const em
              = closure(elements_of(block, five_generator_names()), opts.limit);
          c.measure("size", str(em.size()));
          c.status = status_of(BigCount(em.size()) == expected);
        }));
    report.checks.push_back(
        run_check("partition-preserving brute force", [&](Check& c) {
          if (n * m > 6) {
            c.status = Status::skipped;
            c.note   = "only run for nm <= 6";
            return;
          }
          auto const count = count_partition_preserving(n, m);
          c.measure("count", str(count));
          c.status = status_of(BigCount(count) == expected);
        }));
    return report;
  }

  RunReport cmd_verify_generators(std::size_t           n,
                                  std::size_t           m,
                                  CommandOptions const& opts) {
    RunReport  report{"verify-generators " + str(n) + " " + str(m), n, m, {}, {}};
    auto const wreath = build_named_generators(n, m);
    auto const block  = block_alphabet(wreath);
    auto const names  = five_generator_names();
    BigCount const wreath_size(wreath_order(n, m));
    BigCount const block_size = order_formula(n, m);

    report.checks.push_back(
        run_check("five generators generate PT_n wr T_m", [&](Check& c) {
          auto const em = closure(elements_of(wreath, names), opts.limit);
          c.measure("size", str(em.size())).measure("expected", str(wreath_size));
          c.status = status_of(BigCount(em.size()) == wreath_size);
        }));
    report.checks.push_back(
        run_check("five generators generate PT_{n x m}", [&](Check& c) {
          auto const em = closure(elements_of(block, names), opts.limit);
          c.measure("size", str(em.size())).measure("expected", str(block_size));
          c.status = status_of(BigCount(em.size()) == block_size);
        }));
    for (std::size_t drop = 0; drop < names.size(); ++drop) {
      std::vector<std::string> subset;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (i != drop) {
          subset.push_back(names[i]);
        }
      }
      report.checks.push_back(
          run_check("without " + names[drop] + " generates less",
                    [&](Check& c) {
                      auto const w = closure(elements_of(wreath, subset),
                                             opts.limit);
                      auto const b = closure(elements_of(block, subset),
                                             opts.limit);
                      c.measure("wreath_size", str(w.size()))
                          .measure("block_size", str(b.size()));
                      c.status = status_of(BigCount(w.size()) < wreath_size
                                           && BigCount(b.size()) < block_size);
                    }));
    }
    report.checks.push_back(
        run_check("x1, x2 generate the units", [&](Check& c) {
          std::vector<std::string> const units = {symbols::x1, symbols::x2};
          auto const w = closure(elements_of(wreath, units), opts.limit);
          auto const b = closure(elements_of(block, units), opts.limit);
          std::size_t const expected = unit_group_order(n, m);
          c.measure("wreath_size", str(w.size()))
              .measure("block_size", str(b.size()))
              .measure("expected", str(expected));
          c.status = status_of(w.size() == expected && b.size() == expected);
        }));
    return report;
  }

  RunReport cmd_verify_congruence(std::size_t           n,
                                  std::size_t           m,
                                  CommandOptions const& opts) {
    RunReport report{"verify-congruence " + str(n) + " " + str(m), n, m, {}, {}};
    auto const wreath = build_named_generators(n, m);
    std::optional<EnumeratedMonoid<WreathElement>> em;
    report.checks.push_back(run_check("enumerate PT_n wr T_m", [&](Check& c) {
      em.emplace(closure(elements_of(wreath, five_generator_names()),
                         opts.limit));
      c.measure("size", str(em->size()));
      c.status = status_of(em->size() == wreath_order(n, m));
    }));
    if (!em) {
      return report;
    }
    BigCount const expected = order_formula(n, m);
    auto const     kernel   = kernel_congruence(*em);
    auto const     empty1   = embed_slot(m, 0, PartialMap::empty(n));
    auto const     pair_cong = congruence_from_pairs(
        *em,
        std::vector<std::pair<WreathElement, WreathElement>>{
            {empty1, empty1 * wreath.at(symbols::tauB)}});

    report.checks.push_back(run_check("kernel classes", [&](Check& c) {
      c.measure("classes", str(kernel.number_of_classes()))
          .measure("expected", str(expected));
      c.status = status_of(BigCount(kernel.number_of_classes()) == expected);
    }));
    report.checks.push_back(
        run_check("single-pair congruence equals the kernel", [&](Check& c) {
          c.measure("classes", str(pair_cong.number_of_classes()));
          c.status = status_of(congruences_equal(kernel, pair_cong)
                               && is_compatible(*em, pair_cong));
        }));
    report.checks.push_back(
        run_check("one canonical form per class", [&](Check& c) {
          std::vector<std::size_t> canonical(em->size(), 0);
          for (std::size_t i = 0; i < em->size(); ++i) {
            if (em->at(i).is_canonical()) {
              ++canonical[kernel.representative(i)];
            }
          }
          std::size_t bad = 0;
          for (std::size_t i = 0; i < em->size(); ++i) {
            if (kernel.representative(i) == i && canonical[i] != 1) {
              ++bad;
            }
          }
          c.measure("classes_without_exactly_one", str(bad));
          c.status = status_of(bad == 0);
        }));
    report.checks.push_back(
        run_check("empty-component elements form one class", [&](Check& c) {
          std::optional<std::size_t> rep;
          std::size_t                count = 0;
          bool                       ok    = true;
          for (std::size_t i = 0; i < em->size(); ++i) {
            auto const& x   = em->at(i);
            bool        all = true;
            for (auto const& comp : x.components()) {
              all = all && comp.is_empty();
            }
            if (!all) {
              continue;
            }
            ++count;
            if (!rep) {
              rep = pair_cong.representative(i);
            }
            ok = ok && pair_cong.representative(i) == *rep;
          }
          c.measure("elements", str(count));
          c.status = status_of(ok && count == int_pow(m, m));
        }));
    return report;
  }

  RunReport cmd_verify_presentation(std::size_t                n,
                                    std::size_t                m,
                                    PresentationOptions const& popts,
                                    CommandOptions const&) {
    RunReport report{"verify-presentation " + str(n) + " " + str(m)
                         + (popts.define ? " --define" : ""),
                     n,
                     m,
                     {},
                     {}};
    auto const wreath = build_named_generators(n, m);
    auto const block  = block_alphabet(wreath);
    auto const five_w = wreath.restrict(five_generator_names());
    auto const five_b = block.restrict(five_generator_names());

    auto const rp_path = popts.rp_path.value_or(default_rp_path(n));
    auto const rt_path = popts.rt_path.value_or(default_rt_path(m));
    auto const rp      = try_load(rp_path, labels::RP);
    auto const rt      = try_load(rt_path, labels::RT);

    std::vector<std::pair<std::string, RelationList>> sets
        = {{"R1", build_R1(m)}, {"R2", build_R2(m)}, {"R3", build_R3(m)}};
    if (rp) {
      sets.emplace_back("R_P", rp->relations);
    }
    if (rt) {
      sets.emplace_back("R_T", rt->relations);
    }
    auto const sub = xi_substitution(n, m);
    for (auto const& [name, rels] : sets) {
      add_relation_check(report, name + " holds in PT_n wr T_m", wreath, rels, true);
      add_relation_check(report, name + " holds in PT_{n x m}", block, rels, true);
    }
    for (auto const& [name, rels] : sets) {
      auto const bar = substitute(rels, sub);
      add_relation_check(
          report, name + "-bar holds in PT_n wr T_m", five_w, bar, true);
      add_relation_check(
          report, name + "-bar holds in PT_{n x m}", five_b, bar, true);
    }
    RelationList const extra = {extra_relation(n)};
    RelationList const rbar  = {r_bar(n, m)};
    add_relation_check(report, "extra relation fails in PT_n wr T_m", wreath, extra, false);
    add_relation_check(report, "extra relation holds in PT_{n x m}", block, extra, true);
    add_relation_check(report, "r-bar fails in PT_n wr T_m", five_w, rbar, false);
    add_relation_check(report, "r-bar holds in PT_{n x m}", five_b, rbar, true);

    if (!rp || !rt) {
      Check c;
      c.name   = "bundled R_P and R_T";
      c.status = Status::skipped;
      c.note   = "missing " + (rp ? rt_path.string() : rp_path.string());
      report.checks.push_back(std::move(c));
    }
    if (!popts.define) {
      return report;
    }

    auto quotient_check = [&](std::string                     name,
                              std::vector<std::string> const& alphabet,
                              RelationList                    rels,
                              BigCount const&                 expected) {
      return run_check(std::move(name), [&](Check& c) {
        Presentation p{alphabet, std::move(rels)};
        auto         size = free_quotient_size(p, popts.node_limit);
        c.measure("expected", str(expected));
        if (!size) {
          c.status = Status::skipped;
          c.note   = "node limit " + str(popts.node_limit) + " exceeded";
          return;
        }
        c.measure("size", str(*size));
        c.status = status_of(*size == expected);
      });
    };

    bool self_checks_pass = false;
    if (rp && rt) {
      report.checks.push_back(quotient_check(
          "R_P defines PT_n",
          {symbols::pi, symbols::rho, symbols::tau, symbols::sigma},
          rp->relations,
          BigCount(int_pow(n + 1, n))));
      report.checks.push_back(
          quotient_check("R_T defines T_m",
                         {symbols::piB, symbols::rhoB, symbols::tauB},
                         rt->relations,
                         BigCount(int_pow(m, m))));
      auto const& last  = report.checks[report.checks.size() - 1];
      auto const& first = report.checks[report.checks.size() - 2];
      self_checks_pass
          = first.status == Status::pass && last.status == Status::pass;
    }
    if (!self_checks_pass) {
      Check c;
      c.name   = "presentations define the monoids";
      c.status = Status::skipped;
      c.note   = "bundled R_P / R_T unavailable or failed their self-check";
      report.checks.push_back(std::move(c));
      return report;
    }
    RelationList full = rp->relations;
    full.insert(full.end(), rt->relations.begin(), rt->relations.end());
    for (auto const& [name, rels] : sets) {
      if (name == "R1" || name == "R2" || name == "R3") {
        full.insert(full.end(), rels.begin(), rels.end());
      }
    }
    report.checks.push_back(quotient_check(
        "seven-generator presentation defines PT_n wr T_m",
        seven_generator_names(),
        full,
        BigCount(wreath_order(n, m))));
    RelationList full_bar = substitute(full, sub);
    full.push_back(extra_relation(n));
    report.checks.push_back(
        quotient_check("adding the extra relation defines PT_{n x m}",
                       seven_generator_names(),
                       full,
                       order_formula(n, m)));
    report.checks.push_back(quotient_check(
        "five-generator presentation defines PT_n wr T_m",
        five_generator_names(),
        full_bar,
        BigCount(wreath_order(n, m))));
    full_bar.push_back(r_bar(n, m));
    report.checks.push_back(
        quotient_check("adding r-bar defines PT_{n x m}",
                       five_generator_names(),
                       full_bar,
                       order_formula(n, m)));
    return report;
  }

  RunReport cmd_eval(std::string const& expr,
                     std::size_t        n,
                     std::size_t        m,
                     bool               block) {
    RunReport report{"eval \"" + expr + "\" " + str(n) + " " + str(m)
                         + (block ? " --block" : ""),
                     n,
                     m,
                     {},
                     {}};
    auto const word   = Word::parse(expr);
    auto const wreath = build_named_generators(n, m);
    report.value      = block ? eval_word(block_alphabet(wreath), word).to_string()
                              : eval_word(wreath, word).to_string();
    return report;
  }

  RunReport cmd_enumerate(std::size_t             n,
                          std::size_t             m,
                          EnumerateOptions const& eopts,
                          CommandOptions const&   opts) {
    RunReport report{"enumerate " + str(n) + " " + str(m)
                         + (eopts.block ? " --block" : ""),
                     n,
                     m,
                     {},
                     {}};
    auto const names
        = eopts.generators.empty() ? five_generator_names() : eopts.generators;
    auto const wreath = build_named_generators(n, m);

    auto write = [&](auto const& em) {
      if (eopts.export_path) {
        std::ofstream out(*eopts.export_path);
        if (!out) {
          throw Error("cannot write " + eopts.export_path->string());
        }
        export_edges(em, names, out);
      }
      if (eopts.rules_path) {
        Presentation p{names, {}};
        for (auto const& [lhs, rhs] : em.defining_rules()) {
          auto to_word = [&](std::vector<std::size_t> const& w) {
            Word result;
            for (auto g : w) {
              result = result * Word::symbol(names[g]);
            }
            return result;
          };
          p.relations.push_back(Relation{to_word(lhs), to_word(rhs), labels::user});
        }
        std::ofstream out(*eopts.rules_path);
        if (!out) {
          throw Error("cannot write " + eopts.rules_path->string());
        }
        out << format_presentation(p);
      }
    };

    report.checks.push_back(run_check("closure", [&](Check& c) {
      if (eopts.block) {
        auto const em
            = closure(elements_of(block_alphabet(wreath), names), opts.limit);
        c.measure("size", str(em.size()));
        report.value = str(em.size());
        write(em);
      } else {
        auto const em = closure(elements_of(wreath, names), opts.limit);
        c.measure("size", str(em.size()));
        report.value = str(em.size());
        write(em);
      }
    }));
    return report;
  }

}  // namespace uniformpt
