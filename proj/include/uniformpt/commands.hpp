#ifndef UNIFORMPT_COMMANDS_HPP_
#define UNIFORMPT_COMMANDS_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "enumeration.hpp"
#include "presentation.hpp"
#include "report.hpp"

namespace uniformpt {

  struct CommandOptions {
    std::size_t limit = DEFAULT_ENUMERATION_LIMIT;
  };

  // Directory holding the bundled presentation files; the environment
  // variable UNIFORMPT_DATA_DIR overrides the build-time default.
  std::filesystem::path data_directory();
  std::filesystem::path default_rp_path(std::size_t n);
  std::filesystem::path default_rt_path(std::size_t m);

  // Formula value; with `enumerate`, cross-checks against the closure of
  // the five generators and, for nm <= 6, a brute force over all partial
  // maps.
  RunReport cmd_order(std::size_t           n,
                      std::size_t           m,
                      bool                  enumerate,
                      CommandOptions const& opts = {});

  // The five generators generate both monoids and no four of them do.
  RunReport cmd_verify_generators(std::size_t           n,
                                  std::size_t           m,
                                  CommandOptions const& opts = {});

  // The kernel of phi equals the congruence generated by one pair.
  RunReport cmd_verify_congruence(std::size_t           n,
                                  std::size_t           m,
                                  CommandOptions const& opts = {});

  struct PresentationOptions {
    std::optional<std::filesystem::path> rp_path;  // default_rp_path(n)
    std::optional<std::filesystem::path> rt_path;  // default_rt_path(m)
    bool                                 define     = false;
    std::size_t                          node_limit = 2'000'000;
  };

  RunReport cmd_verify_presentation(std::size_t                n,
                                    std::size_t                m,
                                    PresentationOptions const& popts,
                                    CommandOptions const&      opts = {});

  // Evaluates a word over pi rho tau sigma piB rhoB tauB x1 x2.
  RunReport cmd_eval(std::string const& expr,
                     std::size_t        n,
                     std::size_t        m,
                     bool               block);

  struct EnumerateOptions {
    bool                                 block = false;
    // Generator names; empty means x1 x2 tau tauB sigma.
    std::vector<std::string>             generators;
    std::optional<std::filesystem::path> export_path;
    std::optional<std::filesystem::path> rules_path;
  };

  RunReport cmd_enumerate(std::size_t             n,
                          std::size_t             m,
                          EnumerateOptions const& eopts,
                          CommandOptions const&   opts = {});

}  // namespace uniformpt

#endif  // UNIFORMPT_COMMANDS_HPP_
