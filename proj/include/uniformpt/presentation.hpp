#ifndef UNIFORMPT_PRESENTATION_HPP_
#define UNIFORMPT_PRESENTATION_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphabet.hpp"
#include "block_map.hpp"
#include "word.hpp"

namespace uniformpt {

  namespace labels {
    inline std::string const RP    = "R_P";
    inline std::string const RT    = "R_T";
    inline std::string const R1    = "R1";
    inline std::string const R2    = "R2";
    inline std::string const R3    = "R3";
    inline std::string const extra = "extra";
    inline std::string const user  = "user";
  }  // namespace labels

  struct Relation {
    Word        lhs;
    Word        rhs;
    std::string label;

    // `<lhs> = <rhs>`
    std::string to_string() const {
      return lhs.to_string() + " = " + rhs.to_string();
    }
  };

  using RelationList = std::vector<Relation>;

  //! Generators and defining relations of a finitely presented monoid.
  struct Presentation {
    std::vector<std::string> alphabet;
    RelationList             relations;

    // Throws Error if a relation uses a letter outside the alphabet or the
    // alphabet has duplicates.
    void validate() const;
  };

  // Commutation-type relations between slots j < k of the tail action;
  // 16 C(m, 2) of them.  Throws Error if m < 2.
  RelationList build_R1(std::size_t m);
  // Relations moving piB past slot generators; 4 + 4(m - 2).
  RelationList build_R2(std::size_t m);
  // Relations moving tauB past slot generators; 8 + 4(m - 2).
  RelationList build_R3(std::size_t m);
  // (rho sigma)^n = (rho sigma)^n tauB.  Throws Error if n < 2.
  Relation extra_relation(std::size_t n);

  Relation     substitute(Relation const& r, std::map<std::string, Word> const& map);
  RelationList substitute(RelationList const&                rels,
                          std::map<std::string, Word> const& map);

  // pi, rho, piB, rhoB to their words in x1, x2.
  std::map<std::string, Word> xi_substitution(std::size_t n, std::size_t m);

  // The extra relation with rho replaced by its word in x1, x2.
  Relation r_bar(std::size_t n, std::size_t m);

  //! Outcome of evaluating one relation.
  struct RelationCheck {
    std::size_t index;
    Relation    relation;
    bool        holds;
    std::string lhs_value;  // filled when the relation fails
    std::string rhs_value;
  };

  struct RelationReport {
    std::vector<RelationCheck> checks;

    bool all_hold() const noexcept {
      for (auto const& c : checks) {
        if (!c.holds) {
          return false;
        }
      }
      return true;
    }

    std::size_t failures() const noexcept {
      std::size_t result = 0;
      for (auto const& c : checks) {
        result += c.holds ? 0 : 1;
      }
      return result;
    }
  };

  // Evaluates both sides of every relation.  Throws Error on an unbound
  // symbol.
  template <typename Element>
  RelationReport check_relations(Alphabet<Element> const& a,
                                 RelationList const&      rels) {
    RelationReport report;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      Element lhs = eval_word(a, rels[i].lhs);
      Element rhs = eval_word(a, rels[i].rhs);
      RelationCheck check{i, rels[i], lhs == rhs, {}, {}};
      if (!check.holds) {
        check.lhs_value = lhs.to_string();
        check.rhs_value = rhs.to_string();
      }
      report.checks.push_back(std::move(check));
    }
    return report;
  }

  //! Line-based presentation text.
  //!
  //!   # any comment
  //!   # alphabet: pi rho tau sigma
  //!   # label: R_P
  //!   pi^2 = 1
  //!
  //! `# label:` sets the label of the relations that follow (default
  //! `default_label`); without `# alphabet:` the alphabet is the set of
  //! letters in order of first appearance.
  Presentation parse_presentation(std::istream&      in,
                                  std::string const& default_label
                                  = labels::user);
  Presentation parse_presentation(std::string_view   text,
                                  std::string const& default_label
                                  = labels::user);
  Presentation load_presentation(std::filesystem::path const& path,
                                 std::string const&           default_label
                                 = labels::user);
  std::string format_presentation(Presentation const& p);

  //! Order of the monoid defined by `p`, by Todd-Coxeter enumeration of
  //! the word graph of the free monoid modulo the relations.
  //!
  //! Returns std::nullopt if more than `node_limit` nodes are ever
  //! defined; the answer is never a partial count.
  std::optional<BigCount> free_quotient_size(Presentation const& p,
                                             std::size_t node_limit
                                             = 2'000'000);

}  // namespace uniformpt

#endif  // UNIFORMPT_PRESENTATION_HPP_
