#include "uniformpt/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "uniformpt/errors.hpp"
#include "uniformpt/generators.hpp"

namespace uniformpt {

  namespace {
    void check_m(std::size_t m) {
      if (m < 2) {
        throw Error("the relation sets need m >= 2, found m = "
                    + std::to_string(m));
      }
    }

    Word rhoB(std::uint64_t k) {
      return Word::symbol(symbols::rhoB, k);
    }

    std::vector<Word> slot_generators() {
      return {Word::symbol(symbols::pi),
              Word::symbol(symbols::rho),
              Word::symbol(symbols::tau),
              Word::symbol(symbols::sigma)};
    }

    std::string trim(std::string_view s) {
      auto first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto last = s.find_last_not_of(" \t\r\n");
      return std::string(s.substr(first, last - first + 1));
    }

    // Letters of w in order of first appearance, appended to `seen`.
    void collect_letters(Word const& w, std::vector<std::string>& seen) {
      for (auto const& t : w.terms()) {
        if (t.group) {
          collect_letters(*t.group, seen);
        } else if (std::find(seen.begin(), seen.end(), t.symbol)
                   == seen.end()) {
          seen.push_back(t.symbol);
        }
      }
    }
  }  // namespace

  void Presentation::validate() const {
    std::set<std::string> letters(alphabet.begin(), alphabet.end());
    if (letters.size() != alphabet.size()) {
      throw Error("presentation alphabet has duplicate letters");
    }
    for (auto const& r : relations) {
      for (auto const* w : {&r.lhs, &r.rhs}) {
        for (auto const& s : w->symbols()) {
          if (letters.count(s) == 0) {
            throw Error("relation \"" + r.to_string()
                        + "\" uses the letter \"" + s
                        + "\" outside the alphabet");
          }
        }
      }
    }
  }

  RelationList build_R1(std::size_t m) {
    check_m(m);
    RelationList result;
    auto const   us = slot_generators();
    for (std::size_t j = 1; j <= m; ++j) {
      for (std::size_t k = j + 1; k <= m; ++k) {
        for (auto const& u : us) {
          for (auto const& v : us) {
            result.push_back(Relation{
                concat({rhoB(m - j + 1), u, rhoB(m + j - k), v, rhoB(k - 1)}),
                concat({rhoB(m - k + 1), v, rhoB(m + k - j), u, rhoB(j - 1)}),
                labels::R1});
          }
        }
      }
    }
    return result;
  }

  RelationList build_R2(std::size_t m) {
    check_m(m);
    RelationList result;
    auto const   us  = slot_generators();
    Word const   piB = Word::symbol(symbols::piB);
    for (auto const& u : us) {
      result.push_back(Relation{
          concat({piB, rhoB(m - 1), u, rhoB(1)}), u * piB, labels::R2});
    }
    for (std::size_t j = 3; j <= m; ++j) {
      for (auto const& u : us) {
        Word const conj = concat({rhoB(m - j + 1), u, rhoB(j - 1)});
        result.push_back(Relation{piB * conj, conj * piB, labels::R2});
      }
    }
    return result;
  }

  RelationList build_R3(std::size_t m) {
    check_m(m);
    RelationList result;
    auto const   us   = slot_generators();
    Word const   tauB = Word::symbol(symbols::tauB);
    for (auto const& u : us) {
      result.push_back(Relation{tauB * u, tauB, labels::R3});
    }
    for (auto const& u : us) {
      result.push_back(
          Relation{concat({tauB, rhoB(m - 1), u, rhoB(1)}),
                   concat({u, rhoB(m - 1), u, rhoB(1), tauB}),
                   labels::R3});
    }
    for (std::size_t j = 3; j <= m; ++j) {
      for (auto const& u : us) {
        Word const conj = concat({rhoB(m - j + 1), u, rhoB(j - 1)});
        result.push_back(Relation{tauB * conj, conj * tauB, labels::R3});
      }
    }
    return result;
  }

  Relation extra_relation(std::size_t n) {
    if (n < 2) {
      throw Error("the extra relation needs n >= 2, found n = "
                  + std::to_string(n));
    }
    Word const lhs = Word::power(
        Word::symbol(symbols::rho) * Word::symbol(symbols::sigma), n);
    return Relation{lhs, lhs * Word::symbol(symbols::tauB), labels::extra};
  }

  Relation substitute(Relation const& r,
                      std::map<std::string, Word> const& map) {
    return Relation{r.lhs.substitute(map), r.rhs.substitute(map), r.label};
  }

  RelationList substitute(RelationList const&                rels,
                          std::map<std::string, Word> const& map) {
    RelationList result;
    result.reserve(rels.size());
    for (auto const& r : rels) {
      result.push_back(substitute(r, map));
    }
    return result;
  }

  std::map<std::string, Word> xi_substitution(std::size_t n, std::size_t m) {
    auto w = xi_words(n, m);
    return {{symbols::pi, w.pi},
            {symbols::rho, w.rho},
            {symbols::piB, w.piB},
            {symbols::rhoB, w.rhoB}};
  }

  Relation r_bar(std::size_t n, std::size_t m) {
    return substitute(extra_relation(n),
                      {{symbols::rho, xi_words(n, m).rho}});
  }

  Presentation parse_presentation(std::istream&      in,
                                  std::string const& default_label) {
    Presentation             p;
    std::string              label = default_label;
    std::vector<std::string> seen;
    bool                     explicit_alphabet = false;
    std::string              line;
    std::size_t              line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      std::string const text = trim(line);
      if (text.empty()) {
        continue;
      }
      if (text.front() == '#') {
        std::string const body = trim(std::string_view(text).substr(1));
        if (body.rfind("label:", 0) == 0) {
          label = trim(std::string_view(body).substr(6));
        } else if (body.rfind("alphabet:", 0) == 0) {
          std::istringstream letters(body.substr(9));
          std::string        letter;
          while (letters >> letter) {
            p.alphabet.push_back(letter);
          }
          explicit_alphabet = true;
        }
        continue;
      }
      auto eq = text.find('=');
      if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos) {
        throw ParseError("line " + std::to_string(line_number)
                         + ": expected exactly one '=' in \"" + text + "\"");
      }
      Relation r;
      try {
        r = Relation{Word::parse(std::string_view(text).substr(0, eq)),
                     Word::parse(std::string_view(text).substr(eq + 1)),
                     label};
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(line_number) + ": "
                         + e.what());
      }
      collect_letters(r.lhs, seen);
      collect_letters(r.rhs, seen);
      p.relations.push_back(std::move(r));
    }
    if (!explicit_alphabet) {
      p.alphabet = std::move(seen);
    }
    p.validate();
    return p;
  }

  Presentation parse_presentation(std::string_view   text,
                                  std::string const& default_label) {
    std::istringstream in{std::string(text)};
    return parse_presentation(in, default_label);
  }

  Presentation load_presentation(std::filesystem::path const& path,
                                 std::string const&           default_label) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open presentation file " + path.string());
    }
    return parse_presentation(in, default_label);
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "# alphabet:";
    for (auto const& a : p.alphabet) {
      out += ' ' + a;
    }
    out += '\n';
    std::string label;
    for (auto const& r : p.relations) {
      if (r.label != label) {
        label = r.label;
        out += "# label: " + label + '\n';
      }
      out += r.to_string() + '\n';
    }
    return out;
  }

}  // namespace uniformpt
