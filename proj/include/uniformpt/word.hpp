#ifndef UNIFORMPT_WORD_HPP_
#define UNIFORMPT_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace uniformpt {

  //! A word over named generators with symbolic exponents.
  //!
  //! A word is a sequence of terms, each a symbol or a parenthesised
  //! subword raised to a positive exponent, so that words such as
  //! `( x1 x2^2 )^1000 x1` stay small.  The empty word is the identity and
  //! prints as `1`.
  class Word {
   public:
    struct Term {
      std::string                 symbol;  // empty for a group
      std::shared_ptr<Word const> group;
      std::uint64_t               exponent = 1;
    };

    Word() = default;

    static Word symbol(std::string name, std::uint64_t exponent = 1);
    static Word power(Word const& w, std::uint64_t exponent);

    // Parses `( x1 x2^3 )^4 x1`; `1` denotes the empty word.
    static Word parse(std::string_view text);

    bool empty() const noexcept {
      return _terms.empty();
    }

    std::vector<Term> const& terms() const noexcept {
      return _terms;
    }

    // Number of letters after expanding every exponent, saturating at
    // UINT64_MAX.
    std::uint64_t expanded_length() const;

    // Throws Error if expanded_length() > max_length.
    std::vector<std::string> expand(std::uint64_t max_length
                                    = 1'000'000) const;

    std::set<std::string> symbols() const;

    // Replaces each symbol found in `map` by its word.
    Word substitute(std::map<std::string, Word> const& map) const;

    std::string to_string() const;

    // Equal as written (not as monoid elements).
    bool operator==(Word const& that) const {
      return to_string() == that.to_string();
    }

    friend Word operator*(Word const& u, Word const& v);

   private:
    std::vector<Term> _terms;
  };

  Word operator*(Word const& u, Word const& v);

  // Concatenation of the given words.
  Word concat(std::initializer_list<Word> words);

}  // namespace uniformpt

#endif  // UNIFORMPT_WORD_HPP_
