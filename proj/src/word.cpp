#include "uniformpt/word.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "uniformpt/errors.hpp"

namespace uniformpt {

  namespace {
    constexpr std::uint64_t SATURATED = std::numeric_limits<std::uint64_t>::max();

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
      if (a != 0 && b > SATURATED / a) {
        return SATURATED;
      }
      return a * b;
    }

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
      return a > SATURATED - b ? SATURATED : a + b;
    }

    bool is_symbol_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_symbol_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : _text(text) {}

      Word parse() {
        Word w = parse_sequence();
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what + " at offset " + std::to_string(_pos)
                         + " in word \"" + std::string(_text) + "\"");
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      Word parse_sequence() {
        Word result;
        while (true) {
          skip_space();
          if (_pos == _text.size() || _text[_pos] == ')') {
            return result;
          }
          result = result * parse_term();
        }
      }

      Word parse_term() {
        Word atom;
        char c = _text[_pos];
        if (c == '(') {
          ++_pos;
          atom = parse_sequence();
          skip_space();
          if (_pos == _text.size() || _text[_pos] != ')') {
            fail("missing ')'");
          }
          ++_pos;
        } else if (c == '1'
                   && (_pos + 1 == _text.size()
                       || !is_symbol_char(_text[_pos + 1]))) {
          ++_pos;
        } else if (is_symbol_start(c)) {
          std::size_t start = _pos;
          while (_pos < _text.size() && is_symbol_char(_text[_pos])) {
            ++_pos;
          }
          atom = Word::symbol(std::string(_text.substr(start, _pos - start)));
        } else {
          fail("unexpected '" + std::string(1, c) + "'");
        }
        skip_space();
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          skip_space();
          std::uint64_t k = 0;
          auto [ptr, ec]  = std::from_chars(
              _text.data() + _pos, _text.data() + _text.size(), k);
          if (ec != std::errc()) {
            fail("expected an exponent");
          }
          _pos = static_cast<std::size_t>(ptr - _text.data());
          return Word::power(atom, k);
        }
        return atom;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    void expand_into(Word const&               w,
                     std::vector<std::string>& out) {
      for (auto const& t : w.terms()) {
        for (std::uint64_t k = 0; k < t.exponent; ++k) {
          if (t.group) {
            expand_into(*t.group, out);
          } else {
            out.push_back(t.symbol);
          }
        }
      }
    }
  }  // namespace

  Word Word::symbol(std::string name, std::uint64_t exponent) {
    if (name.empty() || !is_symbol_start(name.front())) {
      throw Error("invalid generator symbol \"" + name + "\"");
    }
    for (char c : name) {
      if (!is_symbol_char(c)) {
        throw Error("invalid generator symbol \"" + name + "\"");
      }
    }
    Word w;
    if (exponent != 0) {
      w._terms.push_back(Term{std::move(name), nullptr, exponent});
    }
    return w;
  }

  Word Word::power(Word const& w, std::uint64_t exponent) {
    if (exponent == 0 || w.empty()) {
      return Word();
    }
    if (exponent == 1) {
      return w;
    }
    Word result;
    if (w._terms.size() == 1) {
      Term t = w._terms.front();
      t.exponent = sat_mul(t.exponent, exponent);
      result._terms.push_back(std::move(t));
    } else {
      result._terms.push_back(
          Term{std::string(), std::make_shared<Word const>(w), exponent});
    }
    return result;
  }

  Word Word::parse(std::string_view text) {
    return Parser(text).parse();
  }

  std::uint64_t Word::expanded_length() const {
    std::uint64_t result = 0;
    for (auto const& t : _terms) {
      std::uint64_t base = t.group ? t.group->expanded_length() : 1;
      result = sat_add(result, sat_mul(base, t.exponent));
    }
    return result;
  }

  std::vector<std::string> Word::expand(std::uint64_t max_length) const {
    std::uint64_t length = expanded_length();
    if (length > max_length) {
      throw Error("word expands to more than " + std::to_string(max_length)
                  + " letters");
    }
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(length));
    expand_into(*this, out);
    return out;
  }

  std::set<std::string> Word::symbols() const {
    std::set<std::string> result;
    for (auto const& t : _terms) {
      if (t.group) {
        result.merge(t.group->symbols());
      } else {
        result.insert(t.symbol);
      }
    }
    return result;
  }

  Word Word::substitute(std::map<std::string, Word> const& map) const {
    Word result;
    for (auto const& t : _terms) {
      if (t.group) {
        result = result * power(t.group->substitute(map), t.exponent);
      } else if (auto it = map.find(t.symbol); it != map.end()) {
        result = result * power(it->second, t.exponent);
      } else {
        result = result * symbol(t.symbol, t.exponent);
      }
    }
    return result;
  }

  std::string Word::to_string() const {
    if (_terms.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& t : _terms) {
      if (!out.empty()) {
        out += ' ';
      }
      if (t.group) {
        out += "( " + t.group->to_string() + " )";
      } else {
        out += t.symbol;
      }
      if (t.exponent != 1) {
        out += '^' + std::to_string(t.exponent);
      }
    }
    return out;
  }

  Word operator*(Word const& u, Word const& v) {
    Word result = u;
    for (auto const& t : v._terms) {
      auto& terms = result._terms;
      if (!terms.empty() && !t.group && !terms.back().group
          && terms.back().symbol == t.symbol) {
        terms.back().exponent = sat_add(terms.back().exponent, t.exponent);
      } else {
        terms.push_back(t);
      }
    }
    return result;
  }

  Word concat(std::initializer_list<Word> words) {
    Word result;
    for (auto const& w : words) {
      result = result * w;
    }
    return result;
  }

}  // namespace uniformpt
