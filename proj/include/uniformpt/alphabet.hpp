#ifndef UNIFORMPT_ALPHABET_HPP_
#define UNIFORMPT_ALPHABET_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace uniformpt {

  //! Named generators bound to elements of one concrete monoid.
  //!
  //! `Element` must provide `operator*`, `operator==` and a free function
  //! `identity_like(Element const&)`.
  template <typename Element>
  class Alphabet {
   public:
    using element_type = Element;

    explicit Alphabet(Element identity) : _identity(std::move(identity)) {}

    // Throws Error on a duplicate name or an element of the wrong shape.
    void bind(std::string name, Element element) {
      if (find(name) != nullptr) {
        throw Error("symbol \"" + name + "\" is already bound");
      }
      if (!(identity_like(element) == _identity)) {
        throw Error("symbol \"" + name
                    + "\" is bound to an element of the wrong shape");
      }
      _bindings.emplace_back(std::move(name), std::move(element));
    }

    Element const* find(std::string const& name) const noexcept {
      for (auto const& [key, value] : _bindings) {
        if (key == name) {
          return &value;
        }
      }
      return nullptr;
    }

    // Throws Error naming the symbol if it is unbound.
    Element const& at(std::string const& name) const {
      auto const* e = find(name);
      if (e == nullptr) {
        throw Error("unbound symbol \"" + name + "\"");
      }
      return *e;
    }

    bool contains(std::string const& name) const noexcept {
      return find(name) != nullptr;
    }

    Element const& identity() const noexcept {
      return _identity;
    }

    std::vector<std::pair<std::string, Element>> const&
    bindings() const noexcept {
      return _bindings;
    }

    std::vector<std::string> names() const {
      std::vector<std::string> result;
      for (auto const& b : _bindings) {
        result.push_back(b.first);
      }
      return result;
    }

    // A new alphabet holding only the given symbols, in the given order.
    Alphabet restrict(std::vector<std::string> const& names) const {
      Alphabet result(_identity);
      for (auto const& name : names) {
        result.bind(name, at(name));
      }
      return result;
    }

   private:
    Element                                      _identity;
    std::vector<std::pair<std::string, Element>> _bindings;
  };

  // x^k by repeated squaring.
  template <typename Element>
  Element power(Element const& x, std::uint64_t k) {
    Element result = identity_like(x);
    Element base   = x;
    while (k != 0) {
      if ((k & 1) != 0) {
        result = result * base;
      }
      k >>= 1;
      if (k != 0) {
        base = base * base;
      }
    }
    return result;
  }

  // Left-to-right product of the bindings of w's letters.
  template <typename Element>
  Element eval_word(Alphabet<Element> const& a, Word const& w) {
    Element result = a.identity();
    for (auto const& t : w.terms()) {
      Element const base
          = t.group ? eval_word(a, *t.group) : a.at(t.symbol);
      result = result * power(base, t.exponent);
    }
    return result;
  }

  // Applies a homomorphism to every binding.
  template <typename Element, typename Map>
  auto map_alphabet(Alphabet<Element> const& a, Map&& f) {
    using Target = std::decay_t<decltype(f(a.identity()))>;
    Alphabet<Target> result(f(a.identity()));
    for (auto const& [name, e] : a.bindings()) {
      result.bind(name, f(e));
    }
    return result;
  }

}  // namespace uniformpt

#endif  // UNIFORMPT_ALPHABET_HPP_
