#ifndef UNIFORMPT_ENUMERATION_HPP_
#define UNIFORMPT_ENUMERATION_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "block_map.hpp"
#include "errors.hpp"

namespace uniformpt {

  inline constexpr std::size_t DEFAULT_ENUMERATION_LIMIT = 2'000'000;

  //! The submonoid generated by a list of elements, with both Cayley
  //! graphs.
  //!
  //! Elements are numbered breadth first: by length of the first word
  //! found for them, then by the order in which (element, generator) pairs
  //! are visited.  Element 0 is the identity.
  template <typename Element>
  class EnumeratedMonoid {
   public:
    using element_type = Element;

    std::size_t size() const noexcept {
      return _elements.size();
    }

    std::size_t number_of_generators() const noexcept {
      return _generators.size();
    }

    Element const& at(std::size_t i) const {
      return _elements.at(i);
    }

    std::vector<Element> const& elements() const noexcept {
      return _elements;
    }

    std::vector<Element> const& generators() const noexcept {
      return _generators;
    }

    std::optional<std::size_t> index_of(Element const& x) const {
      auto it = _index.find(x);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    // Index of at(i) * generators()[g].
    std::size_t right(std::size_t i, std::size_t g) const {
      return _right[i * _generators.size() + g];
    }

    // Index of generators()[g] * at(i).
    std::size_t left(std::size_t i, std::size_t g) const {
      return _left[i * _generators.size() + g];
    }

    // The first word found for element i, as generator indices.
    std::vector<std::size_t> word(std::size_t i) const {
      std::vector<std::size_t> w;
      while (i != 0) {
        w.push_back(_last[i]);
        i = _prefix[i];
      }
      return {w.rbegin(), w.rend()};
    }

    std::size_t word_length(std::size_t i) const {
      return _length[i];
    }

    // Relations word(i) g = word(right(i, g)) for every edge that did not
    // create a new element, skipping those implied by an earlier relation
    // on a suffix.  Together they define the monoid on its generators.
    std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
    defining_rules() const {
      std::vector<
          std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
                        rules;
      std::size_t const k = _generators.size();
      for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t g = 0; g < k; ++g) {
          if (is_reduced(i, g)) {
            continue;
          }
          if (i != 0 && !is_reduced(_suffix[i], g)) {
            continue;
          }
          auto lhs = word(i);
          lhs.push_back(g);
          rules.emplace_back(std::move(lhs), word(right(i, g)));
        }
      }
      return rules;
    }

    template <typename E>
    friend EnumeratedMonoid<E> closure(std::vector<E> const& generators,
                                       std::size_t           limit);

   private:
    // Whether the edge (i, g) created its target.
    bool is_reduced(std::size_t i, std::size_t g) const {
      std::size_t j = right(i, g);
      return j != 0 && _prefix[j] == i && _last[j] == g;
    }

    std::size_t add(Element x,
                    std::size_t prefix,
                    std::size_t last,
                    std::size_t length,
                    std::size_t suffix) {
      std::size_t i = _elements.size();
      _index.emplace(x, i);
      _elements.push_back(std::move(x));
      _prefix.push_back(prefix);
      _last.push_back(last);
      _length.push_back(length);
      _suffix.push_back(suffix);
      return i;
    }

    std::vector<Element>                    _elements;
    std::unordered_map<Element, std::size_t> _index;
    std::vector<Element>                    _generators;
    std::vector<std::size_t>                _right;
    std::vector<std::size_t>                _left;
    std::vector<std::size_t>                _prefix;
    std::vector<std::size_t>                _last;
    std::vector<std::size_t>                _length;
    std::vector<std::size_t>                _suffix;
  };

  //! Enumerates the submonoid generated by `generators`.
  //!
  //! Throws Error if the list is empty or mixes shapes, and LimitExceeded
  //! as soon as more than `limit` elements have been found.
  template <typename Element>
  EnumeratedMonoid<Element>
  closure(std::vector<Element> const& generators,
          std::size_t                 limit = DEFAULT_ENUMERATION_LIMIT) {
    if (generators.empty()) {
      throw Error("closure needs at least one generator");
    }
    Element const id = identity_like(generators.front());
    for (auto const& g : generators) {
      if (!(identity_like(g) == id)) {
        throw Error("closure generators must share a shape");
      }
    }
    EnumeratedMonoid<Element> em;
    std::size_t const         k = generators.size();
    em._generators              = generators;
    em.add(id, 0, 0, 0, 0);

    for (std::size_t i = 0; i < em._elements.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        Element x = em._elements[i] * generators[g];
        auto    it = em._index.find(x);
        if (it != em._index.end()) {
          em._right.push_back(it->second);
          continue;
        }
        if (em._elements.size() >= limit) {
          throw LimitExceeded(limit);
        }
        // Elements of shorter length are complete, so the suffix edge is
        // already known.
        std::size_t suffix = i == 0 ? 0 : em.right(em._suffix[i], g);
        em._right.push_back(
            em.add(std::move(x), i, g, em._length[i] + 1, suffix));
      }
    }

    em._left.resize(em._elements.size() * k);
    for (std::size_t i = 0; i < em._elements.size(); ++i) {
      for (std::size_t g = 0; g < k; ++g) {
        em._left[i * k + g] = em._index.at(generators[g] * em._elements[i]);
      }
    }
    return em;
  }

  // Whether the closure of `generators` has exactly `expected_order`
  // elements.  LimitExceeded propagates.
  template <typename Element>
  bool is_generating(std::vector<Element> const& generators,
                     BigCount const&             expected_order,
                     std::size_t limit = DEFAULT_ENUMERATION_LIMIT) {
    return BigCount(closure(generators, limit).size()) == expected_order;
  }

  // Writes `<i> <symbol> <j>` for every right Cayley edge, 0-based indices.
  template <typename Element>
  void export_edges(EnumeratedMonoid<Element> const& em,
                    std::vector<std::string> const&  names,
                    std::ostream&                    out) {
    if (names.size() != em.number_of_generators()) {
      throw Error("export_edges needs one name per generator");
    }
    for (std::size_t i = 0; i < em.size(); ++i) {
      for (std::size_t g = 0; g < names.size(); ++g) {
        out << i << ' ' << names[g] << ' ' << em.right(i, g) << '\n';
      }
    }
  }

}  // namespace uniformpt

#endif  // UNIFORMPT_ENUMERATION_HPP_
