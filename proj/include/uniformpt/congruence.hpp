#ifndef UNIFORMPT_CONGRUENCE_HPP_
#define UNIFORMPT_CONGRUENCE_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "enumeration.hpp"
#include "errors.hpp"
#include "wreath.hpp"

namespace uniformpt {

  //! A partition of the element indices of an EnumeratedMonoid.
  //!
  //! Union-find with path compression and union by size.  The
  //! representative reported for a class is its least index.
  class Congruence {
   public:
    Congruence(std::size_t size, void const* carrier)
        : _parent(size), _size(size, 1), _min(size), _classes(size),
          _carrier(carrier) {
      std::iota(_parent.begin(), _parent.end(), std::size_t(0));
      std::iota(_min.begin(), _min.end(), std::size_t(0));
    }

    std::size_t size() const noexcept {
      return _parent.size();
    }

    std::size_t number_of_classes() const noexcept {
      return _classes;
    }

    void const* carrier() const noexcept {
      return _carrier;
    }

    // Least index in the class of i.
    std::size_t representative(std::size_t i) const {
      return _min[find(i)];
    }

    bool contains(std::size_t i, std::size_t j) const {
      return find(i) == find(j);
    }

    // Returns false if i and j were already related.
    bool unite(std::size_t i, std::size_t j) {
      std::size_t a = find(i), b = find(j);
      if (a == b) {
        return false;
      }
      if (_size[a] < _size[b]) {
        std::swap(a, b);
      }
      _parent[b] = a;
      _size[a] += _size[b];
      _min[a] = std::min(_min[a], _min[b]);
      --_classes;
      return true;
    }

    std::vector<std::size_t> representatives() const {
      std::vector<std::size_t> result(size());
      for (std::size_t i = 0; i < size(); ++i) {
        result[i] = representative(i);
      }
      return result;
    }

   private:
    std::size_t find(std::size_t i) const {
      std::size_t root = i;
      while (_parent[root] != root) {
        root = _parent[root];
      }
      while (_parent[i] != root) {
        std::size_t next = _parent[i];
        _parent[i]       = root;
        i                = next;
      }
      return root;
    }

    mutable std::vector<std::size_t> _parent;
    std::vector<std::size_t>         _size;
    std::vector<std::size_t>         _min;
    std::size_t                      _classes;
    void const*                      _carrier;
  };

  // The least congruence containing the given index pairs.
  template <typename Element>
  Congruence congruence_from_pairs(
      EnumeratedMonoid<Element> const&                      em,
      std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
    Congruence                                      result(em.size(), &em);
    std::deque<std::pair<std::size_t, std::size_t>> queue(pairs.begin(),
                                                          pairs.end());
    std::size_t const k = em.number_of_generators();
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (x >= em.size() || y >= em.size()) {
        throw Error("congruence pair index out of range");
      }
      if (!result.unite(x, y)) {
        continue;
      }
      for (std::size_t g = 0; g < k; ++g) {
        queue.emplace_back(em.right(x, g), em.right(y, g));
        queue.emplace_back(em.left(x, g), em.left(y, g));
      }
    }
    return result;
  }

  // As above, with the pairs given as elements.  Throws Error if a pair
  // member is not in `em`.
  template <typename Element>
  Congruence congruence_from_pairs(
      EnumeratedMonoid<Element> const&                  em,
      std::vector<std::pair<Element, Element>> const& pairs) {
    std::vector<std::pair<std::size_t, std::size_t>> indices;
    for (auto const& [x, y] : pairs) {
      auto i = em.index_of(x), j = em.index_of(y);
      if (!i || !j) {
        throw Error("congruence pair member is not in the monoid");
      }
      indices.emplace_back(*i, *j);
    }
    return congruence_from_pairs(em, indices);
  }

  // Partition by phi-image, computed through canonical forms.
  inline Congruence
  kernel_congruence(EnumeratedMonoid<WreathElement> const& em) {
    Congruence                                       result(em.size(), &em);
    std::unordered_map<WreathElement, std::size_t> first;
    for (std::size_t i = 0; i < em.size(); ++i) {
      auto [it, inserted] = first.emplace(canonical_form(em.at(i)), i);
      if (!inserted) {
        result.unite(it->second, i);
      }
    }
    return result;
  }

  // Throws Error if the two partitions live on different monoids.
  inline bool congruences_equal(Congruence const& a, Congruence const& b) {
    if (a.carrier() != b.carrier() || a.size() != b.size()) {
      throw Error("cannot compare congruences on different monoids");
    }
    if (a.number_of_classes() != b.number_of_classes()) {
      return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.representative(i) != b.representative(i)) {
        return false;
      }
    }
    return true;
  }

  // Whether every class is closed under left and right multiplication by
  // the generators.
  template <typename Element>
  bool is_compatible(EnumeratedMonoid<Element> const& em,
                     Congruence const&                c) {
    for (std::size_t i = 0; i < em.size(); ++i) {
      std::size_t r = c.representative(i);
      for (std::size_t g = 0; g < em.number_of_generators(); ++g) {
        if (!c.contains(em.right(i, g), em.right(r, g))
            || !c.contains(em.left(i, g), em.left(r, g))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace uniformpt

#endif  // UNIFORMPT_CONGRUENCE_HPP_
