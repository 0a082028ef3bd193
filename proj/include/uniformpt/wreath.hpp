#ifndef UNIFORMPT_WREATH_HPP_
#define UNIFORMPT_WREATH_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "partial_map.hpp"

namespace uniformpt {

  //! An element (b_1, ..., b_m; t) of the wreath product PT_n wr T_m.
  //!
  //! Each component b_j is a partial map of degree n and the tail t is a
  //! full map of degree m.  The product follows
  //!
  //!   (s_1, ..., s_m; s)(t_1, ..., t_m; t) = (s_1 t_{1s}, ..., s_m t_{ms}; st)
  //!
  //! so component i of the product reads the right factor at slot i.s.
  class WreathElement {
   public:
    WreathElement() = default;

    // Throws Error unless there is at least one component, all components
    // share a degree, and the tail is a full map of degree
    // components.size().
    WreathElement(std::vector<PartialMap> components, PartialMap tail);

    static WreathElement identity(std::size_t n, std::size_t m);

    std::size_t n() const noexcept {
      return _components.front().degree();
    }

    std::size_t m() const noexcept {
      return _components.size();
    }

    PartialMap const& component(std::size_t j) const noexcept {
      return _components[j];
    }

    std::vector<PartialMap> const& components() const noexcept {
      return _components;
    }

    PartialMap const& tail() const noexcept {
      return _tail;
    }

    // Every all-undefined component has tail image 1.
    bool is_canonical() const noexcept;

    // Format `(c1 | c2 | ... | cm ; tail)`.
    std::string        to_string() const;
    static WreathElement parse(std::string_view text);

    bool operator==(WreathElement const&) const = default;

   private:
    std::vector<PartialMap> _components;
    PartialMap              _tail;
  };

  // Throws Error on a dimension mismatch.
  WreathElement multiply(WreathElement const& x, WreathElement const& y);

  inline WreathElement operator*(WreathElement const& x,
                                 WreathElement const& y) {
    return multiply(x, y);
  }

  inline WreathElement identity_like(WreathElement const& x) {
    return WreathElement::identity(x.n(), x.m());
  }

  // Places `a` in slot `slot` (0-based) with identity elsewhere.
  WreathElement embed_slot(std::size_t       m,
                           std::size_t       slot,
                           PartialMap const& a);

  // (1, ..., 1; t).  Throws Error unless t is full.
  WreathElement embed_tail(std::size_t n, PartialMap const& t);

  // Sends the tail image of every all-undefined slot to the first block.
  WreathElement canonical_form(WreathElement const& x);

  void        append_bytes(std::string& out, WreathElement const& x);
  std::size_t hash_value(WreathElement const& x);

  // ((n+1)^n)^m * m^m in machine arithmetic; small n, m only.
  std::size_t wreath_order(std::size_t n, std::size_t m);

}  // namespace uniformpt

template <>
struct std::hash<uniformpt::WreathElement> {
  std::size_t operator()(uniformpt::WreathElement const& x) const {
    return uniformpt::hash_value(x);
  }
};

#endif  // UNIFORMPT_WREATH_HPP_
