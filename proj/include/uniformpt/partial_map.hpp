#ifndef UNIFORMPT_PARTIAL_MAP_HPP_
#define UNIFORMPT_PARTIAL_MAP_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace uniformpt {

  using point_type = std::uint32_t;

  // Image value of a point outside the domain.
  inline constexpr point_type UNDEFINED = static_cast<point_type>(-1);

  //! A partial transformation of {0, ..., n - 1}.
  //!
  //! Points are 0-based internally; the text form is 1-based with `-` for
  //! an undefined image, e.g. `[2,-,3]`.  Maps act on the right, so
  //! `a * b` applies `a` first and then `b`.
  class PartialMap {
   public:
    PartialMap() = default;

    // Throws Error if an entry is neither UNDEFINED nor in range.
    explicit PartialMap(std::vector<point_type> images);

    // 1-based images with std::nullopt for undefined points.
    static PartialMap from_one_based(
        std::initializer_list<std::optional<point_type>> images);

    static PartialMap identity(std::size_t degree);
    // The nowhere-defined map.
    static PartialMap empty(std::size_t degree);

    // Cycle on the given 1-based points; fewer than two points give the
    // identity.
    static PartialMap cycle(std::size_t degree,
                            std::span<point_type const> points);
    // The cycle (1 2 ... k) of degree n.
    static PartialMap standard_cycle(std::size_t degree, std::size_t k);
    static PartialMap transposition(std::size_t degree,
                                    point_type   i,
                                    point_type   j);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t i) const noexcept {
      return _images[i];
    }

    std::span<point_type const> images() const noexcept {
      return _images;
    }

    bool is_defined(std::size_t i) const noexcept {
      return _images[i] != UNDEFINED;
    }

    bool is_full() const noexcept;
    bool is_permutation() const noexcept;
    bool is_empty() const noexcept;

    // Number of distinct defined images.
    std::size_t rank() const;

    std::string to_string() const;
    static PartialMap parse(std::string_view text);

    bool operator==(PartialMap const&) const = default;
    auto operator<=>(PartialMap const&) const = default;

   private:
    std::vector<point_type> _images;
  };

  // Throws Error on degree mismatch.
  PartialMap compose(PartialMap const& a, PartialMap const& b);

  inline PartialMap operator*(PartialMap const& a, PartialMap const& b) {
    return compose(a, b);
  }

  inline PartialMap identity_like(PartialMap const& a) {
    return PartialMap::identity(a.degree());
  }

  // Appends a byte form of the map; equal maps give equal bytes.
  void append_bytes(std::string& out, PartialMap const& a);

  std::size_t hash_value(PartialMap const& a);

  //! The generators pi, rho, tau, sigma of the partial transformation
  //! monoid of degree n.
  struct PtnGenerators {
    PartialMap pi;     // (1 2)
    PartialMap rho;    // (1 2 ... n)
    PartialMap tau;    // [2,2,3,...,n]
    PartialMap sigma;  // [-,2,3,...,n]
  };

  // Throws Error if n < 2.
  PtnGenerators standard_generators_ptn(std::size_t n);

}  // namespace uniformpt

template <>
struct std::hash<uniformpt::PartialMap> {
  std::size_t operator()(uniformpt::PartialMap const& a) const {
    return uniformpt::hash_value(a);
  }
};

#endif  // UNIFORMPT_PARTIAL_MAP_HPP_
