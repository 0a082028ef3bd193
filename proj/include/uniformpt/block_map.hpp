#ifndef UNIFORMPT_BLOCK_MAP_HPP_
#define UNIFORMPT_BLOCK_MAP_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "partial_map.hpp"
#include "wreath.hpp"

namespace uniformpt {

  using BigCount = boost::multiprecision::cpp_int;

  //! A partial transformation of the n*m points of n x m that preserves the
  //! partition into the m blocks {(i, j) : i in 1..n}.
  //!
  //! Points are stored flat in column order: the 0-based pair (i, j) is
  //! the point i + j * n.
  class BlockMap {
   public:
    BlockMap() = default;

    // Throws Error unless flat.degree() == n * m and flat preserves the
    // partition.
    BlockMap(std::size_t n, std::size_t m, PartialMap flat);

    static BlockMap identity(std::size_t n, std::size_t m);

    std::size_t n() const noexcept {
      return _n;
    }

    std::size_t m() const noexcept {
      return _m;
    }

    PartialMap const& flat() const noexcept {
      return _flat;
    }

    // Format `n=<n> m=<m> [i1,...,inm]`.
    std::string     to_string() const;
    static BlockMap parse(std::string_view text);

    bool operator==(BlockMap const&) const = default;

   private:
    friend BlockMap multiply(BlockMap const&, BlockMap const&);
    struct unchecked_tag {};
    BlockMap(std::size_t n, std::size_t m, PartialMap flat, unchecked_tag)
        : _n(n), _m(m), _flat(std::move(flat)) {}

    std::size_t _n = 0;
    std::size_t _m = 0;
    PartialMap  _flat;
  };

  inline std::size_t flat_point(std::size_t n, std::size_t i, std::size_t j) {
    return i + j * n;
  }

  // Throws Error on a shape mismatch.
  BlockMap multiply(BlockMap const& a, BlockMap const& b);

  inline BlockMap operator*(BlockMap const& a, BlockMap const& b) {
    return multiply(a, b);
  }

  inline BlockMap identity_like(BlockMap const& a) {
    return BlockMap::identity(a.n(), a.m());
  }

  // Throws Error if p.degree() != n * m.
  bool preserves_partition(PartialMap const& p, std::size_t n, std::size_t m);

  // Number of partial maps of degree n * m that preserve the partition,
  // by testing all (nm + 1)^(nm) of them.  Throws Error if n * m > 7.
  std::size_t count_partition_preserving(std::size_t n, std::size_t m);

  // (i, j) is defined iff i is in the domain of component j, and then maps
  // to (i x_j, j x-bar).
  BlockMap phi(WreathElement const& x);

  // The canonical-form preimage of b under phi.
  WreathElement phi_section(BlockMap const& b);

  // Same phi-image.  Throws Error on a dimension mismatch.
  bool kernel_equivalent(WreathElement const& x, WreathElement const& y);

  // (m (n+1)^n - m + 1)^m
  BigCount order_formula(std::size_t n, std::size_t m);

  void        append_bytes(std::string& out, BlockMap const& b);
  std::size_t hash_value(BlockMap const& b);

}  // namespace uniformpt

template <>
struct std::hash<uniformpt::BlockMap> {
  std::size_t operator()(uniformpt::BlockMap const& b) const {
    return uniformpt::hash_value(b);
  }
};

#endif  // UNIFORMPT_BLOCK_MAP_HPP_
