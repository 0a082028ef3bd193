#include "uniformpt/block_map.hpp"

#include <cassert>
#include <cctype>

#include "uniformpt/errors.hpp"

namespace uniformpt {

  BlockMap::BlockMap(std::size_t n, std::size_t m, PartialMap flat)
      : _n(n), _m(m), _flat(std::move(flat)) {
    if (!preserves_partition(_flat, n, m)) {
      throw Error("the map " + _flat.to_string()
                  + " does not preserve the partition into " + std::to_string(m)
                  + " blocks of size " + std::to_string(n));
    }
  }

  BlockMap BlockMap::identity(std::size_t n, std::size_t m) {
    return BlockMap(n, m, PartialMap::identity(n * m), unchecked_tag{});
  }

  std::string BlockMap::to_string() const {
    return "n=" + std::to_string(_n) + " m=" + std::to_string(_m) + " "
           + _flat.to_string();
  }

  namespace {
    std::size_t parse_header_field(std::string_view text,
                                   std::size_t&     pos,
                                   char             key) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos + 1 >= text.size() || text[pos] != key || text[pos + 1] != '=') {
        throw ParseError("expected '" + std::string(1, key) + "=' in \""
                         + std::string(text) + "\"");
      }
      pos += 2;
      std::size_t value = 0;
      std::size_t start = pos;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        ++pos;
      }
      if (pos == start || value == 0) {
        throw ParseError("expected a positive integer after '"
                         + std::string(1, key) + "=' in \"" + std::string(text)
                         + "\"");
      }
      return value;
    }
  }  // namespace

  BlockMap BlockMap::parse(std::string_view text) {
    std::size_t pos  = 0;
    std::size_t n    = parse_header_field(text, pos, 'n');
    std::size_t m    = parse_header_field(text, pos, 'm');
    auto        flat = PartialMap::parse(text.substr(pos));
    if (flat.degree() != n * m) {
      throw ParseError("block map of shape n=" + std::to_string(n)
                       + " m=" + std::to_string(m) + " needs "
                       + std::to_string(n * m) + " images");
    }
    try {
      return BlockMap(n, m, std::move(flat));
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  BlockMap multiply(BlockMap const& a, BlockMap const& b) {
    if (a.n() != b.n() || a.m() != b.m()) {
      throw Error("cannot multiply block maps of different shapes");
    }
    BlockMap result(
        a.n(), a.m(), compose(a.flat(), b.flat()), BlockMap::unchecked_tag{});
    assert(preserves_partition(result.flat(), result.n(), result.m()));
    return result;
  }

  bool preserves_partition(PartialMap const& p, std::size_t n, std::size_t m) {
    if (p.degree() != n * m) {
      throw Error("a map of degree " + std::to_string(p.degree())
                  + " cannot act on " + std::to_string(n) + " x "
                  + std::to_string(m) + " points");
    }
    for (std::size_t j = 0; j < m; ++j) {
      point_type target = UNDEFINED;
      for (std::size_t i = 0; i < n; ++i) {
        point_type x = p[flat_point(n, i, j)];
        if (x == UNDEFINED) {
          continue;
        }
        point_type block = static_cast<point_type>(x / n);
        if (target == UNDEFINED) {
          target = block;
        } else if (target != block) {
          return false;
        }
      }
    }
    return true;
  }

  std::size_t count_partition_preserving(std::size_t n, std::size_t m) {
    std::size_t const degree = n * m;
    if (degree == 0 || degree > 7) {
      throw Error("brute force over all partial maps needs 1 <= nm <= 7");
    }
    // Odometer over images, UNDEFINED encoded as `degree`.
    std::vector<point_type> digits(degree, 0);
    std::vector<point_type> images(degree);
    std::size_t             result = 0;
    while (true) {
      for (std::size_t i = 0; i < degree; ++i) {
        images[i] = digits[i] == degree ? UNDEFINED : digits[i];
      }
      if (preserves_partition(PartialMap(images), n, m)) {
        ++result;
      }
      std::size_t i = 0;
      while (i < degree && digits[i] == degree) {
        digits[i++] = 0;
      }
      if (i == degree) {
        return result;
      }
      ++digits[i];
    }
  }

  BlockMap phi(WreathElement const& x) {
    std::size_t const       n = x.n(), m = x.m();
    std::vector<point_type> flat(n * m, UNDEFINED);
    for (std::size_t j = 0; j < m; ++j) {
      auto const& c = x.component(j);
      for (std::size_t i = 0; i < n; ++i) {
        if (c[i] != UNDEFINED) {
          flat[flat_point(n, i, j)]
              = static_cast<point_type>(flat_point(n, c[i], x.tail()[j]));
        }
      }
    }
    return BlockMap(n, m, PartialMap(std::move(flat)));
  }

  WreathElement phi_section(BlockMap const& b) {
    std::size_t const       n = b.n(), m = b.m();
    std::vector<PartialMap> components;
    components.reserve(m);
    std::vector<point_type> tail(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<point_type> c(n, UNDEFINED);
      for (std::size_t i = 0; i < n; ++i) {
        point_type x = b.flat()[flat_point(n, i, j)];
        if (x != UNDEFINED) {
          c[i]    = static_cast<point_type>(x % n);
          tail[j] = static_cast<point_type>(x / n);
        }
      }
      components.emplace_back(std::move(c));
    }
    return WreathElement(std::move(components), PartialMap(std::move(tail)));
  }

  bool kernel_equivalent(WreathElement const& x, WreathElement const& y) {
    if (x.n() != y.n() || x.m() != y.m()) {
      throw Error("cannot compare wreath elements of different shapes");
    }
    for (std::size_t j = 0; j < x.m(); ++j) {
      if (x.component(j) != y.component(j)) {
        return false;
      }
      if (!x.component(j).is_empty() && x.tail()[j] != y.tail()[j]) {
        return false;
      }
    }
    return true;
  }

  BigCount order_formula(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0) {
      throw Error("order_formula needs n, m >= 1");
    }
    BigCount ptn  = boost::multiprecision::pow(BigCount(n + 1),
                                              static_cast<unsigned>(n));
    BigCount base = BigCount(m) * ptn - BigCount(m) + 1;
    return boost::multiprecision::pow(base, static_cast<unsigned>(m));
  }

  void append_bytes(std::string& out, BlockMap const& b) {
    append_bytes(out, b.flat());
  }

  std::size_t hash_value(BlockMap const& b) {
    return hash_value(b.flat());
  }

}  // namespace uniformpt
