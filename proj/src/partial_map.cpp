#include "uniformpt/partial_map.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

#include "uniformpt/errors.hpp"

namespace uniformpt {

  PartialMap::PartialMap(std::vector<point_type> images)
      : _images(std::move(images)) {
    if (_images.empty()) {
      throw Error("a partial map must have positive degree");
    }
    for (auto x : _images) {
      if (x != UNDEFINED && x >= _images.size()) {
        throw Error("image " + std::to_string(x + 1) + " out of range for degree "
                    + std::to_string(_images.size()));
      }
    }
  }

  PartialMap PartialMap::from_one_based(
      std::initializer_list<std::optional<point_type>> images) {
    std::vector<point_type> v;
    v.reserve(images.size());
    for (auto const& x : images) {
      if (x.has_value() && *x == 0) {
        throw Error("1-based image 0 is not a point");
      }
      v.push_back(x.has_value() ? *x - 1 : UNDEFINED);
    }
    return PartialMap(std::move(v));
  }

  PartialMap PartialMap::identity(std::size_t degree) {
    std::vector<point_type> v(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      v[i] = static_cast<point_type>(i);
    }
    return PartialMap(std::move(v));
  }

  PartialMap PartialMap::empty(std::size_t degree) {
    return PartialMap(std::vector<point_type>(degree, UNDEFINED));
  }

  PartialMap PartialMap::cycle(std::size_t                 degree,
                               std::span<point_type const> points) {
    auto result = identity(degree);
    if (points.size() < 2) {
      return result;
    }
    for (std::size_t k = 0; k < points.size(); ++k) {
      point_type from = points[k];
      point_type to   = points[(k + 1) % points.size()];
      if (from == 0 || from > degree || to == 0 || to > degree) {
        throw Error("cycle point out of range for degree "
                    + std::to_string(degree));
      }
      result._images[from - 1] = to - 1;
    }
    if (!result.is_permutation()) {
      throw Error("cycle points must be distinct");
    }
    return result;
  }

  PartialMap PartialMap::standard_cycle(std::size_t degree, std::size_t k) {
    std::vector<point_type> pts(k);
    for (std::size_t i = 0; i < k; ++i) {
      pts[i] = static_cast<point_type>(i + 1);
    }
    return cycle(degree, pts);
  }

  PartialMap PartialMap::transposition(std::size_t degree,
                                       point_type  i,
                                       point_type  j) {
    point_type pts[] = {i, j};
    return cycle(degree, pts);
  }

  bool PartialMap::is_full() const noexcept {
    return std::none_of(_images.cbegin(), _images.cend(), [](point_type x) {
      return x == UNDEFINED;
    });
  }

  bool PartialMap::is_permutation() const noexcept {
    if (!is_full()) {
      return false;
    }
    std::vector<bool> seen(degree(), false);
    for (auto x : _images) {
      if (seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  bool PartialMap::is_empty() const noexcept {
    return std::all_of(_images.cbegin(), _images.cend(), [](point_type x) {
      return x == UNDEFINED;
    });
  }

  std::size_t PartialMap::rank() const {
    std::vector<bool> seen(degree(), false);
    std::size_t       result = 0;
    for (auto x : _images) {
      if (x != UNDEFINED && !seen[x]) {
        seen[x] = true;
        ++result;
      }
    }
    return result;
  }

  std::string PartialMap::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < _images.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      if (_images[i] == UNDEFINED) {
        out += '-';
      } else {
        out += std::to_string(_images[i] + 1);
      }
    }
    out += ']';
    return out;
  }

  namespace {
    void skip_space(std::string_view text, std::size_t& pos) {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    }

    void expect(std::string_view text, std::size_t& pos, char c) {
      skip_space(text, pos);
      if (pos >= text.size() || text[pos] != c) {
        throw ParseError("expected '" + std::string(1, c)
                         + "' at offset " + std::to_string(pos) + " in \""
                         + std::string(text) + "\"");
      }
      ++pos;
    }
  }  // namespace

  PartialMap PartialMap::parse(std::string_view text) {
    std::size_t             pos = 0;
    std::vector<point_type> images;
    expect(text, pos, '[');
    while (true) {
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == '-') {
        images.push_back(UNDEFINED);
        ++pos;
      } else {
        unsigned long value = 0;
        auto [ptr, ec]      = std::from_chars(
            text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || value == 0) {
          throw ParseError("expected a positive point or '-' at offset "
                           + std::to_string(pos) + " in \"" + std::string(text)
                           + "\"");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        images.push_back(static_cast<point_type>(value - 1));
      }
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    expect(text, pos, ']');
    skip_space(text, pos);
    if (pos != text.size()) {
      throw ParseError("trailing characters in \"" + std::string(text) + "\"");
    }
    try {
      return PartialMap(std::move(images));
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  PartialMap compose(PartialMap const& a, PartialMap const& b) {
    if (a.degree() != b.degree()) {
      throw Error("cannot compose partial maps of degrees "
                  + std::to_string(a.degree()) + " and "
                  + std::to_string(b.degree()));
    }
    std::vector<point_type> images(a.degree());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = a[i] == UNDEFINED ? UNDEFINED : b[a[i]];
    }
    return PartialMap(std::move(images));
  }

  void append_bytes(std::string& out, PartialMap const& a) {
    auto const* data = reinterpret_cast<char const*>(a.images().data());
    out.append(data, a.images().size_bytes());
  }

  std::size_t hash_value(PartialMap const& a) {
    std::string bytes;
    append_bytes(bytes, a);
    return std::hash<std::string>{}(bytes);
  }

  PtnGenerators standard_generators_ptn(std::size_t n) {
    if (n < 2) {
      throw Error("the generators of PT_n need n >= 2, found n = "
                  + std::to_string(n));
    }
    std::vector<point_type> tau(n), sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
      tau[i]   = static_cast<point_type>(i);
      sigma[i] = static_cast<point_type>(i);
    }
    tau[0]   = 1;
    sigma[0] = UNDEFINED;
    return PtnGenerators{PartialMap::transposition(n, 1, 2),
                         PartialMap::standard_cycle(n, n),
                         PartialMap(std::move(tau)),
                         PartialMap(std::move(sigma))};
  }

}  // namespace uniformpt
