#include "uniformpt/wreath.hpp"

#include <cctype>

#include "uniformpt/errors.hpp"

namespace uniformpt {

  WreathElement::WreathElement(std::vector<PartialMap> components,
                               PartialMap              tail)
      : _components(std::move(components)), _tail(std::move(tail)) {
    if (_components.empty()) {
      throw Error("a wreath element needs at least one component");
    }
    std::size_t n = _components.front().degree();
    for (auto const& c : _components) {
      if (c.degree() != n || n == 0) {
        throw Error("wreath components must share a positive degree");
      }
    }
    if (_tail.degree() != _components.size()) {
      throw Error("wreath tail has degree " + std::to_string(_tail.degree())
                  + " but there are " + std::to_string(_components.size())
                  + " components");
    }
    if (!_tail.is_full()) {
      throw Error("wreath tail " + _tail.to_string() + " is not a full map");
    }
  }

  WreathElement WreathElement::identity(std::size_t n, std::size_t m) {
    return WreathElement(std::vector<PartialMap>(m, PartialMap::identity(n)),
                         PartialMap::identity(m));
  }

  bool WreathElement::is_canonical() const noexcept {
    for (std::size_t j = 0; j < m(); ++j) {
      if (_components[j].is_empty() && _tail[j] != 0) {
        return false;
      }
    }
    return true;
  }

  std::string WreathElement::to_string() const {
    std::string out = "(";
    for (std::size_t j = 0; j < m(); ++j) {
      if (j != 0) {
        out += " | ";
      }
      out += _components[j].to_string();
    }
    out += " ; ";
    out += _tail.to_string();
    out += ')';
    return out;
  }

  WreathElement WreathElement::parse(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last  = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '('
        || text[last] != ')') {
      throw ParseError("a wreath element must be enclosed in parentheses: \""
                       + std::string(text) + "\"");
    }
    auto body = text.substr(first + 1, last - first - 1);
    auto semi = body.find(';');
    if (semi == std::string_view::npos
        || body.find(';', semi + 1) != std::string_view::npos) {
      throw ParseError("a wreath element needs exactly one ';': \""
                       + std::string(text) + "\"");
    }
    std::vector<PartialMap> components;
    auto                    head = body.substr(0, semi);
    std::size_t             pos  = 0;
    while (true) {
      auto bar = head.find('|', pos);
      components.push_back(PartialMap::parse(head.substr(
          pos, bar == std::string_view::npos ? std::string_view::npos
                                             : bar - pos)));
      if (bar == std::string_view::npos) {
        break;
      }
      pos = bar + 1;
    }
    auto tail = PartialMap::parse(body.substr(semi + 1));
    try {
      return WreathElement(std::move(components), std::move(tail));
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  WreathElement multiply(WreathElement const& x, WreathElement const& y) {
    if (x.n() != y.n() || x.m() != y.m()) {
      throw Error("cannot multiply wreath elements of shapes ("
                  + std::to_string(x.n()) + "," + std::to_string(x.m())
                  + ") and (" + std::to_string(y.n()) + ","
                  + std::to_string(y.m()) + ")");
    }
    std::vector<PartialMap> components;
    components.reserve(x.m());
    for (std::size_t i = 0; i < x.m(); ++i) {
      components.push_back(compose(x.component(i), y.component(x.tail()[i])));
    }
    return WreathElement(std::move(components), compose(x.tail(), y.tail()));
  }

  WreathElement embed_slot(std::size_t       m,
                           std::size_t       slot,
                           PartialMap const& a) {
    if (slot >= m) {
      throw Error("slot " + std::to_string(slot + 1) + " out of range 1.."
                  + std::to_string(m));
    }
    std::vector<PartialMap> components(m, PartialMap::identity(a.degree()));
    components[slot] = a;
    return WreathElement(std::move(components), PartialMap::identity(m));
  }

  WreathElement embed_tail(std::size_t n, PartialMap const& t) {
    if (!t.is_full()) {
      throw Error("the tail " + t.to_string() + " is not a full map");
    }
    return WreathElement(
        std::vector<PartialMap>(t.degree(), PartialMap::identity(n)), t);
  }

  WreathElement canonical_form(WreathElement const& x) {
    std::vector<point_type> tail(x.tail().images().begin(),
                                 x.tail().images().end());
    for (std::size_t j = 0; j < x.m(); ++j) {
      if (x.component(j).is_empty()) {
        tail[j] = 0;
      }
    }
    return WreathElement(x.components(), PartialMap(std::move(tail)));
  }

  void append_bytes(std::string& out, WreathElement const& x) {
    for (auto const& c : x.components()) {
      append_bytes(out, c);
    }
    append_bytes(out, x.tail());
  }

  std::size_t hash_value(WreathElement const& x) {
    std::string bytes;
    append_bytes(bytes, x);
    return std::hash<std::string>{}(bytes);
  }

  std::size_t wreath_order(std::size_t n, std::size_t m) {
    std::size_t ptn = 1;
    for (std::size_t i = 0; i < n; ++i) {
      ptn *= n + 1;
    }
    std::size_t result = 1;
    for (std::size_t j = 0; j < m; ++j) {
      result *= ptn * m;
    }
    return result;
  }

}  // namespace uniformpt
