// Todd-Coxeter enumeration for finitely presented monoids.
//
// Nodes of the word graph stand for words; node 0 is the empty word and
// the edge labelled g from node c leads to the node of c g.  Every
// relation u = v is traced from every live node, defining missing edges on
// the way, and the two endpoints are identified.  Identifications are
// propagated through a coincidence queue over a union-find of nodes.  Once
// every live node has every edge and satisfies every relation, the live
// nodes are the elements of the monoid.

#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>

#include "uniformpt/errors.hpp"
#include "uniformpt/presentation.hpp"

namespace uniformpt {

  namespace {
    using node_type                    = std::uint32_t;
    constexpr node_type NO_NODE        = std::numeric_limits<node_type>::max();
    using letter_word                  = std::vector<std::size_t>;

    struct NodeLimit {};

    class WordGraph {
     public:
      WordGraph(std::size_t out_degree, std::size_t limit)
          : _k(out_degree), _limit(limit) {}

      node_type new_node() {
        if (_parent.size() >= _limit) {
          throw NodeLimit{};
        }
        node_type c = static_cast<node_type>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _k, NO_NODE);
        return c;
      }

      std::size_t number_of_nodes_defined() const noexcept {
        return _parent.size();
      }

      node_type find(node_type c) {
        node_type root = c;
        while (_parent[root] != root) {
          root = _parent[root];
        }
        while (_parent[c] != root) {
          node_type next = _parent[c];
          _parent[c]     = root;
          c              = next;
        }
        return root;
      }

      bool is_live(node_type c) {
        return find(c) == c;
      }

      node_type target(node_type c, std::size_t g) {
        node_type t = _table[c * _k + g];
        return t == NO_NODE ? NO_NODE : find(t);
      }

      node_type define(node_type c, std::size_t g) {
        node_type t        = new_node();
        _table[c * _k + g] = t;
        return t;
      }

      // Follows w from c, creating nodes for missing edges.
      node_type trace_defining(node_type c, letter_word const& w) {
        c = find(c);
        for (auto g : w) {
          node_type t = target(c, g);
          c           = t == NO_NODE ? define(c, g) : t;
        }
        return c;
      }

      // Follows w from c; NO_NODE if an edge is missing.
      node_type trace(node_type c, letter_word const& w) {
        c = find(c);
        for (auto g : w) {
          c = target(c, g);
          if (c == NO_NODE) {
            return NO_NODE;
          }
        }
        return c;
      }

      void coincide(node_type a, node_type b) {
        std::deque<std::pair<node_type, node_type>> queue{{a, b}};
        while (!queue.empty()) {
          auto [x, y] = queue.front();
          queue.pop_front();
          x = find(x);
          y = find(y);
          if (x == y) {
            continue;
          }
          if (y < x) {
            std::swap(x, y);
          }
          _parent[y] = x;
          for (std::size_t g = 0; g < _k; ++g) {
            node_type ty = _table[y * _k + g];
            if (ty == NO_NODE) {
              continue;
            }
            node_type& tx = _table[x * _k + g];
            if (tx == NO_NODE) {
              tx = ty;
            } else {
              queue.emplace_back(tx, ty);
            }
          }
        }
      }

      std::size_t out_degree() const noexcept {
        return _k;
      }

     private:
      std::size_t            _k;
      std::size_t            _limit;
      std::vector<node_type> _parent;
      std::vector<node_type> _table;
    };

    bool is_complete(WordGraph&                                          graph,
                     std::vector<std::pair<letter_word, letter_word>> const& rels) {
      for (node_type c = 0; c < graph.number_of_nodes_defined(); ++c) {
        if (!graph.is_live(c)) {
          continue;
        }
        for (std::size_t g = 0; g < graph.out_degree(); ++g) {
          if (graph.target(c, g) == NO_NODE) {
            return false;
          }
        }
        for (auto const& [u, v] : rels) {
          if (graph.trace(c, u) != graph.trace(c, v)) {
            return false;
          }
        }
      }
      return true;
    }

    std::size_t count_reachable(WordGraph& graph) {
      std::vector<node_type>                  stack{graph.find(0)};
      std::unordered_map<node_type, bool>     seen{{graph.find(0), true}};
      while (!stack.empty()) {
        node_type c = stack.back();
        stack.pop_back();
        for (std::size_t g = 0; g < graph.out_degree(); ++g) {
          node_type t = graph.target(c, g);
          if (seen.emplace(t, true).second) {
            stack.push_back(t);
          }
        }
      }
      return seen.size();
    }
  }  // namespace

  std::optional<BigCount> free_quotient_size(Presentation const& p,
                                             std::size_t         node_limit) {
    p.validate();
    std::unordered_map<std::string, std::size_t> letter;
    for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
      letter.emplace(p.alphabet[i], i);
    }
    std::vector<std::pair<letter_word, letter_word>> rels;
    for (auto const& r : p.relations) {
      auto to_letters = [&](Word const& w) {
        letter_word out;
        for (auto const& s : w.expand()) {
          out.push_back(letter.at(s));
        }
        return out;
      };
      rels.emplace_back(to_letters(r.lhs), to_letters(r.rhs));
    }
    if (p.alphabet.empty()) {
      return BigCount(1);
    }

    WordGraph graph(p.alphabet.size(), node_limit);
    try {
      graph.new_node();
      do {
        for (node_type c = 0; c < graph.number_of_nodes_defined(); ++c) {
          for (auto const& [u, v] : rels) {
            if (!graph.is_live(c)) {
              break;
            }
            node_type x = graph.trace_defining(c, u);
            node_type y = graph.trace_defining(c, v);
            if (x != y) {
              graph.coincide(x, y);
            }
          }
          if (!graph.is_live(c)) {
            continue;
          }
          for (std::size_t g = 0; g < graph.out_degree(); ++g) {
            if (graph.target(c, g) == NO_NODE) {
              graph.define(c, g);
            }
          }
        }
      } while (!is_complete(graph, rels));
    } catch (NodeLimit const&) {
      return std::nullopt;
    }
    return BigCount(count_reachable(graph));
  }

}  // namespace uniformpt
