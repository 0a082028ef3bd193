#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "uniformpt/errors.hpp"
#include "uniformpt/partial_map.hpp"

namespace uniformpt {

  namespace {
    PartialMap pm(std::initializer_list<std::optional<point_type>> images) {
      return PartialMap::from_one_based(images);
    }
    constexpr auto U = std::nullopt;
  }  // namespace

  TEST_CASE("PartialMap: construction and predicates", "[transform]") {
    auto const id = PartialMap::identity(3);
    REQUIRE(id == pm({1, 2, 3}));
    REQUIRE(id.is_full());
    REQUIRE(id.is_permutation());
    REQUIRE_FALSE(id.is_empty());

    auto const e = PartialMap::empty(3);
    REQUIRE(e.is_empty());
    REQUIRE_FALSE(e.is_full());
    REQUIRE(e.rank() == 0);
    REQUIRE(e.to_string() == "[-,-,-]");

    REQUIRE(pm({2, 2, 3}).is_full());
    REQUIRE_FALSE(pm({2, 2, 3}).is_permutation());
    REQUIRE_FALSE(pm({U, 2}).is_full());

    REQUIRE_THROWS_AS(PartialMap(std::vector<point_type>{0, 3, 1}), Error);
    REQUIRE_THROWS_AS(PartialMap(std::vector<point_type>{}), Error);
    // Degree 1 is allowed here.
    REQUIRE(PartialMap::identity(1).rank() == 1);
  }

  TEST_CASE("PartialMap: compose", "[transform]") {
    REQUIRE(compose(pm({2, U}), pm({U, 1})) == pm({1, U}));
    REQUIRE(PartialMap::identity(3) * pm({2, 2, 3}) == pm({2, 2, 3}));

    auto const rho   = pm({2, 3, 1});
    auto const sigma = pm({U, 2, 3});
    auto const rs    = rho * sigma;
    REQUIRE(rs == pm({2, 3, U}));
    REQUIRE((rs * rs * rs).is_empty());

    REQUIRE_THROWS_AS(compose(PartialMap::identity(2), PartialMap::identity(3)),
                      Error);
  }

  TEST_CASE("PartialMap: rank", "[transform]") {
    REQUIRE(pm({2, U}).rank() == 1);
    for (std::size_t n = 1; n <= 5; ++n) {
      REQUIRE(PartialMap::identity(n).rank() == n);
    }
    REQUIRE(pm({2, 2, 3, 4}).rank() == 3);
  }

  TEST_CASE("PartialMap: text codec", "[transform]") {
    REQUIRE(pm({2, U, 3}).to_string() == "[2,-,3]");
    REQUIRE(PartialMap::parse("[2,-,3]") == pm({2, U, 3}));
    REQUIRE(PartialMap::parse("  [ 2 , - ,3 ] ") == pm({2, U, 3}));
    REQUIRE_THROWS_AS(PartialMap::parse("[2,-,4]"), ParseError);
    REQUIRE_THROWS_AS(PartialMap::parse("[0,1]"), ParseError);
    REQUIRE_THROWS_AS(PartialMap::parse("[1,2"), ParseError);
    REQUIRE_THROWS_AS(PartialMap::parse("[1,2] x"), ParseError);
    REQUIRE_THROWS_AS(PartialMap::parse("[]"), ParseError);

    std::mt19937 rng(17);
    for (int k = 0; k < 200; ++k) {
      auto a = oracle::random_map(rng, 1 + k % 6);
      REQUIRE(PartialMap::parse(a.to_string()) == a);
    }
  }

  TEST_CASE("PartialMap: cycles", "[transform]") {
    REQUIRE(PartialMap::standard_cycle(4, 4) == pm({2, 3, 4, 1}));
    REQUIRE(PartialMap::standard_cycle(4, 1) == PartialMap::identity(4));
    REQUIRE(PartialMap::standard_cycle(4, 0) == PartialMap::identity(4));
    REQUIRE(PartialMap::transposition(3, 1, 2) == pm({2, 1, 3}));
    point_type pts[] = {2, 3};
    REQUIRE(PartialMap::cycle(3, pts) == pm({1, 3, 2}));
    point_type bad[] = {1, 4};
    REQUIRE_THROWS_AS(PartialMap::cycle(3, bad), Error);
    point_type repeated[] = {1, 2, 1};
    REQUIRE_THROWS_AS(PartialMap::cycle(3, repeated), Error);
  }

  TEST_CASE("PartialMap: algebraic properties", "[transform][property]") {
    std::mt19937 rng(2024);
    for (int k = 0; k < 1000; ++k) {
      std::size_t n = 1 + k % 5;
      auto a = oracle::random_map(rng, n), b = oracle::random_map(rng, n),
           c = oracle::random_map(rng, n);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * PartialMap::identity(n) == a);
      REQUIRE(PartialMap::identity(n) * a == a);
      REQUIRE((PartialMap::empty(n) * a).is_empty());
      REQUIRE((a * PartialMap::empty(n)).is_empty());
      REQUIRE((a * b).rank() <= std::min(a.rank(), b.rank()));
      // Definition of the product, pointwise.
      auto ab = a * b;
      for (std::size_t i = 0; i < n; ++i) {
        bool defined = a[i] != UNDEFINED && b[a[i]] != UNDEFINED;
        REQUIRE(ab.is_defined(i) == defined);
        if (defined) {
          REQUIRE(ab[i] == b[a[i]]);
        }
      }
    }
  }

  TEST_CASE("standard_generators_ptn", "[transform]") {
    auto const g2 = standard_generators_ptn(2);
    REQUIRE(g2.pi == pm({2, 1}));
    REQUIRE(g2.rho == pm({2, 1}));
    REQUIRE(g2.tau == pm({2, 2}));
    REQUIRE(g2.sigma == pm({U, 2}));

    auto const g3 = standard_generators_ptn(3);
    REQUIRE(g3.sigma == pm({U, 2, 3}));
    REQUIRE(g3.sigma.rank() == 2);
    REQUIRE(g3.tau.rank() == 2);
    REQUIRE(g3.rho == pm({2, 3, 1}));

    REQUIRE_THROWS_AS(standard_generators_ptn(1), Error);
    REQUIRE_THROWS_AS(standard_generators_ptn(0), Error);
  }

  TEST_CASE("standard_generators_ptn: generate PT_n", "[transform]") {
    // Plain breadth-first closure, independent of the enumeration module.
    for (std::size_t n : {2u, 3u}) {
      auto const           g = standard_generators_ptn(n);
      std::set<PartialMap> seen{PartialMap::identity(n)};
      std::vector<PartialMap> frontier{PartialMap::identity(n)};
      while (!frontier.empty()) {
        std::vector<PartialMap> next;
        for (auto const& x : frontier) {
          for (auto const* y : {&g.pi, &g.rho, &g.tau, &g.sigma}) {
            auto z = x * *y;
            if (seen.insert(z).second) {
              next.push_back(z);
            }
          }
        }
        frontier = std::move(next);
      }
      std::size_t expected = n == 2 ? 9 : 64;
      REQUIRE(seen.size() == expected);
      REQUIRE(oracle::all_maps(n).size() == expected);
    }
  }

}  // namespace uniformpt
