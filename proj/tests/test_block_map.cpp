#include <random>
#include <unordered_set>

#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "uniformpt/block_map.hpp"
#include "uniformpt/errors.hpp"

namespace uniformpt {

  namespace {
    PartialMap pm(std::initializer_list<std::optional<point_type>> images) {
      return PartialMap::from_one_based(images);
    }
    constexpr auto U = std::nullopt;

    // All partition-preserving maps, by filtering every partial map.
    std::vector<BlockMap> all_block_maps(std::size_t n, std::size_t m) {
      std::vector<BlockMap> result;
      for (auto const& p : oracle::all_maps(n * m)) {
        if (preserves_partition(p, n, m)) {
          result.emplace_back(n, m, p);
        }
      }
      return result;
    }

    // Sum over r of C(m, r) (|PT_n| - 1)^r m^r, counted by the number r
    // of slots that are not all-undefined in a canonical form.
    BigCount canonical_count(unsigned n, unsigned m) {
      using boost::multiprecision::pow;
      BigCount ptn = pow(BigCount(n + 1), n);
      BigCount sum = 0;
      BigCount binom = 1;
      for (unsigned r = 0; r <= m; ++r) {
        sum += binom * pow(ptn - 1, r) * pow(BigCount(m), r);
        binom = binom * (m - r) / (r + 1);
      }
      return sum;
    }
  }  // namespace

  TEST_CASE("phi: examples", "[block]") {
    auto const x = WreathElement({pm({U, U}), pm({1, 2})}, pm({2, 1}));
    auto const b = phi(x);
    REQUIRE(b.flat() == pm({U, U, 1, 2}));
    REQUIRE(b.to_string() == "n=2 m=2 [-,-,1,2]");
    REQUIRE(phi(WreathElement::identity(3, 2)) == BlockMap::identity(3, 2));
  }

  TEST_CASE("phi agrees with the action on pairs", "[block][property]") {
    std::mt19937 rng(11);
    for (int k = 0; k < 500; ++k) {
      std::size_t n = 2 + k % 3, m = 2 + k % 2;
      auto        x = oracle::random_wreath(rng, n, m);
      auto        b = phi(x);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          auto image = oracle::act(x, i, j);
          auto flat  = b.flat()[flat_point(n, i, j)];
          if (image) {
            REQUIRE(flat == flat_point(n, image->first, image->second));
          } else {
            REQUIRE(flat == UNDEFINED);
          }
        }
      }
    }
  }

  TEST_CASE("phi is a surjective homomorphism at (2,2)", "[block]") {
    auto const all = oracle::all_wreath(2, 2);
    std::vector<BlockMap> images;
    std::unordered_set<BlockMap> distinct;
    for (auto const& x : all) {
      images.push_back(phi(x));
      distinct.insert(images.back());
    }
    REQUIRE(distinct.size() == 289);
    auto const block = all_block_maps(2, 2);
    REQUIRE(block.size() == 289);
    for (auto const& b : block) {
      REQUIRE(distinct.count(b) == 1);
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        REQUIRE(phi(all[i] * all[j]) == images[i] * images[j]);
      }
    }
  }

  TEST_CASE("phi is a homomorphism, randomized", "[block][property]") {
    std::mt19937 rng(12);
    for (auto [n, m] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 3}}) {
      for (int k = 0; k < 1000; ++k) {
        auto x = oracle::random_wreath(rng, n, m);
        auto y = oracle::random_wreath(rng, n, m);
        REQUIRE(phi(x * y) == phi(x) * phi(y));
      }
    }
  }

  TEST_CASE("phi_section", "[block]") {
    REQUIRE(phi_section(BlockMap::identity(2, 3))
            == WreathElement::identity(2, 3));
    auto const b = BlockMap(2, 2, pm({U, U, 1, 2}));
    REQUIRE(phi_section(b) == WreathElement({pm({U, U}), pm({1, 2})}, pm({1, 1})));

    for (auto [n, m] : {std::pair{2, 2}, std::pair{1, 3}, std::pair{3, 1}}) {
      for (auto const& c : all_block_maps(n, m)) {
        auto x = phi_section(c);
        REQUIRE(phi(x) == c);
        REQUIRE(x.is_canonical());
      }
    }
  }

  TEST_CASE("kernel_equivalent", "[block]") {
    auto const x = WreathElement({pm({U, U}), pm({1, 2})}, pm({1, 2}));
    auto const y = WreathElement({pm({U, U}), pm({1, 2})}, pm({2, 2}));
    REQUIRE(kernel_equivalent(x, y));
    auto const u = WreathElement({pm({1, 2}), pm({1, 2})}, pm({1, 2}));
    auto const v = WreathElement({pm({1, 2}), pm({1, 2})}, pm({2, 2}));
    REQUIRE_FALSE(kernel_equivalent(u, v));
    REQUIRE_THROWS_AS(
        kernel_equivalent(u, WreathElement::identity(2, 3)), Error);
  }

  TEST_CASE("kernel_equivalent agrees with phi on all pairs at (2,2)",
            "[block]") {
    auto const all = oracle::all_wreath(2, 2);
    std::vector<BlockMap>      images;
    std::vector<WreathElement> forms;
    for (auto const& x : all) {
      images.push_back(phi(x));
      forms.push_back(canonical_form(x));
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        bool const same = images[i] == images[j];
        REQUIRE(kernel_equivalent(all[i], all[j]) == same);
        REQUIRE((forms[i] == forms[j]) == same);
      }
    }
  }

  TEST_CASE("order_formula reproduces the table", "[block]") {
    // Rows m = 1..5; columns n = 1..5 (n = 1 is |PT_m| read as n x 1).
    char const* table[5][5] = {
        {"2", "9", "64", "625", "7776"},
        {"9", "289", "16129", "1560001", "241833601"},
        {"64", "15625", "6859000", "6570725617", "12691729689976"},
        {"625", "1185921", "4097152081", "38875337230081",
         "935615510827384401"},
        {"7776", "115856201", "3150905752576", "296120751810639601",
         "88798957515761812069376"},
    };
    for (std::size_t m = 1; m <= 5; ++m) {
      REQUIRE(order_formula(m, 1).str() == table[m - 1][0]);
      for (std::size_t n = 2; n <= 5; ++n) {
        REQUIRE(order_formula(n, m).str() == table[m - 1][n - 1]);
      }
    }
    REQUIRE_THROWS_AS(order_formula(0, 2), Error);
  }

  TEST_CASE("order_formula equals the count of canonical forms",
            "[block][property]") {
    for (unsigned n = 1; n <= 7; ++n) {
      for (unsigned m = 1; m <= 7; ++m) {
        REQUIRE(order_formula(n, m) == canonical_count(n, m));
      }
    }
  }

  TEST_CASE("preserves_partition", "[block]") {
    REQUIRE(preserves_partition(PartialMap::identity(4), 2, 2));
    REQUIRE_FALSE(preserves_partition(pm({1, 3, U, U}), 2, 2));
    REQUIRE(preserves_partition(pm({3, 4, U, U}), 2, 2));
    REQUIRE(preserves_partition(pm({U, 4, 1, 1}), 2, 2));
    REQUIRE_THROWS_AS(preserves_partition(PartialMap::identity(5), 2, 2),
                      Error);
    REQUIRE(count_partition_preserving(2, 2) == 289);
  }

  TEST_CASE("brute-force counts match order_formula for nm <= 6",
            "[block]") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (std::size_t m = 1; n * m <= 6; ++m) {
        REQUIRE(BigCount(count_partition_preserving(n, m))
                == order_formula(n, m));
      }
    }
    REQUIRE_THROWS_AS(count_partition_preserving(2, 4), Error);
  }

  TEST_CASE("BlockMap: codec and errors", "[block]") {
    auto const b = BlockMap(2, 2, pm({1, 2, U, U}));
    REQUIRE(b.to_string() == "n=2 m=2 [1,2,-,-]");
    REQUIRE(BlockMap::parse("n=2 m=2 [1,2,-,-]") == b);
    REQUIRE(BlockMap::parse("  n=2   m=2[1,2,-,-]") == b);
    REQUIRE_THROWS_AS(BlockMap::parse("n=2 m=2 [1,3,-,-]"), ParseError);
    REQUIRE_THROWS_AS(BlockMap::parse("n=2 m=3 [1,2,-,-]"), ParseError);
    REQUIRE_THROWS_AS(BlockMap::parse("m=2 n=2 [1,2,-,-]"), ParseError);
    REQUIRE_THROWS_AS(BlockMap(2, 2, pm({1, 3, U, U})), Error);
    REQUIRE_THROWS_AS(b * BlockMap::identity(4, 1), Error);
  }

}  // namespace uniformpt
