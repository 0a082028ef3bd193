#include "catch_amalgamated.hpp"

#include "uniformpt/alphabet.hpp"
#include "uniformpt/errors.hpp"
#include "uniformpt/partial_map.hpp"
#include "uniformpt/word.hpp"

namespace uniformpt {

  TEST_CASE("Word: parse and print", "[word]") {
    auto const w = Word::parse("( x1 x2^3 )^4 x1");
    REQUIRE(w.to_string() == "( x1 x2^3 )^4 x1");
    REQUIRE(w.expanded_length() == 17);
    REQUIRE(Word::parse("1").empty());
    REQUIRE(Word::parse("").empty());
    REQUIRE(Word::parse("  1  ").to_string() == "1");
    REQUIRE(Word::parse("a 1 b").to_string() == "a b");
    REQUIRE(Word::parse("a a a").to_string() == "a^3");
    REQUIRE(Word::parse("(a)^3 a").to_string() == "a^4");
    REQUIRE(Word::parse("(a b)^0").empty());
    REQUIRE(Word::parse("((a b)^2 c)^2").expanded_length() == 10);
    REQUIRE(Word::parse("piB rhoB^2").symbols()
            == std::set<std::string>{"piB", "rhoB"});

    REQUIRE_THROWS_AS(Word::parse("(a b"), ParseError);
    REQUIRE_THROWS_AS(Word::parse("a b)"), ParseError);
    REQUIRE_THROWS_AS(Word::parse("a^"), ParseError);
    REQUIRE_THROWS_AS(Word::parse("a + b"), ParseError);
    REQUIRE_THROWS_AS(Word::symbol("2x"), Error);
  }

  TEST_CASE("Word: round trip through text", "[word][property]") {
    for (char const* text : {"x1", "( x1 x2^3 )^4 x1", "1",
                             "rhoB^3 pi rhoB^2 sigma rhoB",
                             "( ( a b^2 )^3 c )^5 d^7"}) {
      auto w = Word::parse(text);
      REQUIRE(Word::parse(w.to_string()) == w);
      REQUIRE(Word::parse(w.to_string()).expand() == w.expand());
    }
  }

  TEST_CASE("Word: expand and substitute", "[word]") {
    auto const w = Word::parse("(a b)^2 c");
    REQUIRE(w.expand() == std::vector<std::string>{"a", "b", "a", "b", "c"});
    REQUIRE_THROWS_AS(Word::parse("(a b)^1000").expand(100), Error);
    REQUIRE(Word::power(Word::parse("a"), ~std::uint64_t(0)).expanded_length()
            == ~std::uint64_t(0));

    REQUIRE(w.substitute({}) == w);
    auto const s = w.substitute({{"a", Word::parse("x y")}, {"c", Word()}});
    REQUIRE(s.expand() == std::vector<std::string>{"x", "y", "b", "x", "y", "b"});
  }

  TEST_CASE("eval_word on partial maps", "[word]") {
    Alphabet<PartialMap> a(PartialMap::identity(3));
    auto const           g = standard_generators_ptn(3);
    a.bind("rho", g.rho);
    a.bind("sigma", g.sigma);
    a.bind("pi", g.pi);

    REQUIRE(eval_word(a, Word()) == PartialMap::identity(3));
    REQUIRE(eval_word(a, Word::parse("( rho sigma )^3")).is_empty());
    REQUIRE(eval_word(a, Word::parse("pi pi")) == PartialMap::identity(3));
    REQUIRE(eval_word(a, Word::parse("rho^3000001"))
            == g.rho);
    REQUIRE(eval_word(a, Word::parse("(rho pi)^2 sigma"))
            == g.rho * g.pi * g.rho * g.pi * g.sigma);

    auto const unbound = [&] { eval_word(a, Word::parse("rho tau")); };
    REQUIRE_THROWS_WITH(unbound(), Catch::Matchers::ContainsSubstring("tau"));
    REQUIRE_THROWS_AS(a.bind("rho", g.rho), Error);
    REQUIRE_THROWS_AS(a.bind("id2", PartialMap::identity(2)), Error);
  }

  TEST_CASE("power by squaring matches repeated products", "[word][property]") {
    auto const x = PartialMap::from_one_based({2, 3, 4, 5, 1, std::nullopt, 6});
    PartialMap expected = PartialMap::identity(7);
    for (std::uint64_t k = 0; k < 40; ++k) {
      REQUIRE(power(x, k) == expected);
      expected = expected * x;
    }
  }

}  // namespace uniformpt
