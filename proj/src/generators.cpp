#include "uniformpt/generators.hpp"

#include "uniformpt/errors.hpp"

namespace uniformpt {

  namespace {
    void check_dimensions(std::size_t n, std::size_t m) {
      if (n < 2 || m < 2) {
        throw Error("the named generators need n, m >= 2, found n = "
                    + std::to_string(n) + ", m = " + std::to_string(m));
      }
    }

    // (from from+1 ... to) of degree `degree`, 1-based.
    PartialMap cycle_range(std::size_t degree,
                           point_type  from,
                           point_type  to) {
      std::vector<point_type> pts;
      for (point_type p = from; p <= to; ++p) {
        pts.push_back(p);
      }
      return PartialMap::cycle(degree, pts);
    }

    Word sym(std::string const& name, std::uint64_t k = 1) {
      return Word::symbol(name, k);
    }
  }  // namespace

  std::vector<std::string> const& seven_generator_names() {
    static std::vector<std::string> const names = {symbols::pi,
                                                   symbols::rho,
                                                   symbols::tau,
                                                   symbols::sigma,
                                                   symbols::piB,
                                                   symbols::rhoB,
                                                   symbols::tauB};
    return names;
  }

  std::vector<std::string> const& five_generator_names() {
    static std::vector<std::string> const names = {
        symbols::x1, symbols::x2, symbols::tau, symbols::tauB, symbols::sigma};
    return names;
  }

  std::pair<WreathElement, WreathElement> xi_generators(std::size_t n,
                                                        std::size_t m) {
    check_dimensions(n, m);
    bool const both_even = n % 2 == 0 && m % 2 == 0;
    auto const cyc       = both_even ? cycle_range(m, 2, m) : cycle_range(m, 1, m);
    auto       x1 = embed_slot(m, 1, PartialMap::transposition(n, 1, 2))
              * embed_tail(n, cyc);
    auto x2 = embed_slot(m, 0, PartialMap::standard_cycle(n, n))
              * embed_tail(n, PartialMap::transposition(m, 1, 2));
    return {std::move(x1), std::move(x2)};
  }

  Alphabet<WreathElement> build_named_generators(std::size_t n,
                                                 std::size_t m) {
    check_dimensions(n, m);
    auto const ptn = standard_generators_ptn(n);
    std::vector<point_type> tau_bar(m);
    for (std::size_t j = 0; j < m; ++j) {
      tau_bar[j] = static_cast<point_type>(j);
    }
    tau_bar[0] = 1;

    Alphabet<WreathElement> a(WreathElement::identity(n, m));
    a.bind(symbols::pi, embed_slot(m, 0, ptn.pi));
    a.bind(symbols::rho, embed_slot(m, 0, ptn.rho));
    a.bind(symbols::tau, embed_slot(m, 0, ptn.tau));
    a.bind(symbols::sigma, embed_slot(m, 0, ptn.sigma));
    a.bind(symbols::piB, embed_tail(n, PartialMap::transposition(m, 1, 2)));
    a.bind(symbols::rhoB, embed_tail(n, PartialMap::standard_cycle(m, m)));
    a.bind(symbols::tauB, embed_tail(n, PartialMap(std::move(tau_bar))));
    auto [x1, x2] = xi_generators(n, m);
    a.bind(symbols::x1, std::move(x1));
    a.bind(symbols::x2, std::move(x2));
    return a;
  }

  Alphabet<BlockMap> block_alphabet(Alphabet<WreathElement> const& a) {
    return map_alphabet(a, [](WreathElement const& x) { return phi(x); });
  }

  XiWords xi_words(std::size_t n, std::size_t m) {
    using std::uint64_t;
    check_dimensions(n, m);
    uint64_t const N = n, M = m;
    Word const     x1 = sym(symbols::x1), x2 = sym(symbols::x2);
    Word const     x1x2m = Word::power(x1 * x2, M);

    if (n % 2 == 0 && m % 2 == 0) {
      Word const a
          = Word::power(sym(symbols::x1, M - 1) * sym(symbols::x2, 2),
                        (M - 2) * (N - 1) * (N - 1))
            * Word::power(x1 * sym(symbols::x2, 2), (M - 1) * (N * N - N - 1));
      Word const head = sym(symbols::x2, 2 * N - 1);
      return XiWords{
          a * x1x2m,
          Word::power(a, N - 1),
          head * Word::power(a, N - 1),
          concat({head, Word::power(a, N), x1x2m, head, x1, x2}),
      };
    }
    Word const b     = x1 * sym(symbols::x2, 2 * N - 1);
    Word const c     = sym(symbols::x1, M + 1) * sym(symbols::x2, 2 * N - 1);
    Word const head  = sym(symbols::x1, 2 * M - 1);
    return XiWords{
        concat({Word::power(b, (M - 1) * N),
                Word::power(c, (M - 1) * (N - 1)),
                sym(symbols::x1, M)}),
        Word::power(b, N - 1) * Word::power(c, (M - 2) * (N - 1)),
        concat({head, Word::power(b, N), Word::power(c, (M - 2) * (N - 1))}),
        concat({head,
                Word::power(b, (M - 1) * N),
                Word::power(c, (M - 1) * (N - 1)),
                sym(symbols::x1, M + 2)}),
    };
  }

}  // namespace uniformpt
