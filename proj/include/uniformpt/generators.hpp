#ifndef UNIFORMPT_GENERATORS_HPP_
#define UNIFORMPT_GENERATORS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "block_map.hpp"
#include "wreath.hpp"
#include "word.hpp"

namespace uniformpt {

  // ASCII names of the generators; a trailing B marks a tail generator.
  namespace symbols {
    inline std::string const pi    = "pi";
    inline std::string const rho   = "rho";
    inline std::string const tau   = "tau";
    inline std::string const sigma = "sigma";
    inline std::string const piB   = "piB";
    inline std::string const rhoB  = "rhoB";
    inline std::string const tauB  = "tauB";
    inline std::string const x1    = "x1";
    inline std::string const x2    = "x2";
  }  // namespace symbols

  // pi, rho, tau, sigma, piB, rhoB, tauB
  std::vector<std::string> const& seven_generator_names();
  // x1, x2, tau, tauB, sigma
  std::vector<std::string> const& five_generator_names();

  // The two generators of the unit group S_n wr S_m.  When n and m are
  // both even
  //   x1 = ((1 2) in slot 2)((2 3 ... m) in the tail),
  // otherwise
  //   x1 = ((1 2) in slot 2)((1 2 ... m) in the tail);
  // always x2 = ((1 2 ... n) in slot 1)((1 2) in the tail).
  // Throws Error if n < 2 or m < 2.
  std::pair<WreathElement, WreathElement> xi_generators(std::size_t n,
                                                        std::size_t m);

  // Binds every name in symbols:: to its element of PT_n wr T_m.
  // Throws Error if n < 2 or m < 2.
  Alphabet<WreathElement> build_named_generators(std::size_t n, std::size_t m);

  // The image of a wreath alphabet under phi.
  Alphabet<BlockMap> block_alphabet(Alphabet<WreathElement> const& a);

  //! Words in x1, x2 for pi, rho, piB and rhoB.
  struct XiWords {
    Word pi;
    Word rho;
    Word piB;
    Word rhoB;
  };

  XiWords xi_words(std::size_t n, std::size_t m);

}  // namespace uniformpt

#endif  // UNIFORMPT_GENERATORS_HPP_
