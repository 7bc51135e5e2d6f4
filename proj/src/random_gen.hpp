#pragma once

#include "mould.hpp"
#include "ncpoly.hpp"

#include <cstdint>
#include <random>

namespace mouldcalc {

// Deterministic generator: same seed, same draws, on every platform
// (std::uniform_int_distribution is implementation-defined, so draws go
// through plain modular reduction).
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}
    int64_t range(int64_t lo, int64_t hi); // inclusive
    Rational small_rational();

  private:
    std::mt19937_64 gen_;
};

// Random rational combination of bracketed Lyndon words, homogeneous of
// the given weight.
NCPoly random_lie(Rng &rng, int weight);
// Sum of homogeneous pieces over 2..max_weight.
NCPoly random_lie_mixed(Rng &rng, int max_weight);

// Alternal polynomial mould: the dictionary image of a random Lie
// element, extended by zero components up to the requested depth.
Mould random_alternal_mould(Rng &rng, int depth, int max_weight);

// Sparse rational-function mould; denominators are drawn from the
// flexion-type forms (u-side sums of consecutive variables, v-side
// variables and differences) so that arithmetic stays desk-sized.
Mould random_lfd_mould(Rng &rng, Alphabet alpha, int depth);

// push_symmetrize of a random LFD mould.
Mould random_push_invariant_mould(Rng &rng, int depth);

// Constant value per depth.
Mould random_constant_mould(Rng &rng, Alphabet alpha, int depth);

} // namespace mouldcalc
