#pragma once

#include "esbraid/braid.hpp"
#include "esbraid/cyclo.hpp"
#include "esbraid/linalg.hpp"
#include "esbraid/report.hpp"

#include <string>

namespace esbraid {

/// Enhanced trace invariant of the closure:
/// alpha^{n - e} * (sqrt 2)^{-n} * trace of the braid image, alpha = +-1.
Cyclo t_r(const BraidWord& word, int alpha);

/// Jones polynomial of the closure at t = i, obtained by inverting the
/// relation t_r = (-1)^{n-1+e} * alpha^{n-e} * sqrt(2) * j4. Computed for
/// both alpha values and cross-checked; the result is verified to be real.
Cyclo jones4(const BraidWord& word);

/// The same invariant from the trace formula over the irreducible model
/// (rescaled rho1-hat; its restriction when the strand count is even),
/// reading the fractional power (-1)^{e/4} as zeta^e.
Cyclo jones4_direct(const BraidWord& word);

struct ArfValue {
    bool defined = false;
    int value = 0;
};

/// Arf bit of the closure read off the sign of jones4 against
/// (sqrt 2)^{c-1}; undefined when jones4 vanishes. Any other value throws
/// std::logic_error (the trichotomy is asserted, not assumed).
ArfValue arf(const BraidWord& word);

/// The quadratic, cubic-sum, and commutator-square identities that make the
/// renormalized representation factor over the Temperley-Lieb quotient,
/// verified exactly at every site / adjacent site pair. strands >= 3.
CheckReport verify_tl_relations(int strands);

/// Quadratic relation (a + 1)(a - i) = 0 at every site for a 4x4 generator
/// block; r_matrix_tl satisfies it, plain r_matrix must not.
bool tl_quadratic_holds(const ExactMatrix& block4);

inline constexpr std::size_t kKauffmanMaxCrossings = 16;

/// Independent Jones oracle: Kauffman bracket state sum over all smoothings
/// of the closed braid diagram, accumulated as an integer Laurent polynomial
/// in the bracket variable and evaluated afterwards in the degree-8
/// cyclotomic extension (the variable is a primitive 16th root of unity).
/// Shares no code path with the representation route. Caps at
/// kKauffmanMaxCrossings crossings.
Cyclo kauffman_oracle(const BraidWord& word);

struct LinkInvariants {
    std::string word;
    int strands = 0;
    int exponent_sum = 0;
    int components = 0;
    Cyclo t_r_plus;
    Cyclo t_r_minus;
    Cyclo j4;
    ArfValue arf;
};

LinkInvariants link_invariants(const BraidWord& word);

}  // namespace esbraid
