#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "supercauchy/signature.hpp"

namespace supercauchy {

// Normal-form word
//
//   x^alpha * x`_S * y`_P * e_T * f^beta
//
// with S, P, T ascending and beta the Weyl exponents in the fixed order
// f_1^{b1} f_2^{b2} ... f_{2n}^{b2n}. Commutation rules:
//   x_i        commute with everything
//   x`_j, y`_k pairwise anticommute, square to zero, commute with e/f
//   e_i e_j = -e_j e_i (i != j),  e_i^2 = -1
//   f_{2j-1} f_{2j} - f_{2j} f_{2j-1} = 1, other f pairs commute
//   e_i f_j = -f_j e_i
struct Monomial {
  std::vector<unsigned> alpha;  // size m
  std::vector<int> grs;         // S, 1-based
  std::vector<int> par;         // P, 1-based
  std::vector<int> eblade;      // T, 1-based
  std::vector<unsigned> weyl;   // beta, size 2n

  auto operator<=>(const Monomial&) const = default;

  int bosonic_degree() const;
  int grassmann_degree() const { return static_cast<int>(grs.size()); }
  // the grading used by the Euler operator: |alpha| + |S| (parameters and
  // generators do not count)
  int degree() const { return bosonic_degree() + grassmann_degree(); }
  int weyl_degree() const;
  int generator_degree() const { return static_cast<int>(eblade.size()) + weyl_degree(); }
};

// the word 1 (empty content) in the given signature
Monomial unit_monomial(const Signature& sig);

// throws std::invalid_argument when the word does not fit the signature
void validate_monomial(const Monomial& w, const Signature& sig);

// exact product of two normal-form words; the Weyl reordering can branch, so
// the result is a short list of words with integer multipliers
std::vector<std::pair<Monomial, mpz_class>> monomial_product(const Monomial& a,
                                                             const Monomial& b,
                                                             const Signature& sig);

// canonical text of the variable part, e.g. "x1^2*q1*e2*f1", or "1" if empty
std::string monomial_text(const Monomial& w);

}  // namespace supercauchy
