#pragma once

#include <cstdint>
#include <random>

#include "supercauchy/element.hpp"

namespace supercauchy {

// Deterministic generator of sparse random elements for the property suites.
// Coefficients are drawn from {-3..3} \ {0}, generator (e/f) degree is capped
// at 2 so products stay desk-sized.
class RandomGen {
 public:
  RandomGen(Signature sig, std::uint64_t seed) : sig_(sig), rng_(seed) {}

  // up to n_terms monomials of grading degree <= max_degree
  SuperElement element(int max_degree, int n_terms);
  // up to n_terms monomials of grading degree exactly k (may come out zero
  // only if the space is empty)
  SuperElement homogeneous(int k, int n_terms);
  // homogeneous of degree k with no bosonic content (pure Lambda tensor C)
  SuperElement grassmann_homogeneous(int k, int n_terms);
  // polynomial in x and e-blades only (no x`, y`, f) of degree <= max_degree
  SuperElement clifford_polynomial(int max_degree, int n_terms);

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive

 private:
  Signature sig_;
  std::mt19937_64 rng_;
  Scalar coefficient();
  Monomial word(int degree_lo, int degree_hi, bool allow_bosonic, bool allow_grassmann,
                bool allow_generators);
};

}  // namespace supercauchy
