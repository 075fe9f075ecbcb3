#pragma once

#include <map>
#include <span>
#include <string>

#include "supercauchy/element.hpp"
#include "supercauchy/operators.hpp"

namespace supercauchy {

// Finite sum  F = sum_p r^p * E_p  where r = |u| is the length of the bosonic
// point u and E_p is an exact SuperElement whose bosonic slots hold the
// components of u. Radial powers may be negative, so F is only a function on
// u != 0 when any p < 0. Differentiation uses
//   d_i (r^p E) = r^p d_i E + p r^{p-2} u_i E,
// which keeps the family closed under the Dirac and Laplace operators.
class RadialSuperFunction {
 public:
  explicit RadialSuperFunction(Signature sig) : sig_(sig) {}

  static RadialSuperFunction from_element(const SuperElement& e);
  // c * r^p
  static RadialSuperFunction radial_power(const Signature& sig, int p, const Scalar& c);

  const Signature& signature() const { return sig_; }
  const std::map<int, SuperElement>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  void add_part(int p, const SuperElement& e);  // merges, drops zero parts

  RadialSuperFunction operator+(const RadialSuperFunction& o) const;
  RadialSuperFunction operator-(const RadialSuperFunction& o) const;
  RadialSuperFunction operator-() const;
  RadialSuperFunction scaled(const Scalar& c) const;
  RadialSuperFunction mul_left(const SuperElement& e) const;   // e * F
  RadialSuperFunction mul_right(const SuperElement& e) const;  // F * e

  RadialSuperFunction partial(int i) const;  // d/du_i, 1-based
  RadialSuperFunction dirac_bosonic(Side side) const;
  RadialSuperFunction dirac_fermionic(Side side) const;
  // same sign conventions as the element-level operator:
  // left = ferm - bos, right = -ferm - bos
  RadialSuperFunction dirac(Side side = Side::left) const;
  // 4 sum_j d_{x`_{2j-1}} d_{x`_{2j}}  -  sum_i d_i^2 (independent of dirac;
  // the identity laplace = dirac^2 is exercised by tests)
  RadialSuperFunction laplace() const;

  // substitute u (u.size() == m); throws std::domain_error at u = 0 when a
  // negative radial power is present
  NumericSuperValue evaluate(std::span<const double> u) const;

  std::string to_string() const;

 private:
  Signature sig_;
  std::map<int, SuperElement> parts_;
};

// Fundamental solutions nu_k of the purely bosonic operators on R^m, m odd:
// nu_{2l} = a_l r^{2l-m} with a_1 = 1/((m-2) sigma_{m-1}),
// a_l = -a_{l-1} / ((2l-m)(2l-2)), and nu_{2k+1} = -d_xb nu_{2k+2}.
// sigma_{m-1} = 2^{(m+1)/2} pi^{(m-1)/2} / (m-2)!! is the area of the unit
// sphere S^{m-1} for odd m. Signature of the result is (m, 0, 0).
// Throws std::invalid_argument for even or nonpositive m, or k < 1.
RadialSuperFunction nu_bosonic(int m, int k);

// surface area sigma_{m-1} for odd m >= 1 (m=1 gives 2, the two endpoints)
Scalar sphere_area(int m);

// The two super fundamental solutions in signature sig = (m, n, n_params):
//   nu_2 = sum_{k=0}^{n}   (4^k k! / (n-k)!)    nu_{2k+2} w^{2n-2k}
//   nu_1 = sum_{k=0}^{n-1} (2 4^k k! / (n-k-1)!) nu_{2k+2} w^{2n-2k-1}
//       +  sum_{k=0}^{n}   (4^k k! / (n-k)!)    nu_{2k+1} w^{2n-2k}
// with w the fermionic vector variable, or w = x` - y` when shifted is set
// (then n_params >= 2n is required). They satisfy dirac(nu_2) = nu_1 and
// dirac(nu_1) = 0 away from u = 0.
// Throws std::invalid_argument for even m or j outside {1, 2}.
RadialSuperFunction nu_super(const Signature& sig, int j, bool shifted = false);

}  // namespace supercauchy
