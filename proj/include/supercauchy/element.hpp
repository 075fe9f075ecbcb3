#pragma once

#include <map>
#include <span>
#include <string>

#include "supercauchy/monomial.hpp"
#include "supercauchy/numeric_value.hpp"
#include "supercauchy/scalar.hpp"
#include "supercauchy/signature.hpp"

namespace supercauchy {

enum class VectorPart { full, bosonic, fermionic };

// Element of R[x_1..x_m] (x) Lambda (x) C with exact coefficients, kept in
// normal form (see Monomial). Value semantics throughout.
class SuperElement {
 public:
  explicit SuperElement(Signature sig) : sig_(sig) {}

  static SuperElement zero(const Signature& sig) { return SuperElement(sig); }
  static SuperElement constant(const Signature& sig, const Scalar& c);
  static SuperElement one(const Signature& sig) { return constant(sig, Scalar(1)); }
  static SuperElement from_monomial(const Signature& sig, Monomial w, Scalar c);
  // kind: 'x' (bosonic), 'q' (Grassmann x`), 'y' (parameter y`),
  //       'e' (Clifford), 'f' (Weyl); index is 1-based
  static SuperElement variable(const Signature& sig, char kind, int index);
  // x = Xb + Xf,  Xb = sum x_i e_i,  Xf = sum x`_j f_j
  static SuperElement vector_variable(const Signature& sig, VectorPart part);
  // sum y`_j f_j over j = 1..2n; requires n_params >= 2n
  static SuperElement param_vector(const Signature& sig);

  const Signature& signature() const { return sig_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const SuperElement& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
  }

  SuperElement operator+(const SuperElement& o) const;
  SuperElement operator-(const SuperElement& o) const;
  SuperElement operator-() const;
  SuperElement operator*(const SuperElement& o) const;
  SuperElement scaled(const Scalar& c) const;
  SuperElement pow(unsigned k) const;

  void add_term(Monomial w, const Scalar& c);  // merges, drops exact zeros

  // grading |alpha| + |S|
  int max_degree() const;
  SuperElement homogeneous_part(int k) const;
  int max_generator_degree() const;

  // container move: same content inside a signature with new_m bosonic slots,
  // the old alpha block placed at [offset, offset+m); generator indices are
  // untouched (they stay within the original m)
  SuperElement with_bosonic_slots(int new_m, int offset) const;

  // substitute numeric values for the bosonic variables; vals.size() == m
  NumericSuperValue evaluate_bosonic(std::span<const double> vals) const;

  // canonical text form; parse(to_string()) reproduces the element bit-exactly
  std::string to_string() const;

 private:
  Signature sig_;
  std::map<Monomial, Scalar> terms_;
};

}  // namespace supercauchy
