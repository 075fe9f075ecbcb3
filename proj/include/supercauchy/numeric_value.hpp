#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "supercauchy/monomial.hpp"
#include "supercauchy/signature.hpp"

namespace supercauchy {

// Float-coefficient element of the generator/Grassmann word algebra: a map
// word -> double where the word carries no bosonic content (alpha all zero).
// Products keep the exact sign bookkeeping of the word algebra; only the
// coefficients are floating point. This is what quadrature accumulates.
class NumericSuperValue {
 public:
  NumericSuperValue() = default;
  explicit NumericSuperValue(Signature sig) : sig_(sig) {}
  static NumericSuperValue scalar(const Signature& sig, double v);

  const Signature& signature() const { return sig_; }
  const std::map<Monomial, double>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_word(const Monomial& w, double v);
  void add_scaled(const NumericSuperValue& o, double s);

  NumericSuperValue operator+(const NumericSuperValue& o) const;
  NumericSuperValue operator-(const NumericSuperValue& o) const;
  NumericSuperValue operator*(const NumericSuperValue& o) const;
  NumericSuperValue scaled(double s) const;

  // exact Berezin integral over the x`_j: keeps words with full S-support,
  // strips it; parameters y`, e and f content pass through untouched
  NumericSuperValue berezin() const;

  double max_abs() const;

  // max over the union of words of |a_w - b_w| / (1 + |b_w|)
  static double max_rel_diff(const NumericSuperValue& a, const NumericSuperValue& b);
  // word text and both side values at the argmax of the relative difference
  static std::optional<std::tuple<std::string, double, double>> worst_word(
      const NumericSuperValue& a, const NumericSuperValue& b);

  std::string to_string() const;

 private:
  Signature sig_;
  std::map<Monomial, double> terms_;
};

}  // namespace supercauchy
