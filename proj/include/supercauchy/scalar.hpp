#pragma once

#include <gmpxx.h>

#include <string>

namespace supercauchy {

// Exact scalar of the form  q * pi^k  with q rational and k an integer.
// This is a ring under multiplication; addition is only defined between
// scalars carrying the same pi power (the engine never needs more: polynomial
// work is pi^0 throughout, and each kernel family carries one uniform power).
// A mismatched addition is a logic error and throws.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long num, long den = 1, int pi_pow = 0);
  static Scalar from_mpq(mpq_class q, int pi_pow = 0);

  bool is_zero() const { return q_ == 0; }
  const mpq_class& rational() const { return q_; }
  int pi_power() const { return pi_pow_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero
  bool operator==(const Scalar& o) const { return q_ == o.q_ && pi_pow_ == o.pi_pow_; }

  double to_double() const;

  // canonical text: "3", "-5/7", "2*pi", "1/4*pi^-1", "pi^2"
  std::string to_string() const;
  // like to_string() but with the sign stripped (for "a - b" style printing)
  std::string to_string_unsigned() const;

 private:
  mpq_class q_{0};
  int pi_pow_ = 0;  // invariant: q_ == 0 => pi_pow_ == 0
  void normalize();
};

}  // namespace supercauchy
