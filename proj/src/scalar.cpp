#include "supercauchy/scalar.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace supercauchy {

Scalar::Scalar(long num, long den, int pi_pow) : pi_pow_(pi_pow) {
  if (den == 0) throw std::invalid_argument("scalar: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
  normalize();
}

Scalar Scalar::from_mpq(mpq_class q, int pi_pow) {
  Scalar s;
  q.canonicalize();
  s.q_ = std::move(q);
  s.pi_pow_ = pi_pow;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (q_ == 0) pi_pow_ = 0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (pi_pow_ != o.pi_pow_)
    throw std::logic_error("scalar: sum of distinct pi powers is not representable");
  return from_mpq(q_ + o.q_, pi_pow_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  return from_mpq(q_ * o.q_, pi_pow_ + o.pi_pow_);
}

Scalar Scalar::operator-() const { return from_mpq(-q_, pi_pow_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar: inverse of zero");
  return from_mpq(1 / q_, -pi_pow_);
}

double Scalar::to_double() const {
  return q_.get_d() * std::pow(std::numbers::pi, pi_pow_);
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (pi_pow_ == 0) return q_.get_str();
  if (q_ == 1) {
    // fallthrough to bare pi part
  } else if (q_ == -1) {
    out = "-";
  } else {
    out = q_.get_str() + "*";
  }
  out += "pi";
  if (pi_pow_ != 1) out += "^" + std::to_string(pi_pow_);
  return out;
}

std::string Scalar::to_string_unsigned() const {
  Scalar a = (q_ < 0) ? -*this : *this;
  return a.to_string();
}

}  // namespace supercauchy
