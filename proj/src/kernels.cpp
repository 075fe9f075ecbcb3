#include "supercauchy/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace supercauchy {

RadialSuperFunction RadialSuperFunction::from_element(const SuperElement& e) {
  RadialSuperFunction f(e.signature());
  f.add_part(0, e);
  return f;
}

RadialSuperFunction RadialSuperFunction::radial_power(const Signature& sig, int p,
                                                      const Scalar& c) {
  RadialSuperFunction f(sig);
  f.add_part(p, SuperElement::constant(sig, c));
  return f;
}

void RadialSuperFunction::add_part(int p, const SuperElement& e) {
  if (e.signature() != sig_) throw std::invalid_argument("radial part signature mismatch");
  if (e.is_zero()) return;

  // Reduce modulo the relation r^2 = sum_i u_i^2, which is monic in u_m^2:
  // any term with u_m-exponent >= 2 trades u_m^2 for r^2 - sum_{i<m} u_i^2,
  // raising the radial power. The remainder (u_m-exponent <= 1 everywhere) is
  // unique, so functional equality of radial functions becomes structural
  // equality of the part maps.
  const int m = sig_.m;
  SuperElement reduced = SuperElement::zero(sig_);
  SuperElement carry = SuperElement::zero(sig_);
  SuperElement lower = SuperElement::zero(sig_);
  for (const auto& [w, c] : e.terms()) {
    if (m >= 1 && w.alpha[static_cast<std::size_t>(m - 1)] >= 2) {
      Monomial base = w;
      base.alpha[static_cast<std::size_t>(m - 1)] -= 2;
      for (int i = 1; i < m; ++i) {
        Monomial low = base;
        low.alpha[static_cast<std::size_t>(i - 1)] += 2;
        lower.add_term(std::move(low), -c);
      }
      carry.add_term(std::move(base), c);
    } else {
      reduced.add_term(w, c);
    }
  }
  // carry and lower may still hold u_m-exponents >= 2; recursion shrinks them
  if (!carry.is_zero()) add_part(p + 2, carry);
  if (!lower.is_zero()) add_part(p, lower);

  auto it = parts_.find(p);
  if (it == parts_.end()) {
    if (!reduced.is_zero()) parts_.emplace(p, std::move(reduced));
    return;
  }
  it->second = it->second + reduced;
  if (it->second.is_zero()) parts_.erase(it);
}

RadialSuperFunction RadialSuperFunction::operator+(const RadialSuperFunction& o) const {
  RadialSuperFunction f = *this;
  for (const auto& [p, e] : o.parts_) f.add_part(p, e);
  return f;
}

RadialSuperFunction RadialSuperFunction::operator-() const {
  RadialSuperFunction f(sig_);
  for (const auto& [p, e] : parts_) f.parts_.emplace(p, -e);
  return f;
}

RadialSuperFunction RadialSuperFunction::operator-(const RadialSuperFunction& o) const {
  return *this + (-o);
}

RadialSuperFunction RadialSuperFunction::scaled(const Scalar& c) const {
  RadialSuperFunction f(sig_);
  if (c.is_zero()) return f;
  for (const auto& [p, e] : parts_) f.parts_.emplace(p, e.scaled(c));
  return f;
}

RadialSuperFunction RadialSuperFunction::mul_left(const SuperElement& e) const {
  RadialSuperFunction f(sig_);
  for (const auto& [p, part] : parts_) f.add_part(p, e * part);
  return f;
}

RadialSuperFunction RadialSuperFunction::mul_right(const SuperElement& e) const {
  RadialSuperFunction f(sig_);
  for (const auto& [p, part] : parts_) f.add_part(p, part * e);
  return f;
}

RadialSuperFunction RadialSuperFunction::partial(int i) const {
  RadialSuperFunction f(sig_);
  const SuperElement ui = SuperElement::variable(sig_, 'x', i);
  for (const auto& [p, e] : parts_) {
    f.add_part(p, bosonic_partial(e, i));
    if (p != 0) f.add_part(p - 2, (ui * e).scaled(Scalar(p)));
  }
  return f;
}

RadialSuperFunction RadialSuperFunction::dirac_bosonic(Side side) const {
  RadialSuperFunction f(sig_);
  for (int i = 1; i <= sig_.m; ++i) {
    const SuperElement ei = SuperElement::variable(sig_, 'e', i);
    const RadialSuperFunction di = partial(i);
    for (const auto& [p, e] : di.parts()) {
      f.add_part(p, side == Side::left ? ei * e : e * ei);
    }
  }
  return f;
}

RadialSuperFunction RadialSuperFunction::dirac_fermionic(Side side) const {
  RadialSuperFunction f(sig_);
  for (const auto& [p, e] : parts_)
    f.add_part(p, supercauchy::dirac_fermionic(e, side));
  return f;
}

RadialSuperFunction RadialSuperFunction::dirac(Side side) const {
  const RadialSuperFunction ferm = dirac_fermionic(side);
  const RadialSuperFunction bos = dirac_bosonic(side);
  return side == Side::left ? ferm - bos : -ferm - bos;
}

RadialSuperFunction RadialSuperFunction::laplace() const {
  RadialSuperFunction f(sig_);
  for (const auto& [p, e] : parts_) {
    SuperElement ferm = SuperElement::zero(sig_);
    for (int j = 1; j <= sig_.n; ++j) {
      ferm = ferm + grassmann_derivative(grassmann_derivative(e, 2 * j), 2 * j - 1);
    }
    f.add_part(p, ferm.scaled(Scalar(4)));
  }
  for (int i = 1; i <= sig_.m; ++i) {
    const RadialSuperFunction dii = partial(i).partial(i);
    for (const auto& [p, e] : dii.parts()) f.add_part(p, -e);
  }
  return f;
}

NumericSuperValue RadialSuperFunction::evaluate(std::span<const double> u) const {
  if (static_cast<int>(u.size()) != sig_.m)
    throw std::invalid_argument("evaluate: wrong point dimension");
  double r2 = 0.0;
  for (double c : u) r2 += c * c;
  const double r = std::sqrt(r2);
  NumericSuperValue out(sig_);
  for (const auto& [p, e] : parts_) {
    if (r == 0.0 && p < 0) throw std::domain_error("radial function evaluated at its pole");
    out.add_scaled(e.evaluate_bosonic(u), std::pow(r, p));
  }
  return out;
}

std::string RadialSuperFunction::to_string() const {
  if (parts_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, e] : parts_) {
    if (!first) s += " + ";
    first = false;
    if (p == 0) {
      s += e.to_string();
    } else {
      s += "r^" + std::to_string(p) + "*(" + e.to_string() + ")";
    }
  }
  return s;
}

Scalar sphere_area(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("sphere_area needs odd m >= 1");
  // (m-2)!! for odd m; (-1)!! = 1
  long dfact = 1;
  for (long v = m - 2; v >= 2; v -= 2) dfact *= v;
  return Scalar(1L << ((m + 1) / 2), dfact, (m - 1) / 2);
}

namespace {

// a_l coefficients of nu_{2l} = a_l r^{2l-m}, for l = 1..count
std::vector<Scalar> radial_coefficients(int m, int count) {
  std::vector<Scalar> a;
  a.push_back((sphere_area(m) * Scalar(m - 2)).inverse());
  for (int l = 2; l <= count; ++l) {
    const Scalar denom = Scalar(-(2 * l - m) * (2 * l - 2));
    a.push_back(a.back() * denom.inverse());
  }
  return a;
}

RadialSuperFunction nu_even_in(const Signature& sig, int l, const std::vector<Scalar>& a) {
  return RadialSuperFunction::radial_power(sig, 2 * l - sig.m, a[l - 1]);
}

// nu_{2k+1} = -d_xb nu_{2k+2}
RadialSuperFunction nu_odd_in(const Signature& sig, int k, const std::vector<Scalar>& a) {
  return -nu_even_in(sig, k + 1, a).dirac_bosonic(Side::left);
}

Scalar weight(int k, int n) {
  // 4^k k! / (n-k)!
  mpz_class num = 1;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * static_cast<unsigned>(k));
  mpz_class fk, fnk;
  mpz_fac_ui(fk.get_mpz_t(), static_cast<unsigned>(k));
  mpz_fac_ui(fnk.get_mpz_t(), static_cast<unsigned>(n - k));
  return Scalar::from_mpq(mpq_class(num * fk, fnk));
}

}  // namespace

RadialSuperFunction nu_bosonic(int m, int k) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("nu_bosonic needs odd m >= 1");
  if (k < 1) throw std::invalid_argument("nu_bosonic needs k >= 1");
  const Signature sig{m, 0, 0};
  const auto a = radial_coefficients(m, k / 2 + 1);
  if (k % 2 == 0) return nu_even_in(sig, k / 2, a);
  return nu_odd_in(sig, (k - 1) / 2, a);
}

RadialSuperFunction nu_super(const Signature& sig, int j, bool shifted) {
  if (sig.m < 1 || sig.m % 2 == 0) throw std::invalid_argument("nu_super needs odd m >= 1");
  if (j != 1 && j != 2) throw std::invalid_argument("nu_super: j must be 1 or 2");
  const int n = sig.n;
  const auto a = radial_coefficients(sig.m, n + 1);
  SuperElement w = SuperElement::vector_variable(sig, VectorPart::fermionic);
  if (shifted) w = w - SuperElement::param_vector(sig);
  std::vector<SuperElement> wpow{SuperElement::one(sig)};
  for (int t = 1; t <= 2 * n; ++t) wpow.push_back(wpow.back() * w);

  RadialSuperFunction out(sig);
  if (j == 2) {
    for (int k = 0; k <= n; ++k) {
      out = out + nu_even_in(sig, k + 1, a).mul_right(wpow[2 * n - 2 * k]).scaled(weight(k, n));
    }
    return out;
  }
  for (int k = 0; k + 1 <= n; ++k) {
    const Scalar c = weight(k, n - 1) * Scalar(2);  // 2 * 4^k k! / (n-k-1)!
    out = out + nu_even_in(sig, k + 1, a).mul_right(wpow[2 * n - 2 * k - 1]).scaled(c);
  }
  for (int k = 0; k <= n; ++k) {
    out = out + nu_odd_in(sig, k, a).mul_right(wpow[2 * n - 2 * k]).scaled(weight(k, n));
  }
  return out;
}

}  // namespace supercauchy
