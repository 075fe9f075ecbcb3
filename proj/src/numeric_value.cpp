#include "supercauchy/numeric_value.hpp"

#include <cmath>
#include <stdexcept>

namespace supercauchy {

NumericSuperValue NumericSuperValue::scalar(const Signature& sig, double v) {
  NumericSuperValue out(sig);
  out.add_word(unit_monomial(sig), v);
  return out;
}

void NumericSuperValue::add_word(const Monomial& w, double v) {
  if (v == 0.0) return;
  terms_[w] += v;
}

void NumericSuperValue::add_scaled(const NumericSuperValue& o, double s) {
  if (s == 0.0) return;
  for (const auto& [w, v] : o.terms_) terms_[w] += s * v;
}

NumericSuperValue NumericSuperValue::operator+(const NumericSuperValue& o) const {
  NumericSuperValue out = *this;
  out.add_scaled(o, 1.0);
  return out;
}

NumericSuperValue NumericSuperValue::operator-(const NumericSuperValue& o) const {
  NumericSuperValue out = *this;
  out.add_scaled(o, -1.0);
  return out;
}

NumericSuperValue NumericSuperValue::scaled(double s) const {
  NumericSuperValue out(sig_);
  if (s == 0.0) return out;
  for (const auto& [w, v] : terms_) out.terms_[w] = s * v;
  return out;
}

NumericSuperValue NumericSuperValue::operator*(const NumericSuperValue& o) const {
  if (!(sig_ == o.sig_))
    throw std::invalid_argument("numeric product: signature mismatch");
  NumericSuperValue out(sig_);
  for (const auto& [wa, va] : terms_)
    for (const auto& [wb, vb] : o.terms_)
      for (const auto& [w, mult] : monomial_product(wa, wb, sig_))
        out.terms_[w] += va * vb * mult.get_d();
  return out;
}

NumericSuperValue NumericSuperValue::berezin() const {
  NumericSuperValue out(sig_);
  const int full = 2 * sig_.n;
  for (const auto& [w, v] : terms_) {
    if ((int)w.grs.size() != full) continue;
    Monomial word = w;
    word.grs.clear();
    out.terms_[word] += v;
  }
  return out;
}

double NumericSuperValue::max_abs() const {
  double m = 0.0;
  for (const auto& [w, v] : terms_) m = std::max(m, std::abs(v));
  return m;
}

double NumericSuperValue::max_rel_diff(const NumericSuperValue& a,
                                       const NumericSuperValue& b) {
  double worst = 0.0;
  auto ita = a.terms_.begin();
  auto itb = b.terms_.begin();
  while (ita != a.terms_.end() || itb != b.terms_.end()) {
    double va = 0.0, vb = 0.0;
    if (itb == b.terms_.end() || (ita != a.terms_.end() && ita->first < itb->first)) {
      va = (ita++)->second;
    } else if (ita == a.terms_.end() || itb->first < ita->first) {
      vb = (itb++)->second;
    } else {
      va = (ita++)->second;
      vb = (itb++)->second;
    }
    worst = std::max(worst, std::abs(va - vb) / (1.0 + std::abs(vb)));
  }
  return worst;
}

std::optional<std::tuple<std::string, double, double>> NumericSuperValue::worst_word(
    const NumericSuperValue& a, const NumericSuperValue& b) {
  std::optional<std::tuple<std::string, double, double>> out;
  double worst = -1.0;
  auto consider = [&](const Monomial& w, double va, double vb) {
    const double r = std::abs(va - vb) / (1.0 + std::abs(vb));
    if (r > worst) {
      worst = r;
      out = {monomial_text(w), va, vb};
    }
  };
  for (const auto& [w, v] : a.terms_) {
    auto it = b.terms_.find(w);
    consider(w, v, it == b.terms_.end() ? 0.0 : it->second);
  }
  for (const auto& [w, v] : b.terms_) {
    if (!a.terms_.count(w)) consider(w, 0.0, v);
  }
  return out;
}

std::string NumericSuperValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, v] : terms_) {
    if (!out.empty()) out += "  ";
    out += monomial_text(w) + ": " + std::to_string(v);
  }
  return out;
}

}  // namespace supercauchy
