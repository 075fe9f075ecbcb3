#include "supercauchy/element.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supercauchy {

int Monomial::bosonic_degree() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

int Monomial::weyl_degree() const {
  return std::accumulate(weyl.begin(), weyl.end(), 0);
}

Monomial unit_monomial(const Signature& sig) {
  Monomial w;
  w.alpha.assign(sig.m, 0);
  w.weyl.assign(2 * sig.n, 0);
  return w;
}

void validate_monomial(const Monomial& w, const Signature& sig) {
  if ((int)w.alpha.size() != sig.m || (int)w.weyl.size() != 2 * sig.n)
    throw std::invalid_argument("monomial: block sizes do not match signature");
  auto ascending_in = [](const std::vector<int>& v, int hi) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 1 || v[i] > hi) return false;
      if (i > 0 && v[i] <= v[i - 1]) return false;
    }
    return true;
  };
  if (!ascending_in(w.grs, 2 * sig.n)) throw std::invalid_argument("monomial: bad x` support");
  if (!ascending_in(w.par, sig.n_params)) throw std::invalid_argument("monomial: bad y` support");
  if (!ascending_in(w.eblade, sig.m)) throw std::invalid_argument("monomial: bad e blade");
}

namespace {

// merge two ascending supports, tracking the permutation parity; returns false
// on overlap (the square of a Grassmann variable vanishes)
bool merge_supports(const std::vector<int>& a, const std::vector<int>& b,
                    std::vector<int>& out, int& sign) {
  out.clear();
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else if (a[i] > b[j]) {
      if ((a.size() - i) & 1) sign = -sign;  // b[j] crosses the remaining a's
      out.push_back(b[j++]);
    } else {
      return false;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return true;
}

// multiply an ascending Clifford blade by e_t from the right (e_t^2 = -1)
void clifford_append(std::vector<int>& blade, int t, int& sign) {
  auto it = std::upper_bound(blade.begin(), blade.end(), t);
  if ((blade.end() - it) & 1) sign = -sign;  // cross the strictly greater ones
  if (it != blade.begin() && *(it - 1) == t) {
    sign = -sign;
    blade.erase(it - 1);
  } else {
    blade.insert(it, t);
  }
}

struct WeylBranch {
  std::vector<unsigned> beta;
  mpz_class coeff;
};

// Reordering inside one Weyl pair:
//   f2^q f1^p = sum_k (-1)^k k! C(p,k) C(q,k) f1^{p-k} f2^{q-k}
// so (f1^{p1} f2^{q1}) (f1^{p2} f2^{q2}) branches over k <= min(q1, p2).
// Distinct pairs commute, hence the cross product over pairs.
std::vector<WeylBranch> weyl_merge(const std::vector<unsigned>& a,
                                   const std::vector<unsigned>& b, int n) {
  std::vector<WeylBranch> acc{{{}, mpz_class(1)}};
  for (int j = 0; j < n; ++j) {
    const unsigned p1 = a[2 * j], q1 = a[2 * j + 1];
    const unsigned p2 = b[2 * j], q2 = b[2 * j + 1];
    const unsigned kmax = std::min(q1, p2);
    std::vector<WeylBranch> next;
    next.reserve(acc.size() * (kmax + 1));
    for (unsigned k = 0; k <= kmax; ++k) {
      mpz_class c, b1, b2;
      mpz_fac_ui(c.get_mpz_t(), k);
      mpz_bin_uiui(b1.get_mpz_t(), p2, k);
      mpz_bin_uiui(b2.get_mpz_t(), q1, k);
      c *= b1 * b2;
      if (k & 1) c = -c;
      for (const auto& br : acc) {
        WeylBranch nb = br;
        nb.beta.push_back(p1 + p2 - k);
        nb.beta.push_back(q1 + q2 - k);
        nb.coeff *= c;
        next.push_back(std::move(nb));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<std::pair<Monomial, mpz_class>> monomial_product(const Monomial& a,
                                                             const Monomial& b,
                                                             const Signature& sig) {
  std::vector<std::pair<Monomial, mpz_class>> out;
  int sign = 1;

  Monomial base;
  base.alpha.resize(sig.m);
  for (int i = 0; i < sig.m; ++i) base.alpha[i] = a.alpha[i] + b.alpha[i];

  // x`_{S_b} moves left across y`_{P_a} (e/f blocks commute with it)
  if ((b.grs.size() * a.par.size()) & 1) sign = -sign;
  if (!merge_supports(a.grs, b.grs, base.grs, sign)) return out;
  if (!merge_supports(a.par, b.par, base.par, sign)) return out;

  // e_{T_b} moves left across f^{beta_a}
  if ((b.eblade.size() * a.weyl_degree()) & 1) sign = -sign;
  base.eblade = a.eblade;
  for (int t : b.eblade) clifford_append(base.eblade, t, sign);

  auto branches = weyl_merge(a.weyl, b.weyl, sig.n);
  out.reserve(branches.size());
  for (auto& br : branches) {
    if (br.coeff == 0) continue;
    Monomial w = base;
    w.weyl = std::move(br.beta);
    mpz_class c = std::move(br.coeff);
    if (sign < 0) c = -c;
    out.emplace_back(std::move(w), std::move(c));
  }
  return out;
}

std::string monomial_text(const Monomial& w) {
  std::string out;
  auto app = [&out](char kind, int idx, unsigned exp) {
    if (exp == 0) return;
    if (!out.empty()) out += '*';
    out += kind;
    out += std::to_string(idx);
    if (exp > 1) out += "^" + std::to_string(exp);
  };
  for (size_t i = 0; i < w.alpha.size(); ++i) app('x', (int)i + 1, w.alpha[i]);
  for (int j : w.grs) app('q', j, 1);
  for (int j : w.par) app('y', j, 1);
  for (int i : w.eblade) app('e', i, 1);
  for (size_t j = 0; j < w.weyl.size(); ++j) app('f', (int)j + 1, w.weyl[j]);
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

SuperElement SuperElement::constant(const Signature& sig, const Scalar& c) {
  SuperElement e(sig);
  e.add_term(unit_monomial(sig), c);
  return e;
}

SuperElement SuperElement::from_monomial(const Signature& sig, Monomial w, Scalar c) {
  validate_monomial(w, sig);
  SuperElement e(sig);
  e.add_term(std::move(w), c);
  return e;
}

SuperElement SuperElement::variable(const Signature& sig, char kind, int index) {
  Monomial w = unit_monomial(sig);
  auto need = [&](int hi, const char* what) {
    if (index < 1 || index > hi)
      throw std::invalid_argument(std::string("variable ") + what + std::to_string(index) +
                                  " out of range for signature");
  };
  switch (kind) {
    case 'x': need(sig.m, "x"); w.alpha[index - 1] = 1; break;
    case 'q': need(2 * sig.n, "q"); w.grs = {index}; break;
    case 'y': need(sig.n_params, "y"); w.par = {index}; break;
    case 'e': need(sig.m, "e"); w.eblade = {index}; break;
    case 'f': need(2 * sig.n, "f"); w.weyl[index - 1] = 1; break;
    default: throw std::invalid_argument("variable: unknown kind");
  }
  SuperElement e(sig);
  e.add_term(std::move(w), Scalar(1));
  return e;
}

SuperElement SuperElement::vector_variable(const Signature& sig, VectorPart part) {
  SuperElement out(sig);
  if (part != VectorPart::fermionic)
    for (int i = 1; i <= sig.m; ++i)
      out = out + variable(sig, 'x', i) * variable(sig, 'e', i);
  if (part != VectorPart::bosonic)
    for (int j = 1; j <= 2 * sig.n; ++j)
      out = out + variable(sig, 'q', j) * variable(sig, 'f', j);
  return out;
}

SuperElement SuperElement::param_vector(const Signature& sig) {
  if (sig.n_params < 2 * sig.n)
    throw std::invalid_argument("param_vector: needs n_params >= 2n");
  SuperElement out(sig);
  for (int j = 1; j <= 2 * sig.n; ++j)
    out = out + variable(sig, 'y', j) * variable(sig, 'f', j);
  return out;
}

void SuperElement::add_term(Monomial w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(std::move(w), c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperElement SuperElement::operator+(const SuperElement& o) const {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("element sum: signature mismatch");
  SuperElement out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

SuperElement SuperElement::operator-() const {
  SuperElement out(sig_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

SuperElement SuperElement::operator-(const SuperElement& o) const { return *this + (-o); }

SuperElement SuperElement::scaled(const Scalar& c) const {
  SuperElement out(sig_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_.emplace(w, k * c);
  return out;
}

SuperElement SuperElement::operator*(const SuperElement& o) const {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("element product: signature mismatch");
  SuperElement out(sig_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) {
      const Scalar cab = ca * cb;
      for (auto& [w, mult] : monomial_product(wa, wb, sig_))
        out.add_term(std::move(w), cab * Scalar::from_mpq(mpq_class(mult)));
    }
  return out;
}

SuperElement SuperElement::pow(unsigned k) const {
  SuperElement out = one(sig_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

int SuperElement::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

SuperElement SuperElement::homogeneous_part(int k) const {
  SuperElement out(sig_);
  for (const auto& [w, c] : terms_)
    if (w.degree() == k) out.terms_.emplace(w, c);
  return out;
}

int SuperElement::max_generator_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.generator_degree());
  return d;
}

SuperElement SuperElement::with_bosonic_slots(int new_m, int offset) const {
  if (offset < 0 || offset + sig_.m > new_m)
    throw std::invalid_argument("with_bosonic_slots: block does not fit");
  Signature nsig(new_m, sig_.n, sig_.n_params);
  SuperElement out(nsig);
  for (const auto& [w, c] : terms_) {
    Monomial nw = w;
    nw.alpha.assign(new_m, 0);
    for (int i = 0; i < sig_.m; ++i) nw.alpha[offset + i] = w.alpha[i];
    out.terms_.emplace(std::move(nw), c);
  }
  return out;
}

NumericSuperValue SuperElement::evaluate_bosonic(std::span<const double> vals) const {
  if ((int)vals.size() != sig_.m)
    throw std::invalid_argument("evaluate_bosonic: wrong point dimension");
  NumericSuperValue out(sig_);
  for (const auto& [w, c] : terms_) {
    double v = c.to_double();
    for (int i = 0; i < sig_.m; ++i)
      for (unsigned k = 0; k < w.alpha[i]; ++k) v *= vals[i];
    Monomial word = w;
    word.alpha.assign(sig_.m, 0);
    out.add_word(word, v);
  }
  return out;
}

std::string SuperElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    const bool neg = c.rational() < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    const std::string word = monomial_text(w);
    const std::string coeff = c.to_string_unsigned();
    if (word == "1") {
      out += coeff;
    } else if (coeff == "1") {
      out += word;
    } else {
      out += coeff + "*" + word;
    }
  }
  return out;
}

}  // namespace supercauchy
