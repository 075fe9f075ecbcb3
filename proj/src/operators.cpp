#include "supercauchy/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "supercauchy/linalg.hpp"

namespace supercauchy {

SuperElement bosonic_partial(const SuperElement& a, int i) {
  const Signature& sig = a.signature();
  if (i < 1 || i > sig.m) throw std::invalid_argument("bosonic_partial: index out of range");
  SuperElement out(sig);
  for (const auto& [w, c] : a.terms()) {
    const unsigned e = w.alpha[i - 1];
    if (e == 0) continue;
    Monomial nw = w;
    nw.alpha[i - 1] = e - 1;
    out.add_term(std::move(nw), c * Scalar((long)e));
  }
  return out;
}

SuperElement grassmann_derivative(const SuperElement& a, int j, Side side) {
  const Signature& sig = a.signature();
  if (j < 1 || j > 2 * sig.n)
    throw std::invalid_argument("grassmann_derivative: index out of range");
  SuperElement out(sig);
  for (const auto& [w, c] : a.terms()) {
    auto it = std::find(w.grs.begin(), w.grs.end(), j);
    if (it == w.grs.end()) continue;
    Monomial nw = w;
    nw.grs.erase(nw.grs.begin() + (it - w.grs.begin()));
    size_t crossings;
    if (side == Side::left) {
      crossings = (size_t)(it - w.grs.begin());
    } else {
      crossings = (w.grs.end() - it - 1) + w.par.size();
    }
    out.add_term(std::move(nw), (crossings & 1) ? -c : c);
  }
  return out;
}

SuperElement dirac_fermionic(const SuperElement& a, Side side) {
  const Signature& sig = a.signature();
  SuperElement out(sig);
  const Scalar two(2);
  for (int j = 1; j <= sig.n; ++j) {
    const auto f_odd = SuperElement::variable(sig, 'f', 2 * j - 1);
    const auto f_even = SuperElement::variable(sig, 'f', 2 * j);
    const auto d_odd = grassmann_derivative(a, 2 * j - 1, side);
    const auto d_even = grassmann_derivative(a, 2 * j, side);
    if (side == Side::left)
      out = out + (f_even * d_odd - f_odd * d_even).scaled(two);
    else
      out = out + (d_odd * f_even - d_even * f_odd).scaled(two);
  }
  return out;
}

SuperElement dirac_bosonic(const SuperElement& a, Side side) {
  const Signature& sig = a.signature();
  SuperElement out(sig);
  for (int i = 1; i <= sig.m; ++i) {
    const auto e_i = SuperElement::variable(sig, 'e', i);
    const auto d_i = bosonic_partial(a, i);
    out = out + (side == Side::left ? e_i * d_i : d_i * e_i);
  }
  return out;
}

SuperElement dirac(const SuperElement& a, Side side) {
  if (side == Side::left) return dirac_fermionic(a, Side::left) - dirac_bosonic(a, Side::left);
  return -dirac_fermionic(a, Side::right) - dirac_bosonic(a, Side::right);
}

SuperElement laplace(const SuperElement& a) {
  const Signature& sig = a.signature();
  SuperElement out(sig);
  for (int j = 1; j <= sig.n; ++j) {
    auto t = grassmann_derivative(grassmann_derivative(a, 2 * j, Side::left), 2 * j - 1,
                                  Side::left);
    out = out + t.scaled(Scalar(4));
  }
  for (int i = 1; i <= sig.m; ++i)
    out = out - bosonic_partial(bosonic_partial(a, i), i);
  return out;
}

SuperElement euler(const SuperElement& a) {
  SuperElement out(a.signature());
  for (const auto& [w, c] : a.terms()) {
    const int k = w.degree();
    if (k != 0) out.add_term(w, c * Scalar(k));
  }
  return out;
}

namespace {

// homogeneous variable monomials of grading degree k, tensored with all
// generator words of Weyl degree <= cap
std::vector<Monomial> domain_basis(const Signature& sig, int k, int weyl_cap) {
  std::vector<Monomial> vars;  // x^alpha x`_S of degree k
  Monomial seed = unit_monomial(sig);
  // enumerate bosonic exponents then Grassmann supports
  std::vector<Monomial> stack{seed};
  for (int i = 0; i < sig.m; ++i) {
    std::vector<Monomial> next;
    for (const auto& w : stack)
      for (int e = 0; e + w.bosonic_degree() <= k; ++e) {
        Monomial nw = w;
        nw.alpha[i] = e;
        next.push_back(std::move(nw));
      }
    stack = std::move(next);
  }
  for (const auto& w : stack) {
    const int rem = k - w.bosonic_degree();
    if (rem < 0 || rem > 2 * sig.n) continue;
    // all ascending supports of size rem
    std::vector<int> idx(rem);
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == rem) {
        Monomial nw = w;
        nw.grs.assign(idx.begin(), idx.end());
        vars.push_back(std::move(nw));
        return;
      }
      for (int j = start; j <= 2 * sig.n; ++j) {
        idx[pos] = j;
        self(self, pos + 1, j + 1);
      }
    };
    rec(rec, 0, 1);
  }

  std::vector<Monomial> gens;  // e_T f^beta with |beta| <= cap
  std::vector<std::vector<int>> blades{{}};
  for (int i = 1; i <= sig.m; ++i) {
    const size_t sz = blades.size();
    for (size_t b = 0; b < sz; ++b) {
      auto t = blades[b];
      t.push_back(i);
      blades.push_back(std::move(t));
    }
  }
  std::vector<std::vector<unsigned>> betas{std::vector<unsigned>(2 * sig.n, 0)};
  for (int j = 0; j < 2 * sig.n; ++j) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& b : betas) {
      int used = 0;
      for (unsigned v : b) used += v;
      for (int e = 0; used + e <= weyl_cap; ++e) {
        auto nb = b;
        nb[j] = e;
        next.push_back(std::move(nb));
      }
    }
    betas = std::move(next);
  }
  for (const auto& t : blades)
    for (const auto& b : betas) {
      Monomial w = unit_monomial(sig);
      w.eblade = t;
      w.weyl = b;
      gens.push_back(std::move(w));
    }

  std::vector<Monomial> out;
  out.reserve(vars.size() * gens.size());
  for (const auto& v : vars)
    for (const auto& g : gens) {
      Monomial w = v;
      w.eblade = g.eblade;
      w.weyl = g.weyl;
      out.push_back(std::move(w));
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MonogenicBasis monogenic_basis(const Signature& sig, int degree, int weyl_cap, Side side) {
  if (degree < 0 || weyl_cap < 0)
    throw std::invalid_argument("monogenic_basis: negative degree or cap");
  MonogenicBasis out{sig, degree, weyl_cap, side, {}};
  const std::vector<Monomial> cols = domain_basis(sig, degree, weyl_cap);
  if (cols.empty()) return out;

  // image row indexing is discovered as we go
  std::map<Monomial, int> row_of;
  std::vector<std::map<int, mpq_class>> col_entries(cols.size());
  for (size_t c = 0; c < cols.size(); ++c) {
    const auto img = dirac(SuperElement::from_monomial(sig, cols[c], Scalar(1)), side);
    for (const auto& [w, coeff] : img.terms()) {
      auto [it, fresh] = row_of.emplace(w, (int)row_of.size());
      col_entries[c][it->second] = coeff.rational();
    }
  }

  RationalMatrix mat((int)row_of.size(), (int)cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : col_entries[c]) mat.at(r, (int)c) = v;

  for (const auto& vec : mat.nullspace()) {
    SuperElement elem(sig);
    for (size_t c = 0; c < cols.size(); ++c)
      if (vec[c] != 0) elem.add_term(cols[c], Scalar::from_mpq(vec[c]));
    out.elements.push_back(std::move(elem));
  }
  return out;
}

bool in_span(const MonogenicBasis& basis, const SuperElement& cand) {
  // column space test: rank does not grow when appending cand
  std::map<Monomial, int> row_of;
  auto intern = [&row_of](const Monomial& w) {
    auto [it, fresh] = row_of.emplace(w, (int)row_of.size());
    return it->second;
  };
  std::vector<std::map<int, mpq_class>> cols;
  for (const auto& b : basis.elements) {
    std::map<int, mpq_class> col;
    for (const auto& [w, c] : b.terms()) col[intern(w)] = c.rational();
    cols.push_back(std::move(col));
  }
  std::map<int, mpq_class> cand_col;
  for (const auto& [w, c] : cand.terms()) cand_col[intern(w)] = c.rational();

  RationalMatrix a((int)row_of.size(), (int)cols.size());
  RationalMatrix b((int)row_of.size(), (int)cols.size() + 1);
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) {
      a.at(r, (int)c) = v;
      b.at(r, (int)c) = v;
    }
  for (const auto& [r, v] : cand_col) b.at(r, (int)cols.size()) = v;
  return a.rank() == b.rank();
}

}  // namespace supercauchy
