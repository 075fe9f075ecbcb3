#include "supercauchy/random_gen.hpp"

#include <algorithm>

namespace supercauchy {

std::uint64_t RandomGen::uniform(std::uint64_t lo, std::uint64_t hi) {
  // avoid uniform_int_distribution so streams stay identical across libraries
  return lo + rng_() % (hi - lo + 1);
}

Scalar RandomGen::coefficient() {
  long v = (long)uniform(1, 6);
  if (v > 3) v = 3 - v;  // {1,2,3,-1,-2,-3}
  return Scalar(v);
}

Monomial RandomGen::word(int degree_lo, int degree_hi, bool allow_bosonic,
                         bool allow_grassmann, bool allow_generators) {
  Monomial w = unit_monomial(sig_);
  const int target = (int)uniform((std::uint64_t)degree_lo, (std::uint64_t)degree_hi);
  int remaining = target;
  // split the grading degree between bosonic exponents and a Grassmann support
  int g_max = allow_grassmann ? std::min(remaining, 2 * sig_.n) : 0;
  int g = g_max > 0 ? (int)uniform(0, (std::uint64_t)g_max) : 0;
  if (!allow_bosonic || sig_.m == 0) remaining = g = g_max;  // all degree goes fermionic
  if (g > 0) {
    std::vector<int> pool(2 * sig_.n);
    for (int j = 0; j < 2 * sig_.n; ++j) pool[j] = j + 1;
    for (int pick = 0; pick < g; ++pick) {
      const int at = (int)uniform(0, pool.size() - 1 - pick);
      std::swap(pool[at], pool[pool.size() - 1 - pick]);
    }
    w.grs.assign(pool.end() - g, pool.end());
    std::sort(w.grs.begin(), w.grs.end());
  }
  if (allow_bosonic && sig_.m > 0) {
    int b = remaining - g;
    while (b-- > 0) w.alpha[uniform(0, (std::uint64_t)sig_.m - 1)]++;
  }
  if (allow_generators) {
    int budget = (int)uniform(0, 2);  // |T| + |beta| <= 2
    while (budget-- > 0) {
      const bool weyl = sig_.n > 0 && (sig_.m == 0 || uniform(0, 1) == 1);
      if (weyl) {
        w.weyl[uniform(0, (std::uint64_t)(2 * sig_.n) - 1)]++;
      } else if (sig_.m > 0) {
        const int i = (int)uniform(1, (std::uint64_t)sig_.m);
        auto it = std::find(w.eblade.begin(), w.eblade.end(), i);
        if (it == w.eblade.end()) {
          w.eblade.insert(std::upper_bound(w.eblade.begin(), w.eblade.end(), i), i);
        }
      }
    }
  }
  return w;
}

SuperElement RandomGen::element(int max_degree, int n_terms) {
  SuperElement out(sig_);
  for (int t = 0; t < n_terms; ++t)
    out.add_term(word(0, max_degree, true, true, true), coefficient());
  return out;
}

SuperElement RandomGen::homogeneous(int k, int n_terms) {
  SuperElement out(sig_);
  for (int t = 0; t < n_terms; ++t) {
    Monomial w = word(k, k, true, true, true);
    if (w.degree() == k) out.add_term(std::move(w), coefficient());
  }
  return out;
}

SuperElement RandomGen::grassmann_homogeneous(int k, int n_terms) {
  if (k > 2 * sig_.n) return SuperElement(sig_);
  SuperElement out(sig_);
  for (int t = 0; t < n_terms; ++t) {
    Monomial w = word(k, k, false, true, true);
    if (w.degree() == k) out.add_term(std::move(w), coefficient());
  }
  return out;
}

SuperElement RandomGen::clifford_polynomial(int max_degree, int n_terms) {
  SuperElement out(sig_);
  for (int t = 0; t < n_terms; ++t) {
    Monomial w = word(0, max_degree, true, false, false);
    // e-blade only, no Weyl content
    int budget = (int)uniform(0, 2);
    while (budget-- > 0 && sig_.m > 0) {
      const int i = (int)uniform(1, (std::uint64_t)sig_.m);
      if (std::find(w.eblade.begin(), w.eblade.end(), i) == w.eblade.end())
        w.eblade.insert(std::upper_bound(w.eblade.begin(), w.eblade.end(), i), i);
    }
    out.add_term(std::move(w), coefficient());
  }
  return out;
}

}  // namespace supercauchy
