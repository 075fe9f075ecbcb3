#include "supercauchy/fermionic.hpp"

#include <stdexcept>

namespace supercauchy {

SuperElement berezin(const SuperElement& a) {
  const Signature& sig = a.signature();
  SuperElement out(sig);
  const int full = 2 * sig.n;
  for (const auto& [w, c] : a.terms()) {
    if ((int)w.grs.size() != full) continue;
    Monomial nw = w;
    nw.grs.clear();
    out.add_term(std::move(nw), c);
  }
  return out;
}

namespace {

// x`^k / floor(k/2)! accumulated as required by the two elements
SuperElement fermionic_vector_power(const Signature& sig, unsigned k) {
  return SuperElement::vector_variable(sig, VectorPart::fermionic).pow(k);
}

}  // namespace

FermionicElements::FermionicElements(const Signature& s) : sig(s), surface(s), volume(s) {
  if (sig.n < 1)
    throw std::invalid_argument("fermionic elements: need n >= 1");
  Scalar kfac(1);
  for (int k = 0; k < sig.n; ++k) {
    if (k > 0) kfac = kfac * Scalar(k);
    surface = surface + fermionic_vector_power(sig, 2 * k + 1).scaled(kfac.inverse());
  }
  surface = surface.scaled(Scalar(-2));
  kfac = Scalar(1);
  for (int k = 1; k <= sig.n; ++k) {
    kfac = kfac * Scalar(k);
    volume = volume + fermionic_vector_power(sig, 2 * k).scaled(kfac.inverse());
  }
}

SuperElement param_volume_element(const Signature& sig) {
  const SuperElement y = SuperElement::param_vector(sig);
  SuperElement out(sig);
  Scalar kfac(1);
  for (int k = 1; k <= sig.n; ++k) {
    kfac = kfac * Scalar(k);
    out = out + y.pow(2 * k).scaled(kfac.inverse());
  }
  return out;
}

std::pair<SuperElement, SuperElement> fermionic_stokes_sides(const SuperElement& f,
                                                             const SuperElement& g) {
  const FermionicElements el(f.signature());
  const SuperElement lhs = berezin(f * el.surface * g);
  const SuperElement integrand =
      -(dirac_fermionic(f, Side::right) * g) + f * dirac_fermionic(g, Side::left);
  const SuperElement rhs = berezin(integrand * el.volume);
  return {lhs, rhs};
}

}  // namespace supercauchy
