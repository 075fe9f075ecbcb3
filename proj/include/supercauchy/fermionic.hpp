#pragma once

#include <utility>

#include "supercauchy/element.hpp"
#include "supercauchy/operators.hpp"

namespace supercauchy {

// Berezin integral: the composition d_{x`_{2n}} ... d_{x`_1}. Picks the
// coefficient of the full product x`_1...x`_{2n} (sign +1 in normal form);
// parameters y` pass through untouched. For n = 0 it is the identity.
SuperElement berezin(const SuperElement& a);

// fermionic surface and volume elements of Lambda_{2n}:
//   surface = -2 sum_{k=0}^{n-1} x`^{2k+1} / k!   ( = -2 x` exp(x`^2) )
//   volume  =  sum_{k=1}^{n}  x`^{2k}  / k!       ( = exp(x`^2) - 1 )
// volume is even and central; surface is not. n = 0 is rejected: the homology
// that drives the fermionic Stokes relation needs at least one pair.
struct FermionicElements {
  explicit FermionicElements(const Signature& sig);
  Signature sig;
  SuperElement surface;
  SuperElement volume;
};

// fermionic volume element in the parameters, exp(y`^2) - 1 (needs
// n_params >= 2n; the pairing n is taken from the signature)
SuperElement param_volume_element(const Signature& sig);

// Both sides of the purely fermionic Stokes relation for concrete f, g:
//   lhs = B[ f * dsigma_{x`} * g ]
//   rhs = B[ ( -(f d_{x`}) g + f (d_{x`} g) ) * dV(x`) ]
// where B is the Berezin integral. Returns {lhs, rhs}.
std::pair<SuperElement, SuperElement> fermionic_stokes_sides(const SuperElement& f,
                                                             const SuperElement& g);

}  // namespace supercauchy
