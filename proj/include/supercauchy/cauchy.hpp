#pragma once

#include <array>
#include <span>

#include "supercauchy/element.hpp"
#include "supercauchy/fermionic.hpp"
#include "supercauchy/kernels.hpp"
#include "supercauchy/numeric_value.hpp"
#include "supercauchy/quadrature.hpp"

namespace supercauchy {

// numeric substitution x_i -> y_i and rename x`_j -> y`_j (order preserving,
// no sign); the element must be free of parameter content already
NumericSuperValue substitute_to_params(const SuperElement& g, std::span<const double> y);

// Left factor of a mixed integral: either a plain element (bosonic content
// read at the point x itself) or a radial kernel whose bosonic content is
// read at u = x - pole, with the radial factor r = |u|.
class PairingLeft {
 public:
  static PairingLeft element(const SuperElement& f);
  static PairingLeft kernel(const RadialSuperFunction& f, std::array<double, 3> pole);

  const Signature& base_signature() const { return base_; }
  // exact parts in the widened signature (2m slots: x block then u block)
  const std::map<int, SuperElement>& parts() const { return parts_; }
  const std::array<double, 3>& pole() const { return pole_; }

 private:
  explicit PairingLeft(Signature base) : base_(base) {}
  Signature base_;
  std::map<int, SuperElement> parts_;
  std::array<double, 3> pole_{0.0, 0.0, 0.0};
};

// The super boundary integral of f dsigma_x g over a ball region, split into
// its two pieces:
//   fermionic_boundary = int_Sigma  B[ f dsigma_x` g ](x) dV(x)
//   bosonic_boundary   = int_dSigma B[ f dV(x`) nb g ](x) dS(x)
//   value              = fermionic_boundary - bosonic_boundary
// B is the Berezin integral and nb the Clifford unit normal. The fermionic
// piece lives on the volume grid (the x`-boundary is homological, not a point
// set); the bosonic piece lives on the boundary grid.
struct SuperBoundaryIntegral {
  NumericSuperValue fermionic_boundary;
  NumericSuperValue bosonic_boundary;
  NumericSuperValue value() const { return fermionic_boundary - bosonic_boundary; }
};

// Both integrals are evaluated by one exact Berezin precompilation per radial
// part followed by a flat compiled sweep over the grid, so the quadrature is
// exact whenever the integrand reduces to sum_p r^p * polynomial. Requires
// n >= 1 (the fermionic measures need at least one Grassmann pair) and a
// volume region whose ambient dimension matches the signature.
SuperBoundaryIntegral super_boundary_integral(const PairingLeft& f, const SuperElement& g,
                                              const Region& volume,
                                              Singularity sing = Singularity::none);

// int_Sigma B[ f h dV(x`) ](x) dV(x): the right-hand side of the super Stokes
// relation when h = (f' d_x) g + f' (d_x g), and the volume correction of the
// Cauchy-Pompeiu formula when h = d_x g
NumericSuperValue super_volume_integral(const PairingLeft& f, const SuperElement& h,
                                        const Region& volume,
                                        Singularity sing = Singularity::none);

}  // namespace supercauchy
