#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supercauchy/element.hpp"
#include "supercauchy/numeric_value.hpp"
#include "supercauchy/parallel.hpp"

namespace supercauchy {

// Gauss-Legendre rule on [-1, 1]: nodes and weights, exact for polynomials of
// degree <= 2N-1. Computed by Newton iteration on the three-term recurrence.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

enum class RegionKind { interval, disk, ball3, pointPair, circle, sphere2 };
enum class Singularity { none, center };

const char* to_string(RegionKind k);

// A ball of R^m (m = 1, 2, 3) or its boundary sphere, centered anywhere, with
// a resolution knob N. Volume grids are products of Gauss-Legendre rules in
// the radial/polar directions and a uniform midpoint rule in the azimuth, so
// they integrate polynomials exactly once N exceeds half the degree. Radial
// nodes are strictly interior, which keeps grids usable for integrands with a
// pole at the center (Singularity::center additionally splits the interval
// case into two panels meeting at the center).
struct Region {
  RegionKind kind = RegionKind::interval;
  std::array<double, 3> center{0.0, 0.0, 0.0};
  double radius = 1.0;
  int resolution = 16;
  int orientation = 1;  // +1 outward normals, -1 flips boundary integrals

  static Region ball(int m, std::array<double, 3> center, double radius, int resolution);
  Region boundary() const;  // interval -> pointPair, disk -> circle, ball3 -> sphere2
  int ambient_m() const;
  bool is_volume() const;
};

struct QuadNode {
  std::array<double, 3> x{};
  double w = 0.0;
  std::array<double, 3> normal{};  // outward unit normal; surface kinds only
};

// Precomputed 1D rules for one region; nodes are decoded on demand, so the
// grid is cheap to build and safe to read from many threads.
class QuadratureGrid {
 public:
  explicit QuadratureGrid(const Region& region, Singularity sing = Singularity::none);

  const Region& region() const { return region_; }
  std::size_t size() const { return size_; }
  QuadNode operator[](std::size_t i) const;

 private:
  Region region_;
  std::size_t size_ = 0;
  std::vector<double> rad_n_, rad_w_;  // radial nodes/weights (already mapped)
  std::vector<double> pol_n_, pol_w_;  // polar t = cos(phi) rule on [-1,1]
  std::size_t n_theta_ = 0;
};

// sum_i w_i f(x_i) with f returning a NumericSuperValue; deterministic
// chunked parallel accumulation
template <class F>
NumericSuperValue volume_integral(const Signature& sig, const Region& region, Singularity sing,
                                  F f) {
  const QuadratureGrid grid(region, sing);
  const int m = region.ambient_m();
  return chunked_reduce<NumericSuperValue>(
      grid.size(), [&] { return NumericSuperValue(sig); },
      [&](NumericSuperValue& acc, std::size_t i) {
        const QuadNode nd = grid[i];
        acc.add_scaled(f(std::span<const double>(nd.x.data(), m)), nd.w);
      },
      [](NumericSuperValue& tot, const NumericSuperValue& part) { tot.add_scaled(part, 1.0); });
}

// sum_i w_i f(x_i, n_i) over a surface grid, normals included
template <class F>
NumericSuperValue surface_integral(const Signature& sig, const Region& surf, F f) {
  const QuadratureGrid grid(surf);
  const int m = surf.ambient_m();
  const double sign = surf.orientation < 0 ? -1.0 : 1.0;
  return chunked_reduce<NumericSuperValue>(
      grid.size(), [&] { return NumericSuperValue(sig); },
      [&](NumericSuperValue& acc, std::size_t i) {
        const QuadNode nd = grid[i];
        acc.add_scaled(f(std::span<const double>(nd.x.data(), m),
                         std::span<const double>(nd.normal.data(), m)),
                       sign * nd.w);
      },
      [](NumericSuperValue& tot, const NumericSuperValue& part) { tot.add_scaled(part, 1.0); });
}

// integral over the surface of f(x) nb g(x), with nb = sum_i n_i e_i the
// Clifford unit normal; this is the measure-times-normal reading of the
// boundary term in the Stokes relations
NumericSuperValue boundary_integral(const SuperElement& f, const SuperElement& g,
                                    const Region& surf);

}  // namespace supercauchy
