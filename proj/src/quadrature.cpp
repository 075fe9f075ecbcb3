#include "supercauchy/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace supercauchy {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre needs n >= 1");
  std::vector<double> x(n), w(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev-based initial guess, then Newton on P_n
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * pp * pp);
  }
  return {std::move(x), std::move(w)};
}

const char* to_string(RegionKind k) {
  switch (k) {
    case RegionKind::interval: return "interval";
    case RegionKind::disk: return "disk";
    case RegionKind::ball3: return "ball3";
    case RegionKind::pointPair: return "pointPair";
    case RegionKind::circle: return "circle";
    case RegionKind::sphere2: return "sphere2";
  }
  return "?";
}

Region Region::ball(int m, std::array<double, 3> center, double radius, int resolution) {
  if (radius <= 0.0) throw std::invalid_argument("region radius must be positive");
  if (resolution < 1) throw std::invalid_argument("region resolution must be >= 1");
  Region r;
  switch (m) {
    case 1: r.kind = RegionKind::interval; break;
    case 2: r.kind = RegionKind::disk; break;
    case 3: r.kind = RegionKind::ball3; break;
    default: throw std::invalid_argument("balls exist for m in {1,2,3} only");
  }
  r.center = center;
  r.radius = radius;
  r.resolution = resolution;
  return r;
}

Region Region::boundary() const {
  Region b = *this;
  switch (kind) {
    case RegionKind::interval: b.kind = RegionKind::pointPair; break;
    case RegionKind::disk: b.kind = RegionKind::circle; break;
    case RegionKind::ball3: b.kind = RegionKind::sphere2; break;
    default: throw std::invalid_argument("boundary of a surface region");
  }
  return b;
}

int Region::ambient_m() const {
  switch (kind) {
    case RegionKind::interval:
    case RegionKind::pointPair: return 1;
    case RegionKind::disk:
    case RegionKind::circle: return 2;
    case RegionKind::ball3:
    case RegionKind::sphere2: return 3;
  }
  return 0;
}

bool Region::is_volume() const {
  return kind == RegionKind::interval || kind == RegionKind::disk || kind == RegionKind::ball3;
}

QuadratureGrid::QuadratureGrid(const Region& region, Singularity sing) : region_(region) {
  const int n = region.resolution;
  const double radius = region.radius;
  if (radius <= 0.0 || n < 1) throw std::invalid_argument("bad region parameters");
  const auto [gn, gw] = gauss_legendre(n);

  switch (region.kind) {
    case RegionKind::interval: {
      // panels of [-R, R] offsets around the center
      std::vector<std::pair<double, double>> panels;
      if (sing == Singularity::center) {
        panels = {{-radius, 0.0}, {0.0, radius}};
      } else {
        panels = {{-radius, radius}};
      }
      for (const auto& [lo, hi] : panels) {
        const double half = (hi - lo) / 2.0, mid = (lo + hi) / 2.0;
        for (int i = 0; i < n; ++i) {
          rad_n_.push_back(mid + half * gn[i]);
          rad_w_.push_back(half * gw[i]);
        }
      }
      size_ = rad_n_.size();
      return;
    }
    case RegionKind::pointPair:
      size_ = 2;
      return;
    case RegionKind::disk:
    case RegionKind::ball3: {
      // r in (0, R): nodes never touch the center pole
      for (int i = 0; i < n; ++i) {
        rad_n_.push_back(radius * (gn[i] + 1.0) / 2.0);
        rad_w_.push_back(radius * gw[i] / 2.0);
      }
      n_theta_ = static_cast<std::size_t>(2 * n);
      if (region.kind == RegionKind::ball3) {
        pol_n_ = gn;
        pol_w_ = gw;
        size_ = static_cast<std::size_t>(n) * n * n_theta_;
      } else {
        size_ = static_cast<std::size_t>(n) * n_theta_;
      }
      return;
    }
    case RegionKind::circle:
      n_theta_ = static_cast<std::size_t>(2 * n);
      size_ = n_theta_;
      return;
    case RegionKind::sphere2:
      pol_n_ = gn;
      pol_w_ = gw;
      n_theta_ = static_cast<std::size_t>(2 * n);
      size_ = static_cast<std::size_t>(n) * n_theta_;
      return;
  }
  throw std::invalid_argument("unknown region kind");
}

QuadNode QuadratureGrid::operator[](std::size_t i) const {
  QuadNode nd;
  const auto& c = region_.center;
  const double radius = region_.radius;
  const double dtheta = n_theta_ ? 2.0 * std::numbers::pi / static_cast<double>(n_theta_) : 0.0;

  switch (region_.kind) {
    case RegionKind::interval:
      nd.x = {c[0] + rad_n_[i], 0.0, 0.0};
      nd.w = rad_w_[i];
      return nd;
    case RegionKind::pointPair:
      if (i == 0) {
        nd.x = {c[0] + radius, 0.0, 0.0};
        nd.normal = {1.0, 0.0, 0.0};
      } else {
        nd.x = {c[0] - radius, 0.0, 0.0};
        nd.normal = {-1.0, 0.0, 0.0};
      }
      nd.w = 1.0;
      return nd;
    case RegionKind::disk: {
      const std::size_t ir = i / n_theta_, ith = i % n_theta_;
      const double r = rad_n_[ir];
      const double th = (static_cast<double>(ith) + 0.5) * dtheta;
      nd.x = {c[0] + r * std::cos(th), c[1] + r * std::sin(th), 0.0};
      nd.w = rad_w_[ir] * r * dtheta;
      return nd;
    }
    case RegionKind::ball3: {
      const std::size_t per_r = pol_n_.size() * n_theta_;
      const std::size_t ir = i / per_r;
      const std::size_t it = (i % per_r) / n_theta_, ith = i % n_theta_;
      const double r = rad_n_[ir], t = pol_n_[it];
      const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      const double th = (static_cast<double>(ith) + 0.5) * dtheta;
      nd.x = {c[0] + r * s * std::cos(th), c[1] + r * s * std::sin(th), c[2] + r * t};
      nd.w = rad_w_[ir] * r * r * pol_w_[it] * dtheta;
      return nd;
    }
    case RegionKind::circle: {
      const double th = (static_cast<double>(i) + 0.5) * dtheta;
      nd.normal = {std::cos(th), std::sin(th), 0.0};
      nd.x = {c[0] + radius * nd.normal[0], c[1] + radius * nd.normal[1], 0.0};
      nd.w = radius * dtheta;
      return nd;
    }
    case RegionKind::sphere2: {
      const std::size_t it = i / n_theta_, ith = i % n_theta_;
      const double t = pol_n_[it];
      const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
      const double th = (static_cast<double>(ith) + 0.5) * dtheta;
      nd.normal = {s * std::cos(th), s * std::sin(th), t};
      nd.x = {c[0] + radius * nd.normal[0], c[1] + radius * nd.normal[1],
              c[2] + radius * nd.normal[2]};
      nd.w = radius * radius * pol_w_[it] * dtheta;
      return nd;
    }
  }
  throw std::logic_error("unknown region kind");
}

NumericSuperValue boundary_integral(const SuperElement& f, const SuperElement& g,
                                    const Region& surf) {
  if (surf.is_volume()) throw std::invalid_argument("boundary_integral needs a surface region");
  const Signature sig = f.signature();
  const int m = surf.ambient_m();
  if (sig.m != m) throw std::invalid_argument("boundary_integral: signature/region mismatch");
  return surface_integral(sig, surf,
                          [&](std::span<const double> x, std::span<const double> nrm) {
                            NumericSuperValue nb(sig);
                            for (int i = 0; i < m; ++i) {
                              Monomial w = unit_monomial(sig);
                              w.eblade = {i + 1};
                              nb.add_word(w, nrm[i]);
                            }
                            return f.evaluate_bosonic(x) * nb * g.evaluate_bosonic(x);
                          });
}

}  // namespace supercauchy
