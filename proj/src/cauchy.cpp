#include "supercauchy/cauchy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "supercauchy/compiled.hpp"
#include "supercauchy/parallel.hpp"

namespace supercauchy {

NumericSuperValue substitute_to_params(const SuperElement& g, std::span<const double> y) {
  const Signature& sig = g.signature();
  if (static_cast<int>(y.size()) != sig.m)
    throw std::invalid_argument("substitute_to_params: wrong point dimension");
  if (sig.n_params < 2 * sig.n)
    throw std::invalid_argument("substitute_to_params needs n_params >= 2n");
  NumericSuperValue out(sig);
  for (const auto& [w, c] : g.terms()) {
    if (!w.par.empty())
      throw std::invalid_argument("substitute_to_params: element already carries parameters");
    double v = c.to_double();
    for (int i = 0; i < sig.m; ++i) {
      for (unsigned k = 0; k < w.alpha[static_cast<std::size_t>(i)]; ++k)
        v *= y[static_cast<std::size_t>(i)];
    }
    Monomial sub = w;
    for (auto& a : sub.alpha) a = 0;
    sub.par = sub.grs;  // x`_S in place becomes y`_S: same slot order, no crossings
    sub.grs.clear();
    out.add_word(sub, v);
  }
  return out;
}

PairingLeft PairingLeft::element(const SuperElement& f) {
  PairingLeft p(f.signature());
  const int m = p.base_.m;
  const SuperElement wide = f.with_bosonic_slots(2 * m, 0);
  if (!wide.is_zero()) p.parts_.emplace(0, wide);
  return p;
}

PairingLeft PairingLeft::kernel(const RadialSuperFunction& f, std::array<double, 3> pole) {
  PairingLeft p(f.signature());
  const int m = p.base_.m;
  for (const auto& [pw, e] : f.parts()) p.parts_.emplace(pw, e.with_bosonic_slots(2 * m, m));
  p.pole_ = pole;
  return p;
}

namespace {

// per radial power, one compiled integrand; boundary sweeps carry one
// compiled element per normal component
struct CompiledPart {
  int p = 0;
  CompiledElement body;                 // volume-style integrand
  std::vector<CompiledElement> by_normal;  // boundary integrand, index = e_i
};

// exact Berezin precompilation of B[f_p * mid * g] for every radial part
std::vector<CompiledPart> compile_parts(const PairingLeft& f, const SuperElement& mid_times_g,
                                        WordTable& table) {
  std::vector<CompiledPart> parts;
  for (const auto& [p, fp] : f.parts()) {
    CompiledPart cp;
    cp.p = p;
    cp.body = CompiledElement(berezin(fp * mid_times_g), table);
    parts.push_back(std::move(cp));
  }
  return parts;
}

std::vector<double> sweep(const QuadratureGrid& grid, const PairingLeft& f,
                          const std::vector<CompiledPart>& parts, std::size_t table_size,
                          bool boundary, int m, double orient) {
  return chunked_reduce<std::vector<double>>(
      grid.size(), [&] { return std::vector<double>(table_size, 0.0); },
      [&](std::vector<double>& acc, std::size_t i) {
        const QuadNode nd = grid[i];
        std::array<double, 6> vals{};
        double r2 = 0.0;
        for (int k = 0; k < m; ++k) {
          vals[static_cast<std::size_t>(k)] = nd.x[static_cast<std::size_t>(k)];
          const double u = nd.x[static_cast<std::size_t>(k)] - f.pole()[static_cast<std::size_t>(k)];
          vals[static_cast<std::size_t>(m + k)] = u;
          r2 += u * u;
        }
        const double r = std::sqrt(r2);
        for (const CompiledPart& cp : parts) {
          const double scale = nd.w * orient * std::pow(r, cp.p);
          if (boundary) {
            for (int k = 0; k < m; ++k) {
              const double nk = nd.normal[static_cast<std::size_t>(k)];
              if (nk != 0.0)
                cp.by_normal[static_cast<std::size_t>(k)].eval_into(
                    std::span<const double>(vals.data(), 2 * static_cast<std::size_t>(m)),
                    scale * nk, acc);
            }
          } else {
            cp.body.eval_into(
                std::span<const double>(vals.data(), 2 * static_cast<std::size_t>(m)), scale, acc);
          }
        }
      },
      [](std::vector<double>& tot, const std::vector<double>& part) {
        for (std::size_t k = 0; k < tot.size(); ++k) tot[k] += part[k];
      });
}

void require_compatible(const PairingLeft& f, const SuperElement& g, const Region& volume) {
  if (g.signature() != f.base_signature())
    throw std::invalid_argument("pairing factors disagree on signature");
  if (!volume.is_volume()) throw std::invalid_argument("pairing needs a volume region");
  if (volume.ambient_m() != f.base_signature().m)
    throw std::invalid_argument("pairing region/signature dimension mismatch");
  if (f.base_signature().n < 1)
    throw std::invalid_argument("super pairing needs n >= 1 (use the classical route at n = 0)");
}

}  // namespace

SuperBoundaryIntegral super_boundary_integral(const PairingLeft& f, const SuperElement& g,
                                              const Region& volume, Singularity sing) {
  require_compatible(f, g, volume);
  const Signature base = f.base_signature();
  const int m = base.m;
  const Signature ext{2 * m, base.n, base.n_params};
  const SuperElement g_ext = g.with_bosonic_slots(2 * m, 0);
  const FermionicElements ferm(ext);

  WordTable table(base);
  // fermionic piece: B[f dsigma_x` g] swept over the volume grid
  std::vector<CompiledPart> ferm_parts = compile_parts(f, ferm.surface * g_ext, table);
  // bosonic piece: B[f dV(x`) e_k g] per normal component over the boundary
  std::vector<CompiledPart> bos_parts;
  for (const auto& [p, fp] : f.parts()) {
    CompiledPart cp;
    cp.p = p;
    for (int k = 1; k <= m; ++k) {
      const SuperElement ek = SuperElement::variable(ext, 'e', k);
      cp.by_normal.emplace_back(berezin(fp * ferm.volume * ek * g_ext), table);
    }
    bos_parts.push_back(std::move(cp));
  }

  const QuadratureGrid vol_grid(volume, sing);
  const QuadratureGrid surf_grid(volume.boundary());
  const double orient = volume.orientation < 0 ? -1.0 : 1.0;

  SuperBoundaryIntegral out;
  out.fermionic_boundary =
      table.to_value(sweep(vol_grid, f, ferm_parts, table.size(), false, m, 1.0));
  out.bosonic_boundary =
      table.to_value(sweep(surf_grid, f, bos_parts, table.size(), true, m, orient));
  return out;
}

NumericSuperValue super_volume_integral(const PairingLeft& f, const SuperElement& h,
                                        const Region& volume, Singularity sing) {
  require_compatible(f, h, volume);
  const Signature base = f.base_signature();
  const int m = base.m;
  const Signature ext{2 * m, base.n, base.n_params};
  const FermionicElements ferm(ext);

  WordTable table(base);
  std::vector<CompiledPart> parts =
      compile_parts(f, h.with_bosonic_slots(2 * m, 0) * ferm.volume, table);
  const QuadratureGrid grid(volume, sing);
  return table.to_value(sweep(grid, f, parts, table.size(), false, m, 1.0));
}

}  // namespace supercauchy
