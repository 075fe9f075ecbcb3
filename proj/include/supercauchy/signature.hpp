#pragma once

#include <stdexcept>

namespace supercauchy {

// Dimension signature of the algebra R[x_1..x_m] (x) Lambda_{2n} (x) C_{m,2n},
// optionally extended by n_params anticommuting parameter variables y`_1..y`_k
// that no derivative or Berezin integral ever touches.
struct Signature {
  int m = 0;         // commuting variables x_i / Clifford generators e_i
  int n = 0;         // 2n anticommuting variables x`_j / Weyl generators f_j
  int n_params = 0;  // spectator Grassmann parameters y`_j

  Signature() = default;
  Signature(int m_, int n_, int n_params_ = 0) : m(m_), n(n_), n_params(n_params_) {
    if (m < 0 || n < 0 || n_params < 0)
      throw std::invalid_argument("signature: negative dimension");
  }

  // super-dimension M = m - 2n, the eigenvalue of the Dirac/vector pairing
  int super_dim() const { return m - 2 * n; }

  bool operator==(const Signature&) const = default;
};

}  // namespace supercauchy
