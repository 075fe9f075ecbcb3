#pragma once

#include <span>
#include <vector>

#include "supercauchy/element.hpp"
#include "supercauchy/numeric_value.hpp"

namespace sct {

inline supercauchy::SuperElement V(const supercauchy::Signature& sig, char kind, int index) {
  return supercauchy::SuperElement::variable(sig, kind, index);
}

inline supercauchy::SuperElement C(const supercauchy::Signature& sig, long num, long den = 1,
                                   int pi_pow = 0) {
  return supercauchy::SuperElement::constant(sig, supercauchy::Scalar(num, den, pi_pow));
}

inline double rel_to(const supercauchy::NumericSuperValue& got,
                     const supercauchy::NumericSuperValue& want) {
  return supercauchy::NumericSuperValue::max_rel_diff(got, want);
}

inline supercauchy::NumericSuperValue num_scalar(const supercauchy::Signature& sig, double v) {
  return supercauchy::NumericSuperValue::scalar(sig, v);
}

inline supercauchy::NumericSuperValue eval_at(const supercauchy::SuperElement& e,
                                              std::vector<double> x) {
  return e.evaluate_bosonic(std::span<const double>(x.data(), x.size()));
}

}  // namespace sct
