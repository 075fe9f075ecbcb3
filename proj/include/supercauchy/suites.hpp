#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "supercauchy/report.hpp"

namespace supercauchy {

// Knobs shared by all verification suites. resolution and tol equal to zero
// mean "use the check's own default" (16 / 1e-8 for the polynomial quadrature
// checks, 64 / 1e-4-inside for the singular-kernel checks, 24 for the limit
// study; exact checks ignore both).
struct SuiteOptions {
  int m = 3;
  int n = 1;
  int trials = 50;
  std::uint64_t seed = 1;
  double radius = 1.0;
  std::array<double, 3> center{0.0, 0.0, 0.0};
  bool center_set = false;  // true when the caller chose the center explicitly
  int resolution = 0;
  double tol = 0.0;
};

const std::vector<std::string>& known_checks();

// Runs one named verification suite. Unknown names throw
// std::invalid_argument; invalid parameter combinations inside a known check
// come back as a failed report with an explanatory note instead.
VerificationReport run_check(const std::string& name, const SuiteOptions& opt);

}  // namespace supercauchy
