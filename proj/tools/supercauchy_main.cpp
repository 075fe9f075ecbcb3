// Command-line front end: verification suites, expression evaluation, kernel
// and monogenic-basis dumps. Output of `verify` is one JSON line per check.

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supercauchy/kernels.hpp"
#include "supercauchy/operators.hpp"
#include "supercauchy/parser.hpp"
#include "supercauchy/suites.hpp"

namespace {

bool parse_center(const std::string& text, std::array<double, 3>& out) {
  std::stringstream ss(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 3) return false;
    try {
      out[i++] = std::stod(item);
    } catch (...) {
      return false;
    }
  }
  return i > 0;
}

void print_known_checks(std::ostream& os) {
  os << "known checks:";
  for (const auto& name : supercauchy::known_checks()) os << " " << name;
  os << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace supercauchy;

  CLI::App app{"exact Clifford analysis engine over commuting and anticommuting variables"};
  app.require_subcommand(1);

  SuiteOptions opt;
  std::string center_text;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--m", opt.m, "number of commuting dimensions");
    cmd->add_option("--n", opt.n, "number of anticommuting pairs");
    cmd->add_option("--trials", opt.trials, "random samples per parameter point");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--radius", opt.radius, "ball radius");
    cmd->add_option("--center", center_text, "ball center, comma separated");
    cmd->add_option("--resolution", opt.resolution, "quadrature resolution (0 = check default)");
    cmd->add_option("--tol", opt.tol, "tolerance override (0 = check default)");
  };

  // verify
  auto* verify = app.add_subcommand("verify", "run verification checks, one JSON line each");
  std::vector<std::string> check_names;
  verify->add_option("checks", check_names, "check names (or 'all')")->required();
  add_common(verify);
  verify->add_option("--out", out_path, "write the JSON lines to this file as well");

  // eval
  auto* eval = app.add_subcommand("eval", "parse an expression and print its normal form");
  std::string expr_text;
  eval->add_option("expr", expr_text, "expression, e.g. \"Dl(X*X) - 2*X\"")->required();
  eval->add_option("--m", opt.m, "number of commuting dimensions");
  eval->add_option("--n", opt.n, "number of anticommuting pairs");
  int n_params = -1;
  eval->add_option("--params", n_params, "number of parameter variables (default 2n)");

  // kernel
  auto* kernel = app.add_subcommand("kernel", "print a fundamental solution");
  int kernel_j = 2;
  bool shifted = false;
  kernel->add_option("--m", opt.m, "number of commuting dimensions (odd)");
  kernel->add_option("--n", opt.n, "number of anticommuting pairs");
  kernel->add_option("--j", kernel_j, "which solution: 1 or 2")->check(CLI::Range(1, 2));
  kernel->add_flag("--shifted", shifted, "use the parameter-shifted fermionic vector");

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "print a monogenic basis, one element per line");
  int degree = 1;
  int cap = 2;
  std::string side_text = "left";
  basis_cmd->add_option("--m", opt.m, "number of commuting dimensions");
  basis_cmd->add_option("--n", opt.n, "number of anticommuting pairs");
  basis_cmd->add_option("--degree", degree, "homogeneity degree");
  basis_cmd->add_option("--cap", cap, "generator weight cap");
  basis_cmd->add_option("--side", side_text, "left or right")
      ->check(CLI::IsMember({"left", "right"}));

  CLI11_PARSE(app, argc, argv);

  if (!center_text.empty()) {
    if (!parse_center(center_text, opt.center)) {
      std::cerr << "bad --center value: " << center_text << "\n";
      return 2;
    }
    opt.center_set = true;
  }

  try {
    if (*verify) {
      std::vector<std::string> names = check_names;
      if (names.size() == 1 && names[0] == "all") names = known_checks();
      const auto& known = known_checks();
      for (const auto& name : names) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          std::cerr << "unknown check: " << name << "\n";
          print_known_checks(std::cerr);
          std::cerr << verify->help() << "\n";
          return 2;
        }
      }
      std::ofstream out_file;
      if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
          std::cerr << "cannot open " << out_path << "\n";
          return 2;
        }
      }
      bool all_ok = true;
      for (const auto& name : names) {
        const VerificationReport rep = run_check(name, opt);
        const std::string line = rep.to_json();
        std::cout << line << "\n";
        if (out_file) out_file << line << "\n";
        all_ok = all_ok && rep.ok();
      }
      return all_ok ? 0 : 1;
    }

    if (*eval) {
      const Signature sig{opt.m, opt.n, n_params >= 0 ? n_params : 2 * opt.n};
      std::cout << parse_element(expr_text, sig).to_string() << "\n";
      return 0;
    }

    if (*kernel) {
      const Signature sig{opt.m, opt.n, shifted ? 2 * opt.n : 0};
      std::cout << nu_super(sig, kernel_j, shifted).to_string() << "\n";
      return 0;
    }

    if (*basis_cmd) {
      const Signature sig{opt.m, opt.n, 0};
      const Side side = side_text == "right" ? Side::right : Side::left;
      const MonogenicBasis basis = monogenic_basis(sig, degree, cap, side);
      for (const auto& e : basis.elements) std::cout << e.to_string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
