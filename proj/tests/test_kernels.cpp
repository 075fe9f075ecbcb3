#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "supercauchy/kernels.hpp"
#include "supercauchy/suites.hpp"

using namespace supercauchy;
using sct::C;
using sct::V;

namespace {
bool same(const RadialSuperFunction& a, const RadialSuperFunction& b) {
  return (a - b).is_zero();
}

// a_1 = 1/((m-2) sigma_{m-1}),  a_l = -a_{l-1} / ((2l-m)(2l-2))
std::vector<Scalar> coefficients(int m, int count) {
  std::vector<Scalar> a;
  a.push_back((Scalar(m - 2) * sphere_area(m)).inverse());
  for (int l = 2; l <= count; ++l)
    a.push_back(-a.back() * Scalar((2 * l - m) * (2 * l - 2)).inverse());
  return a;
}
}  // namespace

TEST_CASE("sphere areas") {
  CHECK(sphere_area(1) == Scalar(2));
  CHECK(sphere_area(3) == Scalar(4, 1, 1));
  CHECK(sphere_area(5) == Scalar(8, 3, 2));
  CHECK_THROWS_AS(sphere_area(2), std::invalid_argument);
}

TEST_CASE("fundamental solutions, closed forms") {
  const Signature s1{1, 0, 0};
  CHECK(same(nu_bosonic(1, 2), RadialSuperFunction::radial_power(s1, 1, Scalar(-1, 2))));
  {
    RadialSuperFunction want(s1);
    want.add_part(-1, (V(s1, 'x', 1) * V(s1, 'e', 1)).scaled(Scalar(1, 2)));
    CHECK(same(nu_bosonic(1, 1), want));  // (1/2) sign(u) e1
  }

  const Signature s3{3, 0, 0};
  CHECK(same(nu_bosonic(3, 2), RadialSuperFunction::radial_power(s3, -1, Scalar(1, 4, -1))));
  {
    RadialSuperFunction want(s3);
    want.add_part(-3, SuperElement::vector_variable(s3, VectorPart::bosonic)
                          .scaled(Scalar(1, 4, -1)));
    CHECK(same(nu_bosonic(3, 1), want));
  }

  // odd members against the closed form -a_{k+1} (2k+2-m) r^{2k-m} u
  for (int m : {1, 3, 5}) {
    const Signature s{m, 0, 0};
    const auto a = coefficients(m, 4);
    const auto u = SuperElement::vector_variable(s, VectorPart::bosonic);
    for (int k = 0; k <= 2; ++k) {
      RadialSuperFunction want(s);
      want.add_part(2 * k - m, u.scaled(-a[static_cast<std::size_t>(k)] * Scalar(2 * k + 2 - m)));
      CHECK(same(nu_bosonic(m, 2 * k + 1), want));
    }
  }
  CHECK_THROWS_AS(nu_bosonic(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(nu_bosonic(3, 0), std::invalid_argument);
}

TEST_CASE("laplace chain and dirac consistency") {
  for (int m : {1, 3, 5}) {
    for (int l = 2; l <= 3; ++l) {
      CHECK(same(nu_bosonic(m, 2 * l).laplace(), nu_bosonic(m, 2 * l - 2)));
    }
  }
  const RadialSuperFunction nu4 = nu_bosonic(3, 4);
  CHECK(same(nu4.dirac(Side::left).dirac(Side::left), nu4.laplace()));
}

TEST_CASE("normal form of radial representations") {
  const Signature s3{3, 0, 0};
  const auto x = [&](int i) { return V(s3, 'x', i); };
  // |u|^2 written out coordinate-wise collapses to r^2
  CHECK(same(RadialSuperFunction::from_element(x(1) * x(1) + x(2) * x(2) + x(3) * x(3)),
             RadialSuperFunction::radial_power(s3, 2, Scalar(1))));
  const Signature s1{1, 0, 0};
  CHECK(same(RadialSuperFunction::from_element(V(s1, 'x', 1) * V(s1, 'x', 1)),
             RadialSuperFunction::radial_power(s1, 2, Scalar(1))));

  // reduced form never keeps the last slot above exponent one
  const auto reduced = RadialSuperFunction::from_element(x(3) * x(3) * x(3) * x(3));
  for (const auto& [p, e] : reduced.parts()) {
    for (const auto& [w, c] : e.terms()) CHECK(w.alpha[2] <= 1);
  }
  // and still evaluates to the original function
  const std::vector<double> u{0.3, -0.7, 0.4};
  const double direct = std::pow(0.4, 4);
  CHECK(sct::rel_to(reduced.evaluate(u), sct::num_scalar(s3, direct)) <= 1e-14);
}

TEST_CASE("radial derivative rule") {
  const Signature s3{3, 0, 0};
  CHECK(same(RadialSuperFunction::from_element(V(s3, 'x', 1)).partial(1),
             RadialSuperFunction::from_element(SuperElement::one(s3))));
  RadialSuperFunction want(s3);
  want.add_part(0, V(s3, 'x', 1).scaled(Scalar(2)));
  CHECK(same(RadialSuperFunction::radial_power(s3, 2, Scalar(1)).partial(1), want));
}

TEST_CASE("numeric evaluation of kernels") {
  const RadialSuperFunction nu2 = nu_bosonic(3, 2);
  const Signature s3{3, 0, 0};
  const double inv4pi = 1.0 / (4.0 * std::acos(-1.0));
  CHECK(sct::rel_to(nu2.evaluate(std::vector<double>{1.0, 0.0, 0.0}),
                    sct::num_scalar(s3, inv4pi)) <= 1e-15);
  CHECK(sct::rel_to(nu2.evaluate(std::vector<double>{0.3, 0.4, 0.0}),
                    sct::num_scalar(s3, inv4pi / 0.5)) <= 1e-14);
  CHECK_THROWS_AS(nu2.evaluate(std::vector<double>{0.0, 0.0, 0.0}), std::domain_error);
  CHECK(nu2.to_string().find("r^-1") != std::string::npos);
}

TEST_CASE("super solutions at one pair") {
  // m = 3, n = 1: nu_2 = nu_2^(0) q1 q2 + 4 nu_4^(0), hand-expanded
  const Signature s{3, 1, 0};
  RadialSuperFunction want(s);
  want.add_part(-1, (V(s, 'q', 1) * V(s, 'q', 2)).scaled(Scalar(1, 4, -1)));
  want.add_part(1, C(s, -1, 2, -1));  // 4 * a_2 = 4 * (-1/(8 pi))
  CHECK(same(nu_super(s, 2), want));
  CHECK_THROWS_AS(nu_super(Signature{2, 1, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(nu_super(s, 3), std::invalid_argument);
}

TEST_CASE("kernel invariants via runner") {
  for (int m : {1, 3}) {
    for (int n : {0, 1, 2}) {
      SuiteOptions o;
      o.m = m;
      o.n = n;
      const VerificationReport rep = run_check("kernel-monogenic", o);
      CAPTURE(m);
      CAPTURE(n);
      CAPTURE(rep.note);
      CHECK(rep.status == CheckStatus::pass);
      CHECK(rep.max_rel_error == 0.0);
    }
  }
}
