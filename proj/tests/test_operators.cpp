#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "supercauchy/operators.hpp"
#include "supercauchy/random_gen.hpp"
#include "supercauchy/suites.hpp"

using namespace supercauchy;
using sct::C;
using sct::V;

TEST_CASE("grassmann derivatives") {
  const Signature s{0, 1, 0};
  const auto q1 = V(s, 'q', 1), q2 = V(s, 'q', 2);
  CHECK(grassmann_derivative(q1 * q2, 1) == q2);
  CHECK(grassmann_derivative(q1 * q2, 2) == -q1);
  CHECK(grassmann_derivative(q1, 1) == SuperElement::one(s));
  CHECK(grassmann_derivative(q2, 1).is_zero());

  // right derivative = (-1)^{i+1} left derivative on degree-i homogeneous input
  const Signature s2{0, 2, 0};
  RandomGen rnd(s2, 7);
  for (int i = 1; i <= 3; ++i) {
    for (int t = 0; t < 20; ++t) {
      const SuperElement a = rnd.grassmann_homogeneous(i, 4);
      for (int j = 1; j <= 4; ++j) {
        const SuperElement left = grassmann_derivative(a, j, Side::left);
        const SuperElement right = grassmann_derivative(a, j, Side::right);
        CHECK(right == left.scaled(Scalar(i % 2 ? 1 : -1)));
      }
    }
  }
}

TEST_CASE("bosonic partials") {
  const Signature s{2, 0, 0};
  const auto x1 = V(s, 'x', 1), x2 = V(s, 'x', 2);
  CHECK(bosonic_partial(x1 * x1 * x2, 1) == (x1 * x2).scaled(Scalar(2)));
  CHECK(bosonic_partial(x1 * x1 * x2, 2) == x1 * x1);
  CHECK(bosonic_partial(SuperElement::one(s), 1).is_zero());
}

TEST_CASE("dirac of the vector variable is the super dimension") {
  for (auto [m, n] : {std::pair{3, 1}, {2, 1}, {1, 2}, {4, 0}}) {
    const Signature s{m, n, 0};
    const auto x = SuperElement::vector_variable(s, VectorPart::full);
    CHECK(dirac(x, Side::left) == C(s, s.super_dim()));
  }
}

TEST_CASE("dirac examples") {
  for (auto [m, n] : {std::pair{3, 1}, {2, 2}}) {
    const Signature s{m, n, 0};
    const auto x = SuperElement::vector_variable(s, VectorPart::full);
    CHECK(dirac(x.pow(2), Side::left) == x.scaled(Scalar(2)));
  }
  const Signature s21{2, 1, 0};
  const auto g = V(s21, 'x', 1) * V(s21, 'e', 1) - V(s21, 'x', 2) * V(s21, 'e', 2);
  CHECK(dirac(g, Side::left).is_zero());
  CHECK(dirac(g, Side::right).is_zero());
}

TEST_CASE("laplace") {
  const Signature s10{1, 0, 0};
  CHECK(laplace(V(s10, 'x', 1) * V(s10, 'x', 1)) == C(s10, -2));

  // the fermionic piece: an engine expansion gives -4 on the full Grassmann
  // pair, consistent with laplace = dirac applied twice
  const Signature s01{0, 1, 0};
  CHECK(laplace(V(s01, 'q', 1) * V(s01, 'q', 2)) == C(s01, -4));

  for (auto [m, n] : {std::pair{2, 1}, {1, 2}}) {
    const Signature s{m, n, 0};
    RandomGen rnd(s, 11);
    for (int t = 0; t < 200; ++t) {
      const SuperElement a = rnd.element(3, 4);
      CHECK(laplace(a) == dirac(dirac(a, Side::left), Side::left));
    }
  }
}

TEST_CASE("euler") {
  const Signature s{1, 1, 2};
  const auto a = V(s, 'x', 1) * V(s, 'x', 1) * V(s, 'q', 1);
  CHECK(euler(a) == a.scaled(Scalar(3)));
  CHECK(euler(V(s, 'e', 1) * V(s, 'f', 1)).is_zero());
  CHECK(euler(V(s, 'y', 1) * V(s, 'q', 1)) == V(s, 'y', 1) * V(s, 'q', 1));
}

TEST_CASE("square identities") {
  const Signature s31{3, 1, 0};
  const auto x31 = SuperElement::vector_variable(s31, VectorPart::full);
  CHECK(laplace(x31.pow(2)) == C(s31, 2));  // 2 * (m - 2n)
  const Signature s22{2, 2, 0};
  const auto x22 = SuperElement::vector_variable(s22, VectorPart::full);
  CHECK(laplace(x22.pow(2)) == C(s22, -4));
}

TEST_CASE("monogenic basis solver") {
  const Signature s{2, 1, 0};
  const MonogenicBasis left = monogenic_basis(s, 1, 1, Side::left);
  CHECK(!left.elements.empty());
  for (const auto& e : left.elements) CHECK(dirac(e, Side::left).is_zero());
  const auto g = V(s, 'x', 1) * V(s, 'e', 1) - V(s, 'x', 2) * V(s, 'e', 2);
  CHECK(in_span(left, g));

  const MonogenicBasis right = monogenic_basis(s, 1, 1, Side::right);
  CHECK(!right.elements.empty());
  for (const auto& e : right.elements) CHECK(dirac(e, Side::right).is_zero());
}

TEST_CASE("exact suite runners") {
  SuiteOptions o;
  o.m = 2;
  o.n = 1;
  o.trials = 12;
  o.seed = 5;
  for (const char* name : {"superdim", "lemma1", "lemma2"}) {
    const VerificationReport rep = run_check(name, o);
    CAPTURE(name);
    CAPTURE(rep.note);
    CHECK(rep.status == CheckStatus::pass);
    CHECK(rep.max_rel_error == 0.0);
  }
  SuiteOptions o2;
  o2.m = 1;
  o2.n = 2;
  o2.trials = 12;
  o2.seed = 6;
  for (const char* name : {"superdim", "lemma1", "lemma2"}) {
    const VerificationReport rep = run_check(name, o2);
    CAPTURE(name);
    CHECK(rep.status == CheckStatus::pass);
    CHECK(rep.max_rel_error == 0.0);
  }
}
