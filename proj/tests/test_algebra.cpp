#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "supercauchy/element.hpp"
#include "supercauchy/random_gen.hpp"

using namespace supercauchy;
using sct::C;
using sct::V;

TEST_CASE("generator relations") {
  const Signature s21{2, 1, 2};
  const auto e1 = V(s21, 'e', 1), e2 = V(s21, 'e', 2);
  const auto q1 = V(s21, 'q', 1), q2 = V(s21, 'q', 2);
  const auto f1 = V(s21, 'f', 1), f2 = V(s21, 'f', 2);
  const auto x1 = V(s21, 'x', 1);
  const auto y1 = V(s21, 'y', 1);

  CHECK(e1 * e1 == C(s21, -1));
  CHECK(e1 * e2 == -(e2 * e1));
  CHECK(q2 * q1 == -(q1 * q2));
  CHECK((q1 * q1).is_zero());
  CHECK((y1 * y1).is_zero());
  CHECK(q1 * y1 == -(y1 * q1));
  CHECK(f2 * f1 == f1 * f2 - C(s21, 1));  // one Weyl pair: [f1, f2] = 1
  CHECK(e1 * f1 == -(f1 * e1));
  CHECK(x1 * q1 == q1 * x1);
  CHECK(x1 * e1 == e1 * x1);
  CHECK(x1 * f1 == f1 * x1);
  CHECK(q1 * e1 == e1 * q1);
  CHECK(q1 * f2 == f2 * q1);

  const Signature s02{0, 2, 0};
  const auto g1 = V(s02, 'f', 1), g3 = V(s02, 'f', 3), g4 = V(s02, 'f', 4);
  CHECK(g1 * g3 == g3 * g1);  // distinct pairs commute
  CHECK(g3 * g4 - g4 * g3 == SuperElement::one(s02));
}

TEST_CASE("vector variables and frozen products") {
  const Signature s11{1, 1, 0};
  CHECK(SuperElement::vector_variable(s11, VectorPart::full) ==
        SuperElement::vector_variable(s11, VectorPart::bosonic) +
            SuperElement::vector_variable(s11, VectorPart::fermionic));

  const auto xf = SuperElement::vector_variable(s11, VectorPart::fermionic);
  CHECK(xf * xf == V(s11, 'q', 1) * V(s11, 'q', 2));

  const Signature s21{2, 1, 0};
  const auto x = SuperElement::vector_variable(s21, VectorPart::full);
  const auto expected = V(s21, 'q', 1) * V(s21, 'q', 2) - V(s21, 'x', 1) * V(s21, 'x', 1) -
                        V(s21, 'x', 2) * V(s21, 'x', 2);
  CHECK(x.pow(2) == expected);
  CHECK(x.pow(3) == x * x * x);

  // x^2 is central: it commutes with everything, including e and f words
  const auto probe = V(s21, 'e', 1) * V(s21, 'f', 2) + V(s21, 'q', 1);
  CHECK(x.pow(2) * probe == probe * x.pow(2));

  const Signature s12{0, 1, 2};
  CHECK(SuperElement::param_vector(s12) ==
        V(s12, 'y', 1) * V(s12, 'f', 1) + V(s12, 'y', 2) * V(s12, 'f', 2));
  CHECK_THROWS(SuperElement::param_vector(Signature{0, 1, 1}));
}

TEST_CASE("grading") {
  const Signature s10{1, 0, 0};
  const auto x1 = V(s10, 'x', 1);
  const auto a = SuperElement::one(s10) + x1 + x1 * x1;
  CHECK(a.max_degree() == 2);
  CHECK(a.homogeneous_part(1) == x1);
  CHECK(a.homogeneous_part(0) == SuperElement::one(s10));
  CHECK(a.homogeneous_part(3).is_zero());

  const Signature s21{2, 1, 0};
  const auto x = SuperElement::vector_variable(s21, VectorPart::full);
  CHECK(x.pow(2).homogeneous_part(2) == x.pow(2));
  CHECK((V(s21, 'e', 1) * V(s21, 'f', 1) * V(s21, 'f', 2)).max_generator_degree() == 3);
}

TEST_CASE("associativity and distributivity on random elements") {
  const Signature sig{2, 2, 2};
  RandomGen rnd(sig, 42);
  const auto y1 = V(sig, 'y', 1);
  for (int i = 0; i < 200; ++i) {
    SuperElement a = rnd.element(3, 3);
    SuperElement b = rnd.element(3, 3);
    const SuperElement c = rnd.element(3, 3);
    if (i % 3 == 0) b = b * y1;  // mix parameter content in
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(c * (a + b) == c * a + c * b);
  }
}

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar(1, 2) + Scalar(1, 3) == Scalar(5, 6));
  CHECK(Scalar(-4, 8) == Scalar(-1, 2));
  CHECK(Scalar(2, 1, 1) * Scalar(3, 4, -1) == Scalar(3, 2));
  CHECK(Scalar(2, 3, 2).inverse() == Scalar(3, 2, -2));
  CHECK((-Scalar(2, 3, 2)).inverse() == Scalar(-3, 2, -2));
  CHECK_THROWS_AS(Scalar(1) + Scalar(1, 1, 1), std::logic_error);
  CHECK(Scalar(3).to_string() == "3");
  CHECK(Scalar(-5, 7).to_string() == "-5/7");
  CHECK(Scalar(2, 1, 1).to_string() == "2*pi");
  CHECK(Scalar(1, 4, -1).to_string() == "1/4*pi^-1");
  CHECK(Scalar(1, 1, 2).to_string() == "pi^2");
}

TEST_CASE("slot moves and numeric evaluation") {
  const Signature s1{1, 1, 0};
  const Signature s2{2, 1, 0};
  CHECK(V(s1, 'x', 1).with_bosonic_slots(2, 1) == V(s2, 'x', 2));
  CHECK((V(s1, 'x', 1) * V(s1, 'q', 1)).with_bosonic_slots(2, 0) == V(s2, 'x', 1) * V(s2, 'q', 1));

  const auto a = C(s1, 2) + V(s1, 'x', 1) * V(s1, 'x', 1);
  CHECK(sct::rel_to(sct::eval_at(a, {3.0}), sct::num_scalar(s1, 11.0)) <= 1e-15);

  const auto b = V(s1, 'x', 1) * V(s1, 'q', 1) + V(s1, 'e', 1);
  NumericSuperValue want(s1);
  Monomial wq = unit_monomial(s1);
  wq.grs = {1};
  want.add_word(wq, 2.0);
  Monomial we = unit_monomial(s1);
  we.eblade = {1};
  want.add_word(we, 1.0);
  CHECK(sct::rel_to(sct::eval_at(b, {2.0}), want) <= 1e-15);
}

TEST_CASE("normal form text") {
  const Signature s21{2, 1, 0};
  CHECK((V(s21, 'q', 2) * V(s21, 'q', 1)).to_string() == "-q1*q2");
  CHECK(SuperElement::zero(s21).to_string() == "0");
  CHECK((V(s21, 'x', 1) * V(s21, 'x', 1) * V(s21, 'f', 2)).to_string() == "x1^2*f2");
}
