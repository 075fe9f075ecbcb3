#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "supercauchy/cauchy.hpp"
#include "supercauchy/operators.hpp"
#include "supercauchy/random_gen.hpp"
#include "supercauchy/suites.hpp"

using namespace supercauchy;
using sct::C;
using sct::V;

TEST_CASE("substitution into parameters") {
  const Signature s{1, 1, 2};
  {
    const NumericSuperValue got =
        substitute_to_params(V(s, 'x', 1) + V(s, 'q', 1), std::vector<double>{2.0});
    NumericSuperValue want(s);
    want.add_word(unit_monomial(s), 2.0);
    Monomial wy = unit_monomial(s);
    wy.par = {1};
    want.add_word(wy, 1.0);
    CHECK(sct::rel_to(got, want) <= 1e-15);
  }
  {
    // the Grassmann pair renames in place with no sign
    const NumericSuperValue got =
        substitute_to_params(V(s, 'q', 1) * V(s, 'q', 2), std::vector<double>{0.0});
    Monomial wyy = unit_monomial(s);
    wyy.par = {1, 2};
    NumericSuperValue want(s);
    want.add_word(wyy, 1.0);
    CHECK(sct::rel_to(got, want) <= 1e-15);
  }
  {
    const NumericSuperValue got =
        substitute_to_params(V(s, 'x', 1) * V(s, 'q', 1), std::vector<double>{3.0});
    Monomial wy = unit_monomial(s);
    wy.par = {1};
    NumericSuperValue want(s);
    want.add_word(wy, 3.0);
    CHECK(sct::rel_to(got, want) <= 1e-15);
  }
  CHECK_THROWS_AS(substitute_to_params(V(s, 'y', 1), std::vector<double>{0.0}),
                  std::invalid_argument);
}

TEST_CASE("mixed boundary relation, pinned witness") {
  // one commuting dimension, one pair, f = 1, g = x1, region [0, 1]
  const Signature s{1, 1, 0};
  const Region seg = Region::ball(1, {0.5, 0.0, 0.0}, 0.5, 8);
  const auto g = V(s, 'x', 1);

  const SuperBoundaryIntegral lhs =
      super_boundary_integral(PairingLeft::element(SuperElement::one(s)), g, seg);
  NumericSuperValue want(s);
  Monomial we = unit_monomial(s);
  we.eblade = {1};
  want.add_word(we, -1.0);
  CHECK(sct::rel_to(lhs.value(), want) <= 1e-12);
  CHECK(lhs.fermionic_boundary.max_abs() <= 1e-14);

  const SuperElement h = dirac(SuperElement::one(s), Side::right) * g +
                         dirac(g, Side::left);
  const NumericSuperValue rhs =
      super_volume_integral(PairingLeft::element(SuperElement::one(s)), h, seg);
  CHECK(sct::rel_to(rhs, want) <= 1e-12);

  // f = g = 1: both sides vanish
  const SuperBoundaryIntegral triv =
      super_boundary_integral(PairingLeft::element(SuperElement::one(s)), SuperElement::one(s), seg);
  CHECK(triv.value().max_abs() <= 1e-13);
}

TEST_CASE("compiled sweep equals the direct node-wise route") {
  for (auto [m, n] : {std::pair{2, 1}, {1, 2}}) {
    const Signature sig{m, n, 0};
    const Region region =
        Region::ball(m, {0.1, -0.2, 0.0}, 0.8, 8);
    RandomGen rnd(sig, 21);
    const FermionicElements fe(sig);
    for (int t = 0; t < 2; ++t) {
      const SuperElement f = rnd.element(2, 3);
      const SuperElement g = rnd.element(2, 3);
      const SuperElement h = dirac(f, Side::right) * g + f * dirac(g, Side::left);

      const SuperBoundaryIntegral fast =
          super_boundary_integral(PairingLeft::element(f), g, region);
      const NumericSuperValue fast_vol =
          super_volume_integral(PairingLeft::element(f), h, region);

      // direct route: evaluate, multiply word-wise, Berezin-integrate per node
      const NumericSuperValue slow_ferm = volume_integral(
          sig, region, Singularity::none, [&](std::span<const double> x) {
            return (f.evaluate_bosonic(x) * fe.surface.evaluate_bosonic(x) *
                    g.evaluate_bosonic(x))
                .berezin();
          });
      const NumericSuperValue slow_bos = surface_integral(
          sig, region.boundary(), [&](std::span<const double> x, std::span<const double> nr) {
            NumericSuperValue nb(sig);
            for (std::size_t i = 0; i < nr.size(); ++i) {
              Monomial w = unit_monomial(sig);
              w.eblade = {static_cast<int>(i) + 1};
              nb.add_word(w, nr[i]);
            }
            return (f.evaluate_bosonic(x) * fe.volume.evaluate_bosonic(x) * nb *
                    g.evaluate_bosonic(x))
                .berezin();
          });
      const NumericSuperValue slow_vol = volume_integral(
          sig, region, Singularity::none, [&](std::span<const double> x) {
            return (f.evaluate_bosonic(x) * h.evaluate_bosonic(x) *
                    fe.volume.evaluate_bosonic(x))
                .berezin();
          });

      CHECK(sct::rel_to(fast.fermionic_boundary, slow_ferm) <= 1e-12);
      CHECK(sct::rel_to(fast.bosonic_boundary, slow_bos) <= 1e-12);
      CHECK(sct::rel_to(fast_vol, slow_vol) <= 1e-12);
    }
  }
}

TEST_CASE("boundary pairing vanishes on monogenic pairs") {
  const Signature s{2, 1, 0};
  const Region disk = Region::ball(2, {0.0, 0.0, 0.0}, 1.0, 16);
  const auto g = V(s, 'x', 1) * V(s, 'e', 1) - V(s, 'x', 2) * V(s, 'e', 2);
  REQUIRE(dirac(g, Side::left).is_zero());
  const SuperBoundaryIntegral got =
      super_boundary_integral(PairingLeft::element(SuperElement::one(s)), g, disk);
  CHECK(got.value().max_abs() <= 1e-8);

  SuiteOptions o;
  o.m = 2;
  o.n = 1;
  o.trials = 6;
  o.seed = 3;
  o.resolution = 12;
  const VerificationReport rep = run_check("cauchy", o);
  CAPTURE(rep.note);
  CHECK(rep.status == CheckStatus::pass);
}

TEST_CASE("mixed relation runners") {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}}) {
    SuiteOptions o;
    o.m = m;
    o.n = n;
    o.trials = 5;
    o.seed = 17;
    o.resolution = 8;
    const VerificationReport rep = run_check("general-stokes", o);
    CAPTURE(m);
    CAPTURE(n);
    CAPTURE(rep.max_rel_error);
    CHECK(rep.status == CheckStatus::pass);
  }
  SuiteOptions ob;
  ob.m = 2;
  ob.trials = 8;
  ob.seed = 19;
  ob.resolution = 10;
  const VerificationReport repb = run_check("bosonic-stokes", ob);
  CHECK(repb.status == CheckStatus::pass);
}

TEST_CASE("representation formulas") {
  {
    SuiteOptions o;
    o.m = 1;
    o.n = 1;
    o.seed = 23;
    o.resolution = 32;
    const VerificationReport rep = run_check("pompeiu", o);
    CAPTURE(rep.max_rel_error);
    CHECK(rep.status == CheckStatus::pass);
  }
  {
    SuiteOptions o;
    o.m = 3;
    o.n = 1;
    o.seed = 29;
    o.resolution = 20;
    const VerificationReport rep = run_check("pompeiu", o);
    CHECK(rep.status == CheckStatus::pass);
  }
  {
    SuiteOptions o;
    o.m = 1;
    o.n = 1;
    o.seed = 31;
    o.resolution = 32;
    const VerificationReport rep = run_check("k-monogenic", o);
    CHECK(rep.status == CheckStatus::pass);
  }
  // even m has no odd-dimensional kernel family: rejected, not silently wrong
  {
    SuiteOptions o;
    o.m = 2;
    o.n = 1;
    const VerificationReport rep = run_check("pompeiu", o);
    CHECK(rep.status == CheckStatus::fail);
    CHECK(!rep.note.empty());
  }
}

TEST_CASE("shrinking balls single out the point value") {
  for (int m : {1, 3}) {
    SuiteOptions o;
    o.m = m;
    o.n = 1;
    o.resolution = 16;
    const VerificationReport rep = run_check("limit-lemma", o);
    CAPTURE(m);
    CAPTURE(rep.note);
    CHECK(rep.status == CheckStatus::pass);
  }
}
