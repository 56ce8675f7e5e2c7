#include <doctest.h>

#include <stdexcept>

#include "burgers/exponents.hpp"

using burgers::Rational;
namespace ex = burgers::exponents;

TEST_SUITE_BEGIN("exponents");

TEST_CASE("gamma0 formula") {
  CHECK(ex::gamma0(1) == Rational(1, 2));
  CHECK(ex::gamma0(2) == Rational(1, 4));
  CHECK(ex::gamma0(3) == Rational(1, 7));
  CHECK_THROWS_AS(ex::gamma0(0), std::invalid_argument);
  CHECK_THROWS_AS(ex::gamma0(-2), std::invalid_argument);
}

TEST_CASE("serre exponents at small dimensions") {
  auto s1 = ex::serre_exponents(1);
  CHECK(s1.p == Rational(4));
  CHECK(s1.gamma == Rational(5, 8));
  CHECK(s1.delta == Rational(3, 8));
  auto s2 = ex::serre_exponents(2);
  CHECK(s2.p == Rational(9, 2));
  CHECK(s2.gamma == Rational(5, 12));
  CHECK(s2.delta == Rational(7, 18));
  auto s3 = ex::serre_exponents(3);
  CHECK(s3.p == Rational(16, 3));
  CHECK(s3.gamma == Rational(17, 56));
  CHECK(s3.delta == Rational(39, 112));
  CHECK_THROWS_AS(ex::serre_exponents(0), std::invalid_argument);
}

TEST_CASE("theta and its open domain") {
  CHECK(ex::theta(1, Rational(1, 4)) == Rational(1, 2));
  CHECK(ex::theta(2, Rational(1, 8)) == Rational(1, 2));
  // the endpoints gamma = 0 and gamma = gamma0 are excluded
  CHECK_THROWS_AS(ex::theta(1, Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(ex::theta(1, Rational(0)), std::domain_error);
  CHECK_THROWS_AS(ex::theta(1, Rational(-1, 4)), std::domain_error);
  CHECK_THROWS_AS(ex::theta(1, Rational(3, 4)), std::domain_error);
}

TEST_CASE("compound partial ledgers") {
  auto l0 = ex::compound_partial(1, Rational(1, 4), 0);
  CHECK(l0.theta == Rational(1, 2));
  CHECK(l0.l1_exponent == Rational(1, 4));
  CHECK(l0.t_exponent == Rational(1, 4));
  CHECK(l0.dyadic_exponent == Rational(1, 4));
  CHECK(l0.residual_exponent == Rational(1, 2));

  auto l1 = ex::compound_partial(1, Rational(1, 4), 1);
  CHECK(l1.l1_exponent == Rational(3, 8));
  CHECK(l1.t_exponent == Rational(3, 8));
  CHECK(l1.dyadic_exponent == Rational(1, 2));
  CHECK(l1.residual_exponent == Rational(1, 4));

  auto l2 = ex::compound_partial(2, Rational(1, 8), 0);
  CHECK(l2.l1_exponent == Rational(1, 8));
  CHECK(l2.t_exponent == Rational(1, 4));
  CHECK(l2.dyadic_exponent == Rational(1, 4));
  CHECK(l2.residual_exponent == Rational(1, 2));

  CHECK_THROWS_AS(ex::compound_partial(1, Rational(1, 4), -1),
                  std::invalid_argument);
}

TEST_CASE("compound limits") {
  auto lim = ex::compound_limit(1, Rational(1, 4));
  CHECK(lim.l1_exponent == Rational(1, 2));
  CHECK(lim.t_exponent == Rational(1, 2));
  CHECK(lim.dyadic_exponent == Rational(1));

  auto lim2 = ex::compound_limit(1, Rational(1, 3));
  CHECK(lim2.l1_exponent == Rational(1, 2));
  CHECK(lim2.t_exponent == Rational(1, 2));
  CHECK(lim2.dyadic_exponent == Rational(3, 4));

  auto lim3 = ex::compound_limit(3, Rational(1, 14));
  CHECK(lim3.l1_exponent == Rational(1, 7));
  CHECK(lim3.t_exponent == Rational(3, 7));
  CHECK(lim3.dyadic_exponent == Rational(6, 7));
}

TEST_CASE("limit punchline: first component is gamma0 for every admissible gamma") {
  for (int d = 1; d <= 10; ++d) {
    Rational g0 = ex::gamma0(d);
    for (int q = 1; q <= 9; ++q) {
      Rational gamma = g0 * Rational(q, 10);
      auto lim = ex::compound_limit(d, gamma);
      CHECK(lim.l1_exponent == g0);
      CHECK(lim.t_exponent == Rational(d) * g0);
    }
  }
}

TEST_CASE("partial sums are monotone and match the closed-form remainder") {
  for (int d : {1, 2, 3}) {
    Rational g0 = ex::gamma0(d);
    for (int q : {2, 5, 9}) {
      Rational gamma = g0 * Rational(q, 10);
      auto lim = ex::compound_limit(d, gamma);
      Rational th = ex::theta(d, gamma);
      Rational prev_l1(-1);
      Rational prev_res(2);
      for (int k = 0; k <= 40; ++k) {
        auto ledger = ex::compound_partial(d, gamma, k);
        CHECK(ledger.l1_exponent > prev_l1);
        CHECK(ledger.l1_exponent < g0);
        CHECK(ledger.residual_exponent < prev_res);
        CHECK(ledger.residual_exponent > Rational(0));
        // exact remainder: limit - partial = gamma * theta^{k+1} / (1-theta)
        Rational remainder = lim.l1_exponent - ledger.l1_exponent;
        CHECK(remainder ==
              gamma * ledger.residual_exponent / (Rational(1) - th));
        prev_l1 = ledger.l1_exponent;
        prev_res = ledger.residual_exponent;
      }
    }
  }
}

TEST_CASE("interpolation and invariance identities for d = 1..10") {
  for (int d = 1; d <= 10; ++d) {
    auto w = ex::interpolation_check(d);
    CHECK(w.ok);
    CHECK(w.gamma_interpolated == w.gamma_formula);
    CHECK(w.delta_interpolated == w.delta_formula);
    CHECK(ex::invariance_exponent_check(d));
  }
  // spec witnesses: d=1 gamma via 1/4 + (1/2)(3/4) = 5/8, d=2 delta = 7/18
  CHECK(ex::interpolation_check(1).gamma_interpolated == Rational(5, 8));
  CHECK(ex::interpolation_check(2).delta_interpolated == Rational(7, 18));
}

TEST_CASE("exponent set aggregates consistently") {
  auto es = ex::ExponentSet::for_dimension(2);
  CHECK(es.gamma0 == Rational(1, 4));
  CHECK(es.p == Rational(9, 2));
  CHECK(es.gamma_serre > Rational(0));
  CHECK(es.gamma_serre < Rational(1));
  CHECK(es.delta_serre > Rational(0));
}

TEST_SUITE_END();
