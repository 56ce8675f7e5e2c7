#include "burgers/exponents.hpp"

#include <stdexcept>

namespace burgers::exponents {

namespace {

void require_dim(int d) {
  if (d < 1) throw std::invalid_argument("exponents: dimension must be >= 1");
}

// 1 + d(d+1)/2 as an exact rational
Rational half_sum_plus_one(int d) {
  return Rational(1) + Rational(static_cast<long long>(d) * (d + 1), 2);
}

}  // namespace

Rational gamma0(int d) {
  require_dim(d);
  return Rational(2, static_cast<long long>(d) * d + d + 2);
}

SerreExponents serre_exponents(int d) {
  require_dim(d);
  long long dd = d;
  Rational p((dd + 1) * (dd + 1), dd);
  Rational gamma(dd * dd + 2 * dd + 2, (1 + dd) * (dd * dd + dd + 2));
  Rational delta(2 * dd * (dd * dd + dd + 1),
                 (1 + dd) * (1 + dd) * (dd * dd + dd + 2));
  return {p, gamma, delta};
}

ExponentSet ExponentSet::for_dimension(int d) {
  require_dim(d);
  SerreExponents se = serre_exponents(d);
  return {d, burgers::exponents::gamma0(d), se.p, se.gamma, se.delta};
}

Rational theta(int d, const Rational& gamma) {
  require_dim(d);
  if (gamma <= Rational(0) || gamma >= gamma0(d))
    throw std::domain_error("theta: gamma must lie in the open interval (0, gamma0)");
  return Rational(1) - gamma * half_sum_plus_one(d);
}

CompoundLedger compound_partial(int d, const Rational& gamma, long long k) {
  if (k < 0) throw std::invalid_argument("compound_partial: k must be >= 0");
  Rational th = theta(d, gamma);
  Rational geom(0), arith(0), theta_pow(1);
  for (long long j = 0; j <= k; ++j) {
    geom += theta_pow;
    arith += Rational(j + 1) * theta_pow;
    theta_pow *= th;
  }
  CompoundLedger ledger;
  ledger.d = d;
  ledger.gamma = gamma;
  ledger.theta = th;
  ledger.steps = k;
  ledger.l1_exponent = gamma * geom;
  ledger.t_exponent = Rational(d) * gamma * geom;
  ledger.dyadic_exponent = Rational(d) * gamma * arith;
  ledger.residual_exponent = theta_pow;  // theta^{k+1}
  return ledger;
}

CompoundLimit compound_limit(int d, const Rational& gamma) {
  Rational th = theta(d, gamma);
  Rational one_minus = Rational(1) - th;
  Rational l1 = gamma / one_minus;
  Rational t = Rational(d) * gamma / one_minus;
  Rational dyadic = Rational(d) * gamma / (one_minus * one_minus);
  return {l1, t, dyadic};
}

InterpolationWitness interpolation_check(int d) {
  require_dim(d);
  SerreExponents se = serre_exponents(d);
  Rational g0 = gamma0(d);
  Rational inv_p = se.p.inverse();
  Rational one_minus = Rational(1) - inv_p;
  InterpolationWitness w;
  w.gamma_interpolated = inv_p + g0 * one_minus;
  w.gamma_formula = se.gamma;
  w.delta_interpolated = Rational(d) * g0 * one_minus;
  w.delta_formula = se.delta;
  w.ok = w.gamma_interpolated == w.gamma_formula &&
         w.delta_interpolated == w.delta_formula;
  return w;
}

bool invariance_exponent_check(int d) {
  require_dim(d);
  Rational g0 = gamma0(d);
  bool l1_cancels = half_sum_plus_one(d) * g0 == Rational(1);
  bool s_cancels = Rational(-d) * g0 + Rational(d) * g0 == Rational(0);
  return l1_cancels && s_cancels;
}

}  // namespace burgers::exponents
