#ifndef BURGERS_EXPONENTS_HPP
#define BURGERS_EXPONENTS_HPP

#include "burgers/rational.hpp"

namespace burgers::exponents {

// gamma0 = 2/(d^2+d+2) = (1 + d(d+1)/2)^{-1}, the critical decay exponent.
Rational gamma0(int d);

// Serre's Lebesgue/decay exponents: p = (d+1)^2/d,
// gamma = (d^2+2d+2)/((1+d)(d^2+d+2)), delta = 2d(d^2+d+1)/((1+d)^2(d^2+d+2)).
struct SerreExponents {
  Rational p;
  Rational gamma;
  Rational delta;
};
SerreExponents serre_exponents(int d);

struct ExponentSet {
  int d = 1;
  Rational gamma0;
  Rational p;
  Rational gamma_serre;
  Rational delta_serre;
  static ExponentSet for_dimension(int d);
};

// theta = 1 - gamma*(1 + d(d+1)/2), valid only for gamma in the open
// interval (0, gamma0); the compounding iteration degenerates at the ends.
Rational theta(int d, const Rational& gamma);

// Exponent bookkeeping for the dyadic compounding iteration: partial sums
// after steps k of the geometric/arithmetico-geometric series that multiply
// the L^1, t and 2^j factors, plus the leftover L^infty exponent theta^{k+1}.
struct CompoundLedger {
  int d = 1;
  Rational gamma;
  Rational theta;
  long long steps = 0;
  Rational l1_exponent;        // gamma * sum_{j=0..k} theta^j
  Rational t_exponent;         // d * gamma * sum theta^j
  Rational dyadic_exponent;    // d * gamma * sum (j+1) theta^j
  Rational residual_exponent;  // theta^{k+1}
};
CompoundLedger compound_partial(int d, const Rational& gamma, long long k);

// k -> infinity limits: (gamma/(1-theta), d*gamma/(1-theta), d*gamma/(1-theta)^2).
// The first component equals gamma0(d) for every admissible gamma.
struct CompoundLimit {
  Rational l1_exponent;
  Rational t_exponent;
  Rational dyadic_exponent;
};
CompoundLimit compound_limit(int d, const Rational& gamma);

// Checks that Serre's exponents arise from the L^infty bound by interpolation:
// gamma = 1/p + gamma0*(1-1/p) and delta = d*gamma0*(1-1/p), exactly.
struct InterpolationWitness {
  bool ok = false;
  Rational gamma_interpolated;
  Rational gamma_formula;
  Rational delta_interpolated;
  Rational delta_formula;
};
InterpolationWitness interpolation_check(int d);

// (1 + d(d+1)/2)*gamma0 == 1 and the s-exponents cancel, which together make
// the ratio linf(t) * t^{d gamma0} / l1(0)^{gamma0} scaling-invariant.
bool invariance_exponent_check(int d);

}  // namespace burgers::exponents

#endif  // BURGERS_EXPONENTS_HPP
