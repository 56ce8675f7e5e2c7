#ifndef BURGERS_NORMS_HPP
#define BURGERS_NORMS_HPP

#include "burgers/grid.hpp"

namespace burgers {

// Neumaier compensated accumulator; keeps the L^1-contraction and mass
// assertions meaningful at 1e-10/1e-12 relative tolerances.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct NormRow {
  double t = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double lp = 0.0;
  double linf = 0.0;
};

// (sum |u_i|^p vol)^{1/p} for finite p >= 1, max |u_i| for p = infinity.
double lp_norm(const Field& f, double p);
double linf_norm(const Field& f);
double signed_mass(const Field& f);

// All four tracked norms in one pass; p is the Serre exponent (d+1)^2/d.
NormRow measure_norms(const Field& f, double p);

}  // namespace burgers

#endif  // BURGERS_NORMS_HPP
