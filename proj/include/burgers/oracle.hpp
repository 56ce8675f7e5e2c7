#ifndef BURGERS_ORACLE_HPP
#define BURGERS_ORACLE_HPP

#include <vector>

#include "burgers/equation.hpp"

namespace burgers {

// Compactly supported piecewise-linear 1-D initial data together with its
// primitive. Restricting to piecewise-linear u0 makes G(y) = U0(y) +
// (x-y)^2/(2t) piecewise quadratic, so the Lax-Oleinik minimization is exact
// and the oracle carries no discretization error.
class Profile1D {
 public:
  // piece i lives on (nodes[i], nodes[i+1]) with value
  // left_values[i] + slopes[i]*(y - nodes[i]); jumps at nodes are allowed.
  Profile1D(std::vector<double> nodes, std::vector<double> left_values,
            std::vector<double> slopes);

  static Profile1D zero();
  static Profile1D box(double amplitude, double lo, double hi);
  static Profile1D triangle(double amplitude, double lo, double hi);
  static Profile1D two_state(double u_left, double u_right, double lo,
                             double mid, double hi);
  // box/triangle InitialData (any sign pattern) at d = 1; throws for gauss
  static Profile1D from_initial_data(const InitialData& u0);

  int piece_count() const { return static_cast<int>(slopes_.size()); }
  double node(int i) const { return nodes_[i]; }
  double left_value(int i) const { return vleft_[i]; }
  double slope(int i) const { return slopes_[i]; }
  double support_lo() const { return nodes_.front(); }
  double support_hi() const { return nodes_.back(); }

  double value(double y) const;      // u0(y), right-continuous, 0 outside
  double primitive(double y) const;  // U0(y), U0 = 0 left of the support
  double min_value() const;          // includes the exterior value 0
  double max_value() const;
  double mass() const { return primitive(support_hi()); }

 private:
  std::vector<double> nodes_, vleft_, slopes_, prim_;
};

// Entropy solution value u(t,x) = (x - y*)/t where y* minimizes
// U0(y) + (x-y)^2/(2t); exact per-piece minimizers, global min by
// enumeration, smaller y* at ties (left limit at shocks).
double lax_oleinik_eval(const Profile1D& u0, double t, double x);

// u(t,.) is piecewise affine in x; one segment per maximal interval where a
// single regime attains the minimum. Jumps between consecutive segments are
// shocks. Self-validates against pointwise evaluation.
struct SolutionSegment {
  double x_lo = 0.0, x_hi = 0.0;
  double u_lo = 0.0, u_hi = 0.0;
};
std::vector<SolutionSegment> lax_oleinik_profile(const Profile1D& u0, double t);

// Exact sup norm at time t (candidate extrema: shock limits and fan edges).
double linf_exact(const Profile1D& u0, double t);
// Exact L1 norm at time t.
double l1_exact(const Profile1D& u0, double t);
// Signed integral of u(t,.) over [a, b].
double integrate_solution(const Profile1D& u0, double t, double a, double b);

// Closed-form N-wave reference sqrt(2*mass/t) for single-signed 1-D data.
double nwave_peak(double mass, double t);

}  // namespace burgers

#endif  // BURGERS_ORACLE_HPP
