#ifndef BURGERS_ANALYSIS_HPP
#define BURGERS_ANALYSIS_HPP

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "burgers/rational.hpp"
#include "burgers/solver.hpp"

namespace burgers::analysis {

// Sampled norm history of one run. l1 must be non-increasing along rows up to
// 1e-10 relative rounding slack; that is validated, not assumed.
struct DecaySeries {
  int dim = 1;
  double l1_0 = 0.0;
  double linf_0 = 0.0;
  double p = 0.0;  // Serre exponent (d+1)^2/d used for the lp column
  std::vector<NormRow> rows;

  static DecaySeries from_trajectory(int dim, const Trajectory& traj);
  void validate() const;
  // header "t,l1,l2,lp,linf", 17 significant digits
  void write_csv(std::ostream& os) const;
};

enum class NormColumn { l1, l2, lp, linf };
NormColumn norm_column_from_string(std::string_view s);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;
  int rows_used = 0;
};

// Least-squares line through (log t, log norm) over the window; the slope is
// the empirical decay exponent.
FitResult fit_slope(const DecaySeries& series, NormColumn column, double t_lo,
                    double t_hi);

struct BoundReport {
  std::string id;  // "thm1" | "serre" | "eq3"
  int dim = 1;
  Rational gamma;       // L1 exponent in the bound
  Rational t_exponent;  // decay exponent of t
  Rational theta;       // Linf-weight exponent (eq3 only, else 0)
  double window_lo = 0.0, window_hi = 0.0;
  std::vector<std::pair<double, double>> ratios;  // (t, R(t)) inside window
  double sup_ratio = 0.0;
  void write_text(std::ostream& os) const;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// R(t) = linf(t) t^{d gamma0} / l1_0^{gamma0}; sup over the window estimates
// the Theorem-1 constant. Windows start at 1 by default: below that the
// trivial bound linf <= linf_0 wins and t^{-d gamma0} blows up.
BoundReport thm1_ratio(const DecaySeries& series, double window_lo = 1.0,
                       double window_hi = kInf);

// R(t) = lp(t) t^delta / l1_0^gamma with Serre's (p, gamma, delta).
BoundReport serre_ratio(const DecaySeries& series, double window_lo = 1.0,
                        double window_hi = kInf);

// R(t) = linf(t) t^{d gamma} / (linf_0^theta l1_0^gamma), gamma in (0, gamma0).
BoundReport eq3_ratio(const DecaySeries& series, const Rational& gamma,
                      double window_lo = 1.0, double window_hi = kInf);

// Worst relative violation of lp <= l1^{1/p} linf^{1-1/p} across rows
// (<= 0 when the interpolation inequality holds everywhere).
double interpolation_violation(const DecaySeries& series);

// Max-abs cell difference between one run to time t and a restarted run
// through t/2. With forced_identical the full run's dt schedule is replayed
// on both legs and the residual is exactly zero.
double semigroup_residual(const InitialData& u0, const Grid& grid, double t,
                          double cfl, FluxChoice flux, bool forced_identical);

// Box mapped by the scaling group (x -> x / a_k per direction), same cells.
Grid scaled_grid(const Grid& base, const ScalingParams& params);

// Runs the base problem to time t and the scaled problem to t/s on grids
// related by the group, then compares thm1 ratio rows; zero in the continuum
// by the exponent identities, small at finite resolution.
double scaling_residual(const InitialData& u0, const ScalingParams& params,
                        const Grid& base, const Grid& scaled, double t,
                        double cfl, FluxChoice flux,
                        std::span<const double> sample_times);

}  // namespace burgers::analysis

#endif  // BURGERS_ANALYSIS_HPP
