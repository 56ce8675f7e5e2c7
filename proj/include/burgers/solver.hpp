#ifndef BURGERS_SOLVER_HPP
#define BURGERS_SOLVER_HPP

#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "burgers/grid.hpp"
#include "burgers/norms.hpp"

namespace burgers {

enum class FluxChoice { engquist_osher, godunov };
std::string to_string(FluxChoice f);
FluxChoice flux_choice_from_string(std::string_view s);

// Engquist-Osher flux for f_k(u) = u^{k+1}/(k+1), in closed form:
// even k has f' = u^k >= 0 so F = f(a); odd k splits into
// (max(a,0)^{k+1} + min(b,0)^{k+1})/(k+1).
double eo_flux(int k, double a, double b);

// Godunov flux: min of f_k over [a,b] when a <= b, else max over [b,a];
// extrema among the endpoints and the critical point u = 0.
double godunov_flux(int k, double a, double b);

// cfl / sum_k max_speed_k/dx_k; +infinity when every wave speed vanishes.
double stable_dt(const Grid& g, double umin, double umax, double cfl);

struct CflError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContaminationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One unsplit conservative update with zero Dirichlet ghost cells:
// u_i <- u_i - sum_k (dt/dx_k) (F_k(u_i, u_{i+e_k}) - F_k(u_{i-e_k}, u_i)).
// Throws CflError if dt exceeds the monotonicity bound for the field's
// current range.
Field step(const Field& f, double dt, FluxChoice flux);

struct BoundaryReport {
  bool ok = true;
  int direction = -1;       // 0-based direction of the offending edge band
  std::vector<long> cell;   // multi-index of the offending cell
  double value = 0.0;
  std::string describe() const;
};

// ok iff every cell within 2 cells of the box edge has |u| <= tol.
BoundaryReport boundary_check(const Field& f, double tol);

// Per-run health counters backing the conservation/contraction checks.
struct RunStats {
  double mass0 = 0.0;
  double mass_drift_rel = 0.0;       // max |mass - mass0| / max(l1_0, |mass0|)
  double max_principle_excess = 0.0; // absolute range excess, max over steps
  double l1_growth_rel = 0.0;        // max row-to-row relative increase
  double linf_growth_rel = 0.0;
};

struct Trajectory {
  std::vector<NormRow> samples;             // first row at t = 0
  std::vector<std::size_t> steps_at_sample; // cumulative step count per row
  std::vector<double> dt_history;
  Field final_field;
  RunStats stats;
  double cfl = 0.0;
  FluxChoice flux = FluxChoice::engquist_osher;
  double lp_exponent = 0.0;  // Serre p used for the lp column
};

struct SolveOptions {
  double boundary_tol = 1e-12;
  // When set, the dt sequence is replayed verbatim instead of recomputed;
  // used for the exact semigroup check.
  const std::vector<double>* forced_dts = nullptr;
};

// Samples the initial data on the grid and advances to t_final, shortening
// dt to land exactly on each requested sample time. Records L1/L2/Lp/Linf
// rows per sample and runs boundary_check at each one.
Trajectory solve_to(const InitialData& u0, const Grid& grid, double t_final,
                    double cfl, std::span<const double> sample_times,
                    FluxChoice flux, const SolveOptions& opts = {});

// Same loop starting from an existing field (sample times are absolute).
Trajectory solve_from(const Field& start, double t_final, double cfl,
                      std::span<const double> sample_times, FluxChoice flux,
                      const SolveOptions& opts = {});

// Domain box from the a-priori support growth estimate: for d = 1,
// width = 1.5*(base + 2 sqrt(2 M t)); for d >= 2 a coarse pilot run measures
// the Theorem-1 constant and the conjectured speed bound is integrated with
// 100% margin. Both are capped by the rigorous max-speed bound.
Grid auto_grid(const InitialData& u0, const std::vector<int>& cells,
               double t_final, double cfl = 0.9,
               FluxChoice flux = FluxChoice::engquist_osher);

// n_per_decade log-spaced sample times from t_first to t_final inclusive.
std::vector<double> log_spaced_samples(double t_first, double t_final,
                                       int n_per_decade);

}  // namespace burgers

#endif  // BURGERS_SOLVER_HPP
