#include "burgers/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "burgers/exponents.hpp"

namespace burgers::analysis {

DecaySeries DecaySeries::from_trajectory(int dim, const Trajectory& traj) {
  DecaySeries s;
  s.dim = dim;
  s.p = traj.lp_exponent;
  s.rows = traj.samples;
  if (!s.rows.empty()) {
    s.l1_0 = s.rows.front().l1;
    s.linf_0 = s.rows.front().linf;
  }
  s.validate();
  return s;
}

void DecaySeries::validate() const {
  double prev_t = -std::numeric_limits<double>::infinity();
  double prev_l1 = std::numeric_limits<double>::infinity();
  for (const NormRow& r : rows) {
    if (!(r.t > prev_t))
      throw std::invalid_argument("DecaySeries: sample times not increasing");
    if (r.l1 < 0 || r.l2 < 0 || r.lp < 0 || r.linf < 0)
      throw std::invalid_argument("DecaySeries: negative norm");
    if (r.l1 > prev_l1 * (1.0 + 1e-10))
      throw std::invalid_argument("DecaySeries: L1 norm increased along rows");
    prev_t = r.t;
    prev_l1 = r.l1;
  }
}

void DecaySeries::write_csv(std::ostream& os) const {
  os << "t,l1,l2,lp,linf\n";
  char buf[160];
  for (const NormRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", r.t, r.l1,
                  r.l2, r.lp, r.linf);
    os << buf;
  }
}

NormColumn norm_column_from_string(std::string_view s) {
  if (s == "l1") return NormColumn::l1;
  if (s == "l2") return NormColumn::l2;
  if (s == "lp") return NormColumn::lp;
  if (s == "linf") return NormColumn::linf;
  throw std::invalid_argument("unknown norm column: " + std::string(s));
}

namespace {

double column_value(const NormRow& r, NormColumn c) {
  switch (c) {
    case NormColumn::l1: return r.l1;
    case NormColumn::l2: return r.l2;
    case NormColumn::lp: return r.lp;
    case NormColumn::linf: return r.linf;
  }
  return 0.0;
}

}  // namespace

FitResult fit_slope(const DecaySeries& series, NormColumn column, double t_lo,
                    double t_hi) {
  std::vector<std::pair<double, double>> pts;  // (log t, log norm)
  for (const NormRow& r : series.rows) {
    if (r.t < t_lo || r.t > t_hi || r.t <= 0.0) continue;
    double v = column_value(r, column);
    if (!(v > 0.0))
      throw std::invalid_argument("fit_slope: nonpositive norm in window");
    pts.emplace_back(std::log(r.t), std::log(v));
  }
  if (pts.size() < 3)
    throw std::invalid_argument("fit_slope: fewer than 3 rows in window");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(pts.size());
  double denom = n * sxx - sx * sx;
  FitResult fit;
  fit.rows_used = static_cast<int>(pts.size());
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  for (auto [x, y] : pts)
    fit.max_residual =
        std::max(fit.max_residual, std::abs(y - (fit.intercept + fit.slope * x)));
  return fit;
}

void BoundReport::write_text(std::ostream& os) const {
  char buf[128];
  os << "report " << id << "\n";
  os << "dim = " << dim << "\n";
  os << "gamma = " << gamma.to_string() << "\n";
  os << "t_exponent = " << t_exponent.to_string() << "\n";
  if (id == "eq3") os << "theta = " << theta.to_string() << "\n";
  std::snprintf(buf, sizeof buf, "window = %.17g %.17g\n", window_lo, window_hi);
  os << buf;
  std::snprintf(buf, sizeof buf, "sup_ratio = %.17g\n", sup_ratio);
  os << buf;
  os << "rows t ratio\n";
  for (const auto& [t, r] : ratios) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", t, r);
    os << buf;
  }
}

namespace {

BoundReport ratio_report(const DecaySeries& series, std::string id,
                         NormColumn column, const Rational& l1_exp,
                         const Rational& t_exp, const Rational& theta_exp,
                         double window_lo, double window_hi) {
  BoundReport rep;
  rep.id = std::move(id);
  rep.dim = series.dim;
  rep.gamma = l1_exp;
  rep.t_exponent = t_exp;
  rep.theta = theta_exp;
  rep.window_lo = window_lo;
  rep.window_hi = window_hi;
  double denom;
  if (series.l1_0 == 0.0) {
    // zero data: every row must be zero too, and the ratio is defined as 0
    for (const NormRow& r : series.rows) {
      if (column_value(r, column) != 0.0)
        throw std::invalid_argument(
            "bound ratio: zero initial L1 with nonzero norms");
    }
    denom = 1.0;
  } else {
    denom = std::pow(series.l1_0, l1_exp.to_double()) *
            std::pow(series.linf_0, theta_exp.to_double());
  }
  double te = t_exp.to_double();
  for (const NormRow& r : series.rows) {
    if (r.t <= 0.0 || r.t < window_lo || r.t > window_hi) continue;
    double ratio = column_value(r, column) * std::pow(r.t, te) / denom;
    rep.ratios.emplace_back(r.t, ratio);
    rep.sup_ratio = std::max(rep.sup_ratio, ratio);
  }
  return rep;
}

}  // namespace

BoundReport thm1_ratio(const DecaySeries& series, double window_lo,
                       double window_hi) {
  Rational g0 = exponents::gamma0(series.dim);
  return ratio_report(series, "thm1", NormColumn::linf, g0,
                      Rational(series.dim) * g0, Rational(0), window_lo,
                      window_hi);
}

BoundReport serre_ratio(const DecaySeries& series, double window_lo,
                        double window_hi) {
  auto se = exponents::serre_exponents(series.dim);
  return ratio_report(series, "serre", NormColumn::lp, se.gamma, se.delta,
                      Rational(0), window_lo, window_hi);
}

BoundReport eq3_ratio(const DecaySeries& series, const Rational& gamma,
                      double window_lo, double window_hi) {
  Rational th = exponents::theta(series.dim, gamma);  // validates the range
  return ratio_report(series, "eq3", NormColumn::linf, gamma,
                      Rational(series.dim) * gamma, th, window_lo, window_hi);
}

double interpolation_violation(const DecaySeries& series) {
  double worst = -std::numeric_limits<double>::infinity();
  double inv_p = 1.0 / series.p;
  for (const NormRow& r : series.rows) {
    double bound = std::pow(r.l1, inv_p) * std::pow(r.linf, 1.0 - inv_p);
    double scale = std::max(bound, 1e-300);
    worst = std::max(worst, (r.lp - bound) / scale);
  }
  return worst;
}

double semigroup_residual(const InitialData& u0, const Grid& grid, double t,
                          double cfl, FluxChoice flux, bool forced_identical) {
  if (!(t > 0.0)) throw std::invalid_argument("semigroup_residual: t <= 0");
  double half = 0.5 * t;
  // the forced mode needs a step boundary at t/2 to split the schedule;
  // the independent mode deliberately lets the full run step across it
  std::vector<double> full_samples =
      forced_identical ? std::vector<double>{half, t} : std::vector<double>{t};
  Trajectory full = solve_to(u0, grid, t, cfl, full_samples, flux);

  SolveOptions opts_a, opts_b;
  std::vector<double> prefix, suffix;
  if (forced_identical) {
    std::size_t split = 0;
    for (std::size_t i = 0; i < full.samples.size(); ++i) {
      if (full.samples[i].t == half) split = full.steps_at_sample[i];
    }
    prefix.assign(full.dt_history.begin(), full.dt_history.begin() + split);
    suffix.assign(full.dt_history.begin() + split, full.dt_history.end());
    opts_a.forced_dts = &prefix;
    opts_b.forced_dts = &suffix;
  }
  std::vector<double> first{half};
  Trajectory leg_a = solve_to(u0, grid, half, cfl, first, flux, opts_a);
  std::vector<double> second{t};
  Trajectory leg_b =
      solve_from(leg_a.final_field, t, cfl, second, flux, opts_b);

  if (leg_b.final_field.values.size() != full.final_field.values.size())
    throw std::invalid_argument("semigroup_residual: mismatched legs");
  double worst = 0.0;
  for (std::size_t i = 0; i < full.final_field.values.size(); ++i)
    worst = std::max(worst, std::abs(leg_b.final_field.values[i] -
                                     full.final_field.values[i]));
  return worst;
}

Grid scaled_grid(const Grid& base, const ScalingParams& params) {
  std::vector<double> lo(base.dim), hi(base.dim);
  for (int k = 0; k < base.dim; ++k) {
    double a = params.space_factor(k + 1);
    lo[k] = base.lo[k] / a;
    hi[k] = base.hi[k] / a;
  }
  return Grid::make(base.dim, base.cells, std::move(lo), std::move(hi));
}

double scaling_residual(const InitialData& u0, const ScalingParams& params,
                        const Grid& base, const Grid& scaled, double t,
                        double cfl, FluxChoice flux,
                        std::span<const double> sample_times) {
  if (base.dim != scaled.dim || base.cells != scaled.cells)
    throw std::invalid_argument("scaling_residual: mismatched grids");
  for (int k = 0; k < base.dim; ++k) {
    double a = params.space_factor(k + 1);
    double tol = 1e-9 * (std::abs(base.lo[k] / a) + std::abs(base.hi[k] / a));
    if (std::abs(scaled.lo[k] - base.lo[k] / a) > tol ||
        std::abs(scaled.hi[k] - base.hi[k] / a) > tol)
      throw std::invalid_argument(
          "scaling_residual: grids not related by the scaling");
  }
  std::vector<double> base_times(sample_times.begin(), sample_times.end());
  std::sort(base_times.begin(), base_times.end());
  std::vector<double> scaled_times(base_times.size());
  for (std::size_t i = 0; i < base_times.size(); ++i)
    scaled_times[i] = base_times[i] / params.s;

  Trajectory run_base = solve_to(u0, base, t, cfl, base_times, flux);
  InitialData v0 = apply_scaling(params, u0);
  Trajectory run_scaled =
      solve_to(v0, scaled, t / params.s, cfl, scaled_times, flux);

  DecaySeries sb = DecaySeries::from_trajectory(base.dim, run_base);
  DecaySeries ss = DecaySeries::from_trajectory(base.dim, run_scaled);
  // compare R rows at corresponding times t and t/s (skip the t = 0 rows)
  BoundReport rb = thm1_ratio(sb, 0.0, kInf);
  BoundReport rs = thm1_ratio(ss, 0.0, kInf);
  if (rb.ratios.size() != rs.ratios.size())
    throw std::invalid_argument("scaling_residual: sample row mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < rb.ratios.size(); ++i) {
    double a = rb.ratios[i].second;
    double b = rs.ratios[i].second;
    double scale = std::max({std::abs(a), std::abs(b), 1e-300});
    worst = std::max(worst, std::abs(a - b) / scale);
  }
  return worst;
}

}  // namespace burgers::analysis
