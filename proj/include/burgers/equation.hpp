#ifndef BURGERS_EQUATION_HPP
#define BURGERS_EQUATION_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace burgers {

// u^k by repeated multiplication; exact and fast for the small integer
// exponents of the monomial flux family.
double int_pow(double u, int k);

// Flux family of u_t + u u_{x_1} + ... + u^d u_{x_d} = 0 in conservative
// form: f_k(u) = u^{k+1}/(k+1) for directions k = 1..d, so f_k' = u^k.
struct FluxModel {
  int dim;
  explicit FluxModel(int d);
  double flux(int k, double u) const;
  double flux_derivative(int k, double u) const;
  // max over u in [umin, umax] of |u^k| = max(|umin|, |umax|)^k
  double max_wave_speed(int k, double umin, double umax) const;
};

enum class ProfileKind { box, triangle, gauss };
enum class SignPattern { plus, minus, plus_minus, minus_plus };

std::string to_string(ProfileKind k);
std::string to_string(SignPattern s);
ProfileKind profile_kind_from_string(std::string_view s);
SignPattern sign_pattern_from_string(std::string_view s);

// Relative clip level of the truncated Gaussian profile, and the matching
// support radius in units of sigma: exp(-r^2/2) = 1e-6 at r = rclip.
inline constexpr double kGaussClip = 1e-6;
double gauss_clip_radius();

// Analytic initial-data description: amplitude times a tensor-product unit
// shape over an axis-aligned support box, optionally sign-split at the
// direction-1 midpoint. Kept analytic so the scaling group acts exactly;
// sampling onto grids happens only in the solver.
struct InitialData {
  ProfileKind kind = ProfileKind::triangle;
  int dim = 1;
  double amplitude = 1.0;
  std::vector<double> lo, hi;  // support box, lo[k] < hi[k]
  SignPattern sign = SignPattern::plus;

  static InitialData make(ProfileKind kind, int dim, double amplitude,
                          std::vector<double> lo, std::vector<double> hi,
                          SignPattern sign = SignPattern::plus);

  double value(std::span<const double> x) const;
  double sup_norm() const;
  // Exact for box/triangle; for gauss the per-direction clipped integrals are
  // multiplied, which slightly overestimates the ellipsoid-clipped mass in
  // d >= 2. Used for domain sizing, not for norm assertions.
  double l1_mass_estimate() const;
  double support_center(int k) const { return 0.5 * (lo[k] + hi[k]); }
  double support_width(int k) const { return hi[k] - lo[k]; }
};

// Two-parameter scaling group: v(t,x) = lambda * u(s t, a_1 x_1, .., a_d x_d)
// with a_k = s * lambda^{-k} maps entropy solutions to entropy solutions.
struct ScalingParams {
  double lambda = 1.0;
  double s = 1.0;
  ScalingParams(double lambda_, double s_);
  double space_factor(int k) const;  // a_k
};

// v0(x) = lambda * u0(a_1 x_1, ..., a_d x_d), acting exactly on the
// analytic description.
InitialData apply_scaling(const ScalingParams& params, const InitialData& u0);

// ||v0||_L1 / ||u0||_L1 = lambda^{1 + d(d+1)/2} * s^{-d}
double l1_scale_factor(const ScalingParams& params, int dim);

}  // namespace burgers

#endif  // BURGERS_EQUATION_HPP
