#include "burgers/equation.hpp"

#include <cmath>
#include <stdexcept>

namespace burgers {

double int_pow(double u, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= u;
  return r;
}

FluxModel::FluxModel(int d) : dim(d) {
  if (d < 1) throw std::invalid_argument("FluxModel: dimension must be >= 1");
}

namespace {
void require_direction(int k, int dim) {
  if (k < 1 || k > dim)
    throw std::invalid_argument("FluxModel: direction index out of range");
}
}  // namespace

double FluxModel::flux(int k, double u) const {
  require_direction(k, dim);
  return int_pow(u, k + 1) / (k + 1);
}

double FluxModel::flux_derivative(int k, double u) const {
  require_direction(k, dim);
  return int_pow(u, k);
}

double FluxModel::max_wave_speed(int k, double umin, double umax) const {
  require_direction(k, dim);
  if (umin > umax)
    throw std::invalid_argument("max_wave_speed: umin > umax");
  return int_pow(std::max(std::abs(umin), std::abs(umax)), k);
}

std::string to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::box: return "box";
    case ProfileKind::triangle: return "triangle";
    case ProfileKind::gauss: return "gauss";
  }
  return "?";
}

std::string to_string(SignPattern s) {
  switch (s) {
    case SignPattern::plus: return "+";
    case SignPattern::minus: return "-";
    case SignPattern::plus_minus: return "+-";
    case SignPattern::minus_plus: return "-+";
  }
  return "?";
}

ProfileKind profile_kind_from_string(std::string_view s) {
  if (s == "box") return ProfileKind::box;
  if (s == "triangle") return ProfileKind::triangle;
  if (s == "gauss") return ProfileKind::gauss;
  throw std::invalid_argument("unknown profile kind: " + std::string(s));
}

SignPattern sign_pattern_from_string(std::string_view s) {
  if (s == "+") return SignPattern::plus;
  if (s == "-") return SignPattern::minus;
  if (s == "+-") return SignPattern::plus_minus;
  if (s == "-+") return SignPattern::minus_plus;
  throw std::invalid_argument("unknown sign pattern: " + std::string(s));
}

double gauss_clip_radius() { return std::sqrt(-2.0 * std::log(kGaussClip)); }

InitialData InitialData::make(ProfileKind kind, int dim, double amplitude,
                              std::vector<double> lo, std::vector<double> hi,
                              SignPattern sign) {
  if (dim < 1) throw std::invalid_argument("InitialData: dimension must be >= 1");
  if (lo.size() != static_cast<std::size_t>(dim) ||
      hi.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("InitialData: support box rank mismatch");
  for (int k = 0; k < dim; ++k) {
    if (!(lo[k] < hi[k]))
      throw std::invalid_argument("InitialData: empty support interval");
  }
  if (!std::isfinite(amplitude))
    throw std::invalid_argument("InitialData: non-finite amplitude");
  InitialData u0;
  u0.kind = kind;
  u0.dim = dim;
  u0.amplitude = amplitude;
  u0.lo = std::move(lo);
  u0.hi = std::move(hi);
  u0.sign = sign;
  return u0;
}

double InitialData::value(std::span<const double> x) const {
  double shape = 1.0;
  switch (kind) {
    case ProfileKind::box: {
      for (int k = 0; k < dim; ++k) {
        if (x[k] < lo[k] || x[k] > hi[k]) return 0.0;
      }
      break;
    }
    case ProfileKind::triangle: {
      for (int k = 0; k < dim; ++k) {
        double h = 0.5 * support_width(k);
        double r = std::abs(x[k] - support_center(k)) / h;
        if (r >= 1.0) return 0.0;
        shape *= 1.0 - r;
      }
      break;
    }
    case ProfileKind::gauss: {
      double rclip = gauss_clip_radius();
      double r2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        double sigma = 0.5 * support_width(k) / rclip;
        double z = (x[k] - support_center(k)) / sigma;
        r2 += z * z;
      }
      if (r2 > rclip * rclip) return 0.0;
      shape = std::exp(-0.5 * r2);
      break;
    }
  }
  double s = 1.0;
  switch (sign) {
    case SignPattern::plus: break;
    case SignPattern::minus: s = -1.0; break;
    case SignPattern::plus_minus: s = x[0] < support_center(0) ? 1.0 : -1.0; break;
    case SignPattern::minus_plus: s = x[0] < support_center(0) ? -1.0 : 1.0; break;
  }
  return amplitude * shape * s;
}

double InitialData::sup_norm() const { return std::abs(amplitude); }

double InitialData::l1_mass_estimate() const {
  double m = std::abs(amplitude);
  for (int k = 0; k < dim; ++k) {
    double w = support_width(k);
    switch (kind) {
      case ProfileKind::box: m *= w; break;
      case ProfileKind::triangle: m *= 0.5 * w; break;
      case ProfileKind::gauss: {
        double rclip = gauss_clip_radius();
        double sigma = 0.5 * w / rclip;
        m *= sigma * std::sqrt(2.0 * M_PI) * std::erf(rclip / std::sqrt(2.0));
        break;
      }
    }
  }
  return m;
}

ScalingParams::ScalingParams(double lambda_, double s_) : lambda(lambda_), s(s_) {
  if (!(lambda > 0.0) || !(s > 0.0))
    throw std::invalid_argument("ScalingParams: lambda and s must be positive");
}

double ScalingParams::space_factor(int k) const {
  if (k < 1) throw std::invalid_argument("space_factor: direction must be >= 1");
  return s / int_pow(lambda, k);
}

InitialData apply_scaling(const ScalingParams& params, const InitialData& u0) {
  InitialData v0 = u0;
  v0.amplitude = params.lambda * u0.amplitude;
  for (int k = 0; k < u0.dim; ++k) {
    double a = params.space_factor(k + 1);
    v0.lo[k] = u0.lo[k] / a;
    v0.hi[k] = u0.hi[k] / a;
  }
  return v0;
}

double l1_scale_factor(const ScalingParams& params, int dim) {
  if (dim < 1) throw std::invalid_argument("l1_scale_factor: dimension must be >= 1");
  int lambda_exp = 1 + dim * (dim + 1) / 2;
  return int_pow(params.lambda, lambda_exp) / int_pow(params.s, dim);
}

}  // namespace burgers
