#include "burgers/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace burgers {

Profile1D::Profile1D(std::vector<double> nodes, std::vector<double> left_values,
                     std::vector<double> slopes)
    : nodes_(std::move(nodes)),
      vleft_(std::move(left_values)),
      slopes_(std::move(slopes)) {
  if (nodes_.size() < 2 || vleft_.size() + 1 != nodes_.size() ||
      slopes_.size() + 1 != nodes_.size())
    throw std::invalid_argument("Profile1D: inconsistent piece description");
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    if (!(nodes_[i] < nodes_[i + 1]))
      throw std::invalid_argument("Profile1D: nodes must be strictly increasing");
  }
  prim_.assign(nodes_.size(), 0.0);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    double w = nodes_[i + 1] - nodes_[i];
    prim_[i + 1] = prim_[i] + vleft_[i] * w + 0.5 * slopes_[i] * w * w;
  }
}

Profile1D Profile1D::zero() { return {{0.0, 1.0}, {0.0}, {0.0}}; }

Profile1D Profile1D::box(double amplitude, double lo, double hi) {
  return {{lo, hi}, {amplitude}, {0.0}};
}

Profile1D Profile1D::triangle(double amplitude, double lo, double hi) {
  double mid = 0.5 * (lo + hi);
  double h = 0.5 * (hi - lo);
  return {{lo, mid, hi}, {0.0, amplitude}, {amplitude / h, -amplitude / h}};
}

Profile1D Profile1D::two_state(double u_left, double u_right, double lo,
                               double mid, double hi) {
  return {{lo, mid, hi}, {u_left, u_right}, {0.0, 0.0}};
}

Profile1D Profile1D::from_initial_data(const InitialData& u0) {
  if (u0.dim != 1)
    throw std::invalid_argument("Profile1D: only 1-D initial data");
  double lo = u0.lo[0], hi = u0.hi[0], mid = 0.5 * (lo + hi);
  double a = u0.amplitude;
  double sl = 1.0, sr = 1.0;
  switch (u0.sign) {
    case SignPattern::plus: break;
    case SignPattern::minus: sl = sr = -1.0; break;
    case SignPattern::plus_minus: sr = -1.0; break;
    case SignPattern::minus_plus: sl = -1.0; break;
  }
  switch (u0.kind) {
    case ProfileKind::box:
      if (sl == sr) return box(sl * a, lo, hi);
      return two_state(sl * a, sr * a, lo, mid, hi);
    case ProfileKind::triangle: {
      double h = 0.5 * (hi - lo);
      return {{lo, mid, hi}, {0.0, sr * a}, {sl * a / h, -sr * a / h}};
    }
    case ProfileKind::gauss:
      throw std::invalid_argument("Profile1D: gauss data is not piecewise linear");
  }
  throw std::invalid_argument("Profile1D: unknown profile kind");
}

double Profile1D::value(double y) const {
  if (y < nodes_.front() || y >= nodes_.back()) return 0.0;
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), y);
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  return vleft_[i] + slopes_[i] * (y - nodes_[i]);
}

double Profile1D::primitive(double y) const {
  if (y <= nodes_.front()) return 0.0;
  if (y >= nodes_.back()) return prim_.back();
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), y);
  std::size_t i = static_cast<std::size_t>(it - nodes_.begin()) - 1;
  double w = y - nodes_[i];
  return prim_[i] + vleft_[i] * w + 0.5 * slopes_[i] * w * w;
}

double Profile1D::min_value() const {
  double m = 0.0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    double w = nodes_[i + 1] - nodes_[i];
    m = std::min(m, std::min(vleft_[i], vleft_[i] + slopes_[i] * w));
  }
  return m;
}

double Profile1D::max_value() const {
  double m = 0.0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    double w = nodes_[i + 1] - nodes_[i];
    m = std::max(m, std::max(vleft_[i], vleft_[i] + slopes_[i] * w));
  }
  return m;
}

namespace {

// One candidate minimizer family of G(y;x) = U0(y) + (x-y)^2/(2t):
// V(x) = qa x^2 + qb x + qc is its G-value, u(x) = ua x + ub the solution
// value it induces, valid for x in [wlo, whi]. Regimes are ordered by the
// y-position of their minimizer, which is what the left-limit tie-break uses.
struct Regime {
  double qa = 0, qb = 0, qc = 0;
  double ua = 0, ub = 0;
  double wlo = -std::numeric_limits<double>::infinity();
  double whi = std::numeric_limits<double>::infinity();
  double V(double x) const { return (qa * x + qb) * x + qc; }
  double u(double x) const { return ua * x + ub; }
  bool valid(double x, double eps) const {
    return x >= wlo - eps && x <= whi + eps;
  }
};

std::vector<Regime> build_regimes(const Profile1D& p, double t) {
  std::vector<Regime> rs;
  int n = p.piece_count();
  // left exterior: y* = x, G = 0
  {
    Regime r;
    r.whi = p.node(0);
    rs.push_back(r);
  }
  for (int i = 0; i <= n; ++i) {
    // node regime: y* = nodes[i], valid for every x
    {
      Regime r;
      double y = p.node(i);
      r.qa = 0.5 / t;
      r.qb = -y / t;
      r.qc = p.primitive(y) + 0.5 * y * y / t;
      r.ua = 1.0 / t;
      r.ub = -y / t;
      rs.push_back(r);
    }
    if (i == n) break;
    // piece regime: interior stationary point, exists iff 1 + t*m > 0
    double m = p.slope(i);
    double D = 1.0 + t * m;
    if (D <= 0.0) continue;
    double yi = p.node(i), yi1 = p.node(i + 1);
    double vi = p.left_value(i);
    double x0 = yi + t * vi;
    double x1 = yi1 + t * (vi + m * (yi1 - yi));
    Regime r;
    r.wlo = x0;
    r.whi = x1;
    r.ua = m / D;
    r.ub = (vi - m * yi) / D;
    double wa = 1.0 / D, wb = -x0 / D;  // w(x) = y*(x) - yi
    r.qa = 0.5 * m * wa * wa + 0.5 * t * r.ua * r.ua;
    r.qb = vi * wa + m * wa * wb + t * r.ua * r.ub;
    r.qc = p.primitive(yi) + vi * wb + 0.5 * m * wb * wb + 0.5 * t * r.ub * r.ub;
    rs.push_back(r);
  }
  // right exterior: y* = x, G = U0(support_hi)
  {
    Regime r;
    r.wlo = p.node(n);
    r.qc = p.primitive(p.node(n));
    rs.push_back(r);
  }
  return rs;
}

}  // namespace

double lax_oleinik_eval(const Profile1D& u0, double t, double x) {
  if (!(t > 0.0)) throw std::invalid_argument("lax_oleinik_eval: t must be > 0");
  auto regimes = build_regimes(u0, t);
  double best = std::numeric_limits<double>::infinity();
  double u = 0.0;
  for (const Regime& r : regimes) {
    if (!r.valid(x, 0.0)) continue;
    double g = r.V(x);
    if (g < best) {
      best = g;
      u = r.u(x);
    }
  }
  return u;
}

std::vector<SolutionSegment> lax_oleinik_profile(const Profile1D& u0, double t) {
  if (!(t > 0.0))
    throw std::invalid_argument("lax_oleinik_profile: t must be > 0");
  const double umin = u0.min_value();
  const double umax = u0.max_value();
  const double x_left = u0.support_lo() + t * std::min(0.0, umin);
  const double x_right = u0.support_hi() + t * std::max(0.0, umax);
  if (umin == 0.0 && umax == 0.0) return {};

  auto regimes = build_regimes(u0, t);
  const double span = x_right - x_left;
  const double eps_x =
      1e-13 * std::max({span, std::abs(x_left), std::abs(x_right), 1.0});
  double qa_scale = 0.0;
  for (const Regime& r : regimes) qa_scale = std::max(qa_scale, std::abs(r.qa));

  // Lexicographic comparison in (V, V', V''): at regime junctions V and often
  // V' agree to rounding, and the regime that is minimal just to the right of
  // x is the one with the smaller derivative, then the flatter curvature.
  const double u_scale = 1.0 + std::max(std::abs(umin), std::abs(umax));
  auto wins_at = [&](const Regime& b, const Regime& a, double x) {
    double Vb = b.V(x), Va = a.V(x);
    double tolV = 1e-10 * (1.0 + std::abs(Va) + std::abs(Vb));
    if (Vb < Va - tolV) return true;
    if (Vb > Va + tolV) return false;
    double ub = b.u(x), ua = a.u(x);
    double tolU = 1e-9 * u_scale;
    if (ub < ua - tolU) return true;
    if (ub > ua + tolU) return false;
    return b.qa < a.qa - 1e-12 * (1.0 + qa_scale);
  };
  auto pick_active = [&](double x) {
    std::size_t best = regimes.size();
    for (std::size_t i = 0; i < regimes.size(); ++i) {
      if (!regimes[i].valid(x, eps_x)) continue;
      if (best == regimes.size() || wins_at(regimes[i], regimes[best], x))
        best = i;
    }
    return best;
  };

  std::vector<SolutionSegment> segments;
  double x_cur = x_left;
  std::size_t active = pick_active(x_cur);
  const std::size_t max_iter = 200 * regimes.size() * regimes.size() + 100;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    const Regime& A = regimes[active];
    double x_end = std::min(A.whi, x_right);
    double x_event = x_end;
    for (std::size_t j = 0; j < regimes.size(); ++j) {
      if (j == active) continue;
      const Regime& B = regimes[j];
      // window-entry event: a regime entering mid-span can take over
      // tangentially (equal V and V' at its first valid point), which
      // produces no usable quadratic root
      if (B.wlo > x_cur + eps_x && B.wlo <= x_event &&
          wins_at(B, A, B.wlo))
        x_event = B.wlo;
      double lo = std::max(x_cur + eps_x, B.wlo - eps_x);
      double hi = std::min(x_event, B.whi + eps_x);
      if (lo > hi) continue;
      double da = B.qa - A.qa;
      double db = B.qb - A.qb;
      double dc = B.qc - A.qc;
      double roots[2];
      int nroots = 0;
      if (std::abs(da) <= 1e-14 * qa_scale) {
        double db_scale = qa_scale * std::max(std::abs(x_left), std::abs(x_right)) + 1e-300;
        if (std::abs(db) > 1e-14 * db_scale) {
          roots[nroots++] = -dc / db;
        }
      } else {
        double disc = db * db - 4.0 * da * dc;
        if (disc >= 0.0) {
          double sq = std::sqrt(disc);
          double q = -0.5 * (db + (db >= 0.0 ? sq : -sq));
          roots[nroots++] = q / da;
          if (q != 0.0) roots[nroots++] = dc / q;
        }
      }
      for (int ri = 0; ri < nroots; ++ri) {
        double xc = roots[ri];
        if (!(xc >= lo && xc <= hi)) continue;
        // challenger must be genuinely below the active regime a finite
        // step past the root; tangencies (double roots split by rounding)
        // stay on one side and are rejected here
        double h = std::max(256.0 * eps_x, 1e-9 * (1.0 + std::abs(xc)));
        double xafter = xc + h;
        if (!B.valid(xafter, eps_x)) continue;
        double diff = B.V(xafter) - A.V(xafter);
        double margin = 1e-14 * (1.0 + std::abs(A.V(xafter)));
        if (diff >= -margin) continue;
        if (xc < x_event) x_event = xc;
      }
    }
    SolutionSegment seg;
    seg.x_lo = x_cur;
    seg.x_hi = x_event;
    seg.u_lo = A.u(x_cur);
    seg.u_hi = A.u(x_event);
    segments.push_back(seg);
    if (x_event >= x_right - eps_x) break;
    double x_probe = std::min(x_event + 8.0 * eps_x, x_right);
    std::size_t next = pick_active(x_probe);
    if (next == regimes.size())
      throw std::logic_error("lax_oleinik_profile: no valid regime");
    if (next == active && regimes[active].valid(x_probe, 0.0) == false)
      throw std::logic_error("lax_oleinik_profile: stalled sweep");
    x_cur = x_event;
    active = next;
    if (iter + 2 >= max_iter)
      throw std::logic_error("lax_oleinik_profile: sweep did not terminate");
  }

  // cross-check each segment midpoint against the pointwise evaluator
  for (const SolutionSegment& s : segments) {
    if (s.x_hi - s.x_lo < 16.0 * eps_x) continue;
    double xm = 0.5 * (s.x_lo + s.x_hi);
    double um = 0.5 * (s.u_lo + s.u_hi);
    double upt = lax_oleinik_eval(u0, t, xm);
    if (std::abs(um - upt) > 1e-8 * u_scale) {
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "lax_oleinik_profile: sweep inconsistency at t=%g: "
                    "segment [%g,%g] gives u=%g, evaluator gives %g",
                    t, s.x_lo, s.x_hi, um, upt);
      throw std::logic_error(buf);
    }
  }
  return segments;
}

double linf_exact(const Profile1D& u0, double t) {
  auto segs = lax_oleinik_profile(u0, t);
  double m = 0.0;
  for (const auto& s : segs)
    m = std::max(m, std::max(std::abs(s.u_lo), std::abs(s.u_hi)));
  return m;
}

namespace {

// integral of |affine| over [xl, xr] with endpoint values ul, ur
double abs_trapezoid(double xl, double xr, double ul, double ur) {
  double w = xr - xl;
  if (w <= 0.0) return 0.0;
  if (ul * ur >= 0.0) return 0.5 * std::abs(ul + ur) * w;
  double root = xl + w * ul / (ul - ur);
  return 0.5 * std::abs(ul) * (root - xl) + 0.5 * std::abs(ur) * (xr - root);
}

}  // namespace

double l1_exact(const Profile1D& u0, double t) {
  auto segs = lax_oleinik_profile(u0, t);
  double sum = 0.0;
  for (const auto& s : segs) sum += abs_trapezoid(s.x_lo, s.x_hi, s.u_lo, s.u_hi);
  return sum;
}

double integrate_solution(const Profile1D& u0, double t, double a, double b) {
  if (!(b >= a)) throw std::invalid_argument("integrate_solution: b < a");
  auto segs = lax_oleinik_profile(u0, t);
  double sum = 0.0;
  for (const auto& s : segs) {
    double xl = std::max(a, s.x_lo);
    double xr = std::min(b, s.x_hi);
    if (xr <= xl) continue;
    double w = s.x_hi - s.x_lo;
    double ul = w > 0 ? s.u_lo + (s.u_hi - s.u_lo) * (xl - s.x_lo) / w : s.u_lo;
    double ur = w > 0 ? s.u_lo + (s.u_hi - s.u_lo) * (xr - s.x_lo) / w : s.u_hi;
    sum += 0.5 * (ul + ur) * (xr - xl);
  }
  return sum;
}

double nwave_peak(double mass, double t) {
  if (!(mass > 0.0) || !(t > 0.0))
    throw std::invalid_argument("nwave_peak: mass and t must be positive");
  return std::sqrt(2.0 * mass / t);
}

}  // namespace burgers
