#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "burgers/oracle.hpp"
#include "burgers/solver.hpp"

using namespace burgers;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("profile bookkeeping") {
  auto tri = Profile1D::triangle(1.0, 0.0, 2.0);
  CHECK(tri.value(1.0) == 1.0);
  CHECK(tri.value(0.5) == 0.5);
  CHECK(tri.value(-0.1) == 0.0);
  CHECK(tri.value(2.1) == 0.0);
  CHECK(tri.primitive(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(tri.primitive(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(tri.mass() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(tri.min_value() == 0.0);
  CHECK(tri.max_value() == 1.0);

  auto ts = Profile1D::two_state(-1.0, 1.0, -4.0, 0.0, 4.0);
  CHECK(ts.value(-1.0) == -1.0);
  CHECK(ts.value(1.0) == 1.0);
  CHECK(ts.primitive(4.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(ts.min_value() == -1.0);

  CHECK_THROWS_AS(Profile1D({0.0, 0.0}, {1.0}, {0.0}), std::invalid_argument);
}

TEST_CASE("from_initial_data mirrors the solver-side profiles") {
  auto box = InitialData::make(ProfileKind::box, 1, 1.0, {-4.0}, {4.0},
                               SignPattern::minus_plus);
  auto p = Profile1D::from_initial_data(box);
  CHECK(p.value(-2.0) == -1.0);
  CHECK(p.value(2.0) == 1.0);
  auto gauss = InitialData::make(ProfileKind::gauss, 1, 1.0, {0.0}, {1.0});
  CHECK_THROWS_AS(Profile1D::from_initial_data(gauss), std::invalid_argument);
}

TEST_CASE("lax-oleinik pointwise values on riemann data") {
  // uL=1, uR=0: shock from x = 0 at speed 1/2
  auto shock = Profile1D::box(1.0, -8.0, 0.0);
  CHECK(lax_oleinik_eval(shock, 1.0, 0.4) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lax_oleinik_eval(shock, 1.0, 0.6) == doctest::Approx(0.0).epsilon(1e-12));

  // uL=0, uR=1: rarefaction fan u = x/t
  auto fan = Profile1D::box(1.0, 0.0, 8.0);
  CHECK(lax_oleinik_eval(fan, 1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lax_oleinik_eval(fan, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

  // far left of the support nothing has arrived
  CHECK(lax_oleinik_eval(fan, 1.0, -3.0) == 0.0);
  CHECK_THROWS_AS(lax_oleinik_eval(fan, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("triangle sup norm in closed form") {
  auto tri = Profile1D::triangle(1.0, 0.0, 2.0);
  // the peak survives until the shock forms at t = 1 ...
  CHECK(linf_exact(tri, 0.25) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(linf_exact(tri, 0.999) == doctest::Approx(1.0).epsilon(1e-9));
  // ... after which the left state of the shock is sqrt(2/(1+t))
  for (double t : {3.0, 100.0, 1e3, 1e4}) {
    CHECK(linf_exact(tri, t) ==
          doctest::Approx(std::sqrt(2.0 / (1.0 + t))).epsilon(1e-10));
  }
  CHECK(linf_exact(Profile1D::zero(), 5.0) == 0.0);
}

TEST_CASE("n-wave amplitude asymptotics against the oracle") {
  auto tri = Profile1D::triangle(1.0, 0.0, 2.0);
  for (double t : {1e2, 1e3, 1e4}) {
    double scaled = std::sqrt(t) * linf_exact(tri, t);
    double rel = std::abs(scaled - std::sqrt(2.0)) / std::sqrt(2.0);
    CHECK(rel < 0.01);
  }
  CHECK(nwave_peak(1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(nwave_peak(2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(nwave_peak(1.0, 100.0) ==
        doctest::Approx(std::sqrt(0.02)).epsilon(1e-15));
  CHECK_THROWS_AS(nwave_peak(-1.0, 1.0), std::invalid_argument);
}

namespace {

std::vector<std::pair<Profile1D, const char*>> interesting_profiles() {
  std::vector<std::pair<Profile1D, const char*>> out;
  out.emplace_back(Profile1D::triangle(1.0, 0.0, 2.0), "triangle");
  out.emplace_back(Profile1D::triangle(-0.7, -1.0, 3.0), "neg triangle");
  out.emplace_back(Profile1D::box(1.0, -1.0, 1.0), "box");
  out.emplace_back(Profile1D::box(-0.5, 0.0, 3.0), "neg box");
  out.emplace_back(Profile1D::two_state(-1.0, 1.0, -4.0, 0.0, 4.0), "-+ states");
  out.emplace_back(Profile1D::two_state(1.0, -1.0, -4.0, 0.0, 4.0), "+- states");
  out.emplace_back(
      Profile1D({-2.0, -1.0, 0.5, 1.0, 3.0}, {0.3, -0.8, 0.0, 1.2},
                {0.5, 0.4, 2.0, -0.6}),
      "generic 4-piece");
  return out;
}

}  // namespace

TEST_CASE("envelope sweep agrees with pointwise evaluation") {
  for (auto& [profile, name] : interesting_profiles()) {
    CAPTURE(name);
    for (double t : {0.3, 1.0, 2.7, 10.0, 500.0}) {
      CAPTURE(t);
      auto segs = lax_oleinik_profile(profile, t);
      REQUIRE(!segs.empty());
      // segments tile an interval: contiguous, increasing
      for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
        CHECK(segs[i].x_hi == doctest::Approx(segs[i + 1].x_lo).epsilon(1e-12));
        CHECK(segs[i].x_lo < segs[i].x_hi + 1e-12);
      }
      double xa = segs.front().x_lo, xb = segs.back().x_hi;
      double span = xb - xa;
      std::mt19937_64 rng(1234);
      int checked = 0;
      for (int i = 0; i < 600; ++i) {
        double x = xa + span * (static_cast<double>(rng() % 100000) / 100000.0);
        // skip points too close to a segment boundary (shock jumps)
        bool near_boundary = false;
        const SolutionSegment* inseg = nullptr;
        for (const auto& s : segs) {
          if (std::abs(x - s.x_lo) < 1e-6 * span ||
              std::abs(x - s.x_hi) < 1e-6 * span)
            near_boundary = true;
          if (x >= s.x_lo && x <= s.x_hi) inseg = &s;
        }
        if (near_boundary || inseg == nullptr) continue;
        double w = inseg->x_hi - inseg->x_lo;
        double useg =
            inseg->u_lo + (inseg->u_hi - inseg->u_lo) * (x - inseg->x_lo) / w;
        double upt = lax_oleinik_eval(profile, t, x);
        CHECK(std::abs(useg - upt) <= 1e-9);
        ++checked;
      }
      CHECK(checked > 400);
    }
  }
}

TEST_CASE("oracle weak form: flux balance on random intervals") {
  // adaptive Simpson in time handles shocks crossing the interval ends
  std::function<double(const std::function<double(double)>&, double, double,
                       double, double, double, int)>
      adapt = [&](const std::function<double(double)>& g, double a, double b,
                  double fa, double fb, double fm, int depth) -> double {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = g(lm), frm = g(rm);
    double whole = (b - a) / 6.0 * (fa + 4 * fm + fb);
    double left = (m - a) / 6.0 * (fa + 4 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4 * frm + fb);
    if (depth > 48 || std::abs(left + right - whole) < 1e-12)
      return left + right;
    return adapt(g, a, m, fa, fm, flm, depth + 1) +
           adapt(g, m, b, fm, fb, frm, depth + 1);
  };
  auto integrate_time = [&](const std::function<double(double)>& g, double a,
                            double b) {
    return adapt(g, a, b, g(a), g(b), g(0.5 * (a + b)), 0);
  };

  std::mt19937_64 rng(4242);
  for (auto& [profile, name] : interesting_profiles()) {
    CAPTURE(name);
    for (int trial = 0; trial < 4; ++trial) {
      double t1 = 0.5 + 0.1 * static_cast<double>(rng() % 20);
      double t2 = t1 + 0.3 + 0.1 * static_cast<double>(rng() % 10);
      double a = profile.support_lo() - 2.0 +
                 4.0 * (static_cast<double>(rng() % 1000) / 1000.0);
      double b = a + 1.0 + 5.0 * (static_cast<double>(rng() % 1000) / 1000.0);
      double lhs = integrate_solution(profile, t2, a, b) -
                   integrate_solution(profile, t1, a, b);
      auto flux_at = [&](double x) {
        return [&profile, x](double tau) {
          double u = lax_oleinik_eval(profile, tau, x);
          return 0.5 * u * u;
        };
      };
      double rhs = -(integrate_time(flux_at(b), t1, t2) -
                     integrate_time(flux_at(a), t1, t2));
      CHECK(std::abs(lhs - rhs) < 1e-8);
    }
  }
}

TEST_CASE("oracle norms are non-increasing in time") {
  auto profiles = interesting_profiles();
  for (auto& [profile, name] : profiles) {
    CAPTURE(name);
    double prev_l1 = std::numeric_limits<double>::infinity();
    for (double t : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
      double l1 = l1_exact(profile, t);
      CHECK(l1 <= prev_l1 * (1 + 1e-9));
      prev_l1 = l1;
    }
  }
  // single-signed data: Linf non-increasing as well
  auto tri = Profile1D::triangle(1.0, 0.0, 2.0);
  double prev = std::numeric_limits<double>::infinity();
  for (double t : {0.5, 1.0, 2.0, 5.0, 20.0}) {
    double v = linf_exact(tri, t);
    CHECK(v <= prev * (1 + 1e-12));
    prev = v;
  }
  // and its L1 norm is exactly the conserved mass
  for (double t : {0.5, 2.0, 50.0})
    CHECK(l1_exact(tri, t) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("solver converges to the oracle at first order") {
  auto riemann = InitialData::make(ProfileKind::box, 1, 1.0, {-4.0}, {4.0},
                                   SignPattern::minus_plus);
  auto oracle = Profile1D::from_initial_data(riemann);
  std::vector<double> errors;
  for (int n : {256, 512, 1024}) {
    Grid g = Grid::make(1, {n}, {-6.0}, {6.0});
    std::vector<double> ts{1.0};
    Trajectory traj = solve_to(riemann, g, 1.0, 0.9, ts,
                               FluxChoice::engquist_osher);
    double err = 0.0;
    for (long i = 0; i < n; ++i) {
      double x = g.cell_center(0, i);
      err += std::abs(traj.final_field.values[i] -
                      lax_oleinik_eval(oracle, 1.0, x)) *
             g.dx[0];
    }
    errors.push_back(err);
  }
  CHECK(errors[0] / errors[1] >= 1.6);
  CHECK(errors[1] / errors[2] >= 1.6);

  // triangle with a shock: error contraction >= 1.7 per halving here too
  auto tri = InitialData::make(ProfileKind::triangle, 1, 1.0, {0.0}, {2.0});
  auto tri_oracle = Profile1D::from_initial_data(tri);
  errors.clear();
  for (int n : {256, 512, 1024, 2048}) {
    Grid g = Grid::make(1, {n}, {-2.0}, {8.0});
    std::vector<double> ts{3.0};
    Trajectory traj = solve_to(tri, g, 3.0, 0.9, ts, FluxChoice::engquist_osher);
    double err = 0.0;
    for (long i = 0; i < n; ++i) {
      double x = g.cell_center(0, i);
      err += std::abs(traj.final_field.values[i] -
                      lax_oleinik_eval(tri_oracle, 3.0, x)) *
             g.dx[0];
    }
    errors.push_back(err);
  }
  CHECK(errors[0] / errors[1] >= 1.7);
  CHECK(errors[1] / errors[2] >= 1.7);
  CHECK(errors[2] / errors[3] >= 1.7);
}

TEST_SUITE_END();
