#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "burgers/norms.hpp"
#include "burgers/solver.hpp"

using namespace burgers;

TEST_SUITE_BEGIN("solver");

TEST_CASE("engquist-osher closed form") {
  CHECK(eo_flux(1, 1.0, 0.0) == 0.5);
  CHECK(eo_flux(1, -1.0, 1.0) == 0.0);  // transonic rarefaction states
  CHECK(eo_flux(2, -1.0, 5.0) == doctest::Approx(-1.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(eo_flux(0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("godunov closed form") {
  CHECK(godunov_flux(1, 0.0, -1.0) == 0.5);
  CHECK(godunov_flux(1, -1.0, 1.0) == 0.0);
  CHECK(godunov_flux(1, 2.0, 3.0) == 2.0);
  CHECK_THROWS_AS(godunov_flux(-1, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("numerical fluxes are consistent and monotone") {
  for (int k = 1; k <= 3; ++k) {
    for (double a = -2.0; a <= 2.0; a += 0.25) {
      double exact = int_pow(a, k + 1) / (k + 1);
      CHECK(eo_flux(k, a, a) == doctest::Approx(exact).epsilon(1e-14));
      CHECK(godunov_flux(k, a, a) == doctest::Approx(exact).epsilon(1e-14));
    }
    const double h = 1e-4;
    for (double a = -2.0; a <= 2.0; a += 0.2) {
      for (double b = -2.0; b <= 2.0; b += 0.2) {
        CHECK(eo_flux(k, a + h, b) >= eo_flux(k, a, b) - 1e-12);
        CHECK(eo_flux(k, a, b + h) <= eo_flux(k, a, b) + 1e-12);
        CHECK(godunov_flux(k, a + h, b) >= godunov_flux(k, a, b) - 1e-12);
        CHECK(godunov_flux(k, a, b + h) <= godunov_flux(k, a, b) + 1e-12);
      }
    }
  }
}

TEST_CASE("stable dt") {
  Grid g1 = Grid::make(1, {4}, {0.0}, {2.0});  // dx = 1/2
  CHECK(stable_dt(g1, -1.0, 1.0, 0.9) == doctest::Approx(0.45).epsilon(1e-15));
  Grid g2 = Grid::make(1, {2}, {0.0}, {2.0});  // dx = 1
  CHECK(std::isinf(stable_dt(g2, 0.0, 0.0, 0.9)));
  Grid g3 = Grid::make(2, {2, 2}, {0.0, 0.0}, {2.0, 2.0});  // dx = (1,1)
  CHECK(stable_dt(g3, -1.0, 2.0, 0.8) ==
        doctest::Approx(2.0 / 15).epsilon(1e-15));
  CHECK_THROWS_AS(stable_dt(g1, 1.0, -1.0, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(stable_dt(g1, -1.0, 1.0, 1.5), std::invalid_argument);
}

TEST_CASE("grid guards") {
  CHECK_THROWS_AS(Grid::make(1, {0}, {0.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(1, {4}, {1.0}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(2, {1 << 15, 1 << 15}, {0.0, 0.0}, {1.0, 1.0}),
                  std::invalid_argument);  // 2^30 cells over budget
}

TEST_CASE("step leaves locally constant stencils unchanged") {
  Grid g = Grid::make(1, {64}, {-2.0}, {2.0});
  Field f;
  f.grid = g;
  f.values.assign(64, 0.0);
  for (int i = 8; i < 56; ++i) f.values[i] = 0.7;  // constant plateau
  Field g1 = step(f, 0.01, FluxChoice::engquist_osher);
  // interior of the plateau sees a constant stencil: all flux differences vanish
  for (int i = 10; i < 54; ++i) CHECK(g1.values[i] == 0.7);
  CHECK(g1.time == doctest::Approx(0.01));
}

TEST_CASE("step rejects CFL violations and enforces the max principle") {
  Grid g = Grid::make(1, {128}, {-4.0}, {4.0});
  auto tri = InitialData::make(ProfileKind::triangle, 1, 1.0, {-1.0}, {1.0});
  Field f = Field::sample(tri, g);
  double dx = g.dx[0];
  CHECK_THROWS_AS(step(f, 2.0 * dx, FluxChoice::engquist_osher), CflError);

  std::mt19937_64 rng(99);
  for (FluxChoice flux : {FluxChoice::engquist_osher, FluxChoice::godunov}) {
    Field u = Field::sample(tri, g);
    double lo0 = u.min_value(), hi0 = u.max_value();
    for (int it = 0; it < 60; ++it) {
      double dt = stable_dt(u.grid, u.min_value(), u.max_value(), 0.9);
      u = step(u, dt, flux);
      CHECK(u.min_value() >= lo0 - 1e-12);
      CHECK(u.max_value() <= hi0 + 1e-12);
    }
  }
}

TEST_CASE("1-D riemann shock travels at speed (uL+uR)/2") {
  // u0 = 1 on [-4, 0], 0 elsewhere; shock starts at x = 0 with speed 1/2
  auto u0 = InitialData::make(ProfileKind::box, 1, 1.0, {-4.0}, {0.0});
  Grid g = Grid::make(1, {512}, {-6.0}, {4.0});
  const double t = 2.0;
  std::vector<double> ts{t};
  Trajectory traj = solve_to(u0, g, t, 0.9, ts, FluxChoice::engquist_osher);
  // locate the 0.5-crossing of the front by linear interpolation
  double front = -100.0;
  const auto& v = traj.final_field.values;
  for (long i = 0; i + 1 < g.cells[0]; ++i) {
    if (v[i] >= 0.5 && v[i + 1] < 0.5) {
      double x0 = g.cell_center(0, i), x1 = g.cell_center(0, i + 1);
      front = x0 + (v[i] - 0.5) / (v[i] - v[i + 1]) * (x1 - x0);
    }
  }
  CHECK(std::abs(front - t / 2) <= g.dx[0]);
}

TEST_CASE("transonic rarefaction spreads and stays monotone") {
  auto u0 = InitialData::make(ProfileKind::box, 1, 1.0, {-4.0}, {4.0},
                              SignPattern::minus_plus);
  Grid g = Grid::make(1, {512}, {-6.0}, {6.0});
  std::vector<double> ts{1.0};
  for (FluxChoice flux : {FluxChoice::engquist_osher, FluxChoice::godunov}) {
    Trajectory traj = solve_to(u0, g, 1.0, 0.9, ts, flux);
    const auto& v = traj.final_field.values;
    // cell nearest x = 0 tends to the fan center value u = 0
    long mid = g.cells[0] / 2;
    CHECK(std::abs(v[mid]) < 0.05);
    // no expansion shock: non-decreasing across the fan
    double prev = -2.0;
    for (long i = 0; i < g.cells[0]; ++i) {
      double x = g.cell_center(0, i);
      if (x < -0.9 || x > 0.9) continue;
      CHECK(v[i] >= prev - 1e-12);
      prev = v[i];
    }
  }
}

TEST_CASE("discrete L1 contraction between two solutions") {
  Grid g = Grid::make(1, {256}, {-4.0}, {4.0});
  auto a0 = InitialData::make(ProfileKind::triangle, 1, 1.0, {-1.0}, {1.0});
  auto b0 = InitialData::make(ProfileKind::gauss, 1, 0.8, {-2.0}, {1.0});
  Field u = Field::sample(a0, g);
  Field v = Field::sample(b0, g);
  auto l1_dist = [&](const Field& a, const Field& b) {
    CompensatedSum s;
    for (std::size_t i = 0; i < a.values.size(); ++i)
      s.add(std::abs(a.values[i] - b.values[i]));
    return s.value() * g.dx[0];
  };
  double prev = l1_dist(u, v);
  for (int it = 0; it < 80; ++it) {
    double dt = std::min(stable_dt(g, u.min_value(), u.max_value(), 0.9),
                         stable_dt(g, v.min_value(), v.max_value(), 0.9));
    u = step(u, dt, FluxChoice::engquist_osher);
    v = step(v, dt, FluxChoice::engquist_osher);
    double cur = l1_dist(u, v);
    CHECK(cur <= prev * (1.0 + 1e-12));
    prev = cur;
  }
}

TEST_CASE("1-D total variation is non-increasing") {
  Grid g = Grid::make(1, {256}, {-4.0}, {4.0});
  auto u0 = InitialData::make(ProfileKind::box, 1, 1.0, {-2.0}, {2.0},
                              SignPattern::plus_minus);
  Field u = Field::sample(u0, g);
  auto tv = [&](const Field& f) {
    double sum = std::abs(f.values.front()) + std::abs(f.values.back());
    for (std::size_t i = 0; i + 1 < f.values.size(); ++i)
      sum += std::abs(f.values[i + 1] - f.values[i]);
    return sum;
  };
  double prev = tv(u);
  for (int it = 0; it < 100; ++it) {
    double dt = stable_dt(g, u.min_value(), u.max_value(), 0.9);
    u = step(u, dt, FluxChoice::engquist_osher);
    double cur = tv(u);
    CHECK(cur <= prev * (1.0 + 1e-12));
    prev = cur;
  }
}

TEST_CASE("boundary check") {
  Grid g = Grid::make(2, {16, 16}, {0.0, 0.0}, {1.0, 1.0});
  Field f;
  f.grid = g;
  f.values.assign(g.size(), 0.0);
  CHECK(boundary_check(f, 1e-12).ok);

  Field interior = f;
  interior.values[8 * 16 + 8] = 0.9;
  CHECK(boundary_check(interior, 1e-12).ok);

  Field edge = f;
  edge.values[1 * 16 + 7] = 0.5;  // second row from the bottom in direction 1
  auto rep = boundary_check(edge, 1e-12);
  CHECK_FALSE(rep.ok);
  CHECK(rep.value == 0.5);
  CHECK(rep.cell[0] == 7);
  CHECK(rep.cell[1] == 1);
}

TEST_CASE("field text dumps carry the full grid header") {
  Grid g = Grid::make(2, {2, 2}, {0.0, -1.0}, {1.0, 1.0});
  Field f;
  f.grid = g;
  f.values = {0.25, 0.5, -1.0 / 3.0, 0.0};
  std::ostringstream os;
  write_field_text(f, os);
  CHECK(os.str() ==
        "dim 2\n"
        "cells 2 2\n"
        "box 0 1 -1 1\n"
        "0.25\n"
        "0.5\n"
        "-0.33333333333333331\n"
        "0\n");
}

TEST_CASE("solve_to on zero data records all-zero rows") {
  auto u0 = InitialData::make(ProfileKind::triangle, 1, 0.0, {-1.0}, {1.0});
  Grid g = Grid::make(1, {64}, {-4.0}, {4.0});
  std::vector<double> ts{0.5, 1.0, 2.0};
  Trajectory traj = solve_to(u0, g, 2.0, 0.9, ts, FluxChoice::engquist_osher);
  CHECK(traj.samples.size() == 4);
  for (const auto& row : traj.samples) {
    CHECK(row.l1 == 0.0);
    CHECK(row.linf == 0.0);
  }
}

TEST_CASE("solve_to conserves mass and contracts norms") {
  auto u0 = InitialData::make(ProfileKind::triangle, 1, 1.0, {0.0}, {2.0});
  Grid g = auto_grid(u0, {1024}, 50.0);
  auto ts = log_spaced_samples(0.5, 50.0, 8);
  Trajectory traj = solve_to(u0, g, 50.0, 0.9, ts, FluxChoice::engquist_osher);
  CHECK(traj.stats.mass_drift_rel <= 1e-12);
  CHECK(traj.stats.l1_growth_rel <= 1e-10);
  CHECK(traj.stats.linf_growth_rel <= 1e-10);
  CHECK(traj.stats.max_principle_excess <= 1e-10);
}

TEST_CASE("long-horizon triangle matches the N-wave amplitude") {
  auto u0 = InitialData::make(ProfileKind::triangle, 1, 1.0, {0.0}, {2.0});
  Grid g = auto_grid(u0, {4096}, 100.0);
  std::vector<double> ts{100.0};
  Trajectory traj = solve_to(u0, g, 100.0, 0.9, ts, FluxChoice::engquist_osher);
  double linf = traj.samples.back().linf;
  double expected = std::sqrt(2.0 / 100.0);
  CHECK(std::abs(linf - expected) / expected < 0.05);
}

TEST_CASE("engquist-osher and godunov agree on the decayed profile") {
  auto u0 = InitialData::make(ProfileKind::triangle, 1, 1.0, {0.0}, {2.0});
  Grid g = auto_grid(u0, {1024}, 100.0);
  std::vector<double> ts{100.0};
  auto eo = solve_to(u0, g, 100.0, 0.9, ts, FluxChoice::engquist_osher);
  auto go = solve_to(u0, g, 100.0, 0.9, ts, FluxChoice::godunov);
  double a = eo.samples.back().linf;
  double b = go.samples.back().linf;
  CHECK(std::abs(a - b) / a < 0.01);
  CHECK(std::abs(eo.samples.back().l1 - go.samples.back().l1) < 1e-10);
}

TEST_CASE("contamination is reported when the box is too small") {
  auto u0 = InitialData::make(ProfileKind::triangle, 1, 1.0, {-1.0}, {1.0});
  Grid g = Grid::make(1, {128}, {-2.0}, {2.0});
  std::vector<double> ts{5.0};
  CHECK_THROWS_AS(solve_to(u0, g, 5.0, 0.9, ts, FluxChoice::engquist_osher),
                  ContaminationError);
}

TEST_CASE("solve_to validates inputs") {
  auto u0 = InitialData::make(ProfileKind::triangle, 1, 1.0, {-1.0}, {1.0});
  Grid g = Grid::make(1, {64}, {-4.0}, {4.0});
  std::vector<double> inside{0.5};
  CHECK_THROWS_AS(solve_to(u0, g, 1.0, 1.5, inside, FluxChoice::engquist_osher),
                  std::invalid_argument);
  std::vector<double> outside{2.0};
  CHECK_THROWS_AS(solve_to(u0, g, 1.0, 0.9, outside, FluxChoice::engquist_osher),
                  std::invalid_argument);
  auto tight = InitialData::make(ProfileKind::box, 1, 1.0, {-3.99}, {3.99});
  CHECK_THROWS_AS(solve_to(tight, g, 1.0, 0.9, inside, FluxChoice::engquist_osher),
                  std::invalid_argument);
}

TEST_CASE("2-D solve conserves mass and respects the range") {
  auto u0 = InitialData::make(ProfileKind::triangle, 2, 1.0, {0.0, 0.0},
                              {2.0, 2.0});
  Grid g = auto_grid(u0, {96, 96}, 3.0);
  auto ts = log_spaced_samples(0.5, 3.0, 6);
  Trajectory traj = solve_to(u0, g, 3.0, 0.9, ts, FluxChoice::engquist_osher);
  CHECK(traj.stats.mass_drift_rel <= 1e-12);
  CHECK(traj.stats.max_principle_excess <= 1e-10);
  CHECK(traj.samples.back().l1 <= traj.samples.front().l1 * (1 + 1e-10));
}

TEST_SUITE_END();
