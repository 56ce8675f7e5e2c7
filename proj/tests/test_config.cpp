#include <doctest.h>

#include <sstream>

#include "burgers/config.hpp"

using namespace burgers;

TEST_SUITE_BEGIN("config");

namespace {

RunConfig parse_text(const std::string& text) {
  std::istringstream in(text);
  return RunConfig::parse(in, "<test>");
}

}  // namespace

TEST_CASE("full config round trip") {
  auto cfg = parse_text(
      "# comment line\n"
      "dim = 2\n"
      "grid.cells = 64,32\n"
      "grid.box = -4:4,-2:2\n"
      "init.kind = triangle\n"
      "init.amplitude = 1.5\n"
      "init.support = 0:2,-1:1\n"
      "init.sign = -+\n"
      "time.t_final = 50\n"
      "time.cfl = 0.8\n"
      "time.samples = list:1,5,25\n"
      "flux = godunov\n"
      "analysis.window = 1:50\n"
      "analysis.gammas = 1/8,1/16\n"
      "output.series = out.csv\n");
  CHECK(cfg.dim == 2);
  CHECK(cfg.cells == std::vector<int>{64, 32});
  CHECK_FALSE(cfg.auto_box);
  CHECK(cfg.box_lo == std::vector<double>{-4.0, -2.0});
  CHECK(cfg.init.kind == ProfileKind::triangle);
  CHECK(cfg.init.amplitude == 1.5);
  CHECK(cfg.init.sign == SignPattern::minus_plus);
  CHECK(cfg.t_final == 50.0);
  CHECK(cfg.cfl == 0.8);
  CHECK(cfg.sample_times == std::vector<double>{1.0, 5.0, 25.0});
  CHECK(cfg.flux == FluxChoice::godunov);
  CHECK(cfg.window_lo == 1.0);
  CHECK(cfg.eq3_gammas.size() == 2);
  CHECK(cfg.eq3_gammas[0] == Rational(1, 8));
  CHECK(cfg.series_path == "out.csv");
  Grid g = cfg.make_grid();
  CHECK(g.cells == cfg.cells);
  CHECK(g.lo[0] == -4.0);
}

TEST_CASE("defaults and broadcasting") {
  auto cfg = parse_text(
      "dim = 2\n"
      "grid.cells = 48\n"
      "init.kind = box\n"
      "init.amplitude = 1\n"
      "init.support = 0:1\n"
      "time.t_final = 2\n");
  CHECK(cfg.cells == std::vector<int>{48, 48});
  CHECK(cfg.auto_box);
  CHECK(cfg.init.lo == std::vector<double>{0.0, 0.0});
  CHECK(cfg.cfl == 0.9);
  CHECK(cfg.flux == FluxChoice::engquist_osher);
  CHECK(!cfg.sample_times.empty());
  CHECK(cfg.sample_times.back() == 2.0);
  Grid g = cfg.make_grid();  // auto box must enclose the support
  CHECK(g.lo[0] < 0.0);
  CHECK(g.hi[0] > 1.0);
}

TEST_CASE("config rejections") {
  CHECK_THROWS_WITH_AS(parse_text("dim = 1\n"), // missing keys
                       doctest::Contains("missing required key"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_text("dim = 1\n"
                                  "grid.cells = 16\n"
                                  "init.kind = box\n"
                                  "init.amplitude = 1\n"
                                  "init.support = 0:1\n"
                                  "time.t_final = 1\n"
                                  "bogus.key = 1\n"),
                       doctest::Contains("unknown key"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_text("dim = 1\n"
                                  "dim = 2\n"),
                       doctest::Contains("duplicate"), std::invalid_argument);
  CHECK_THROWS_AS(parse_text("dim = 0\n"
                             "grid.cells = 16\n"
                             "init.kind = box\n"
                             "init.amplitude = 1\n"
                             "init.support = 0:1\n"
                             "time.t_final = 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_text("dim = 1\n"
                             "grid.cells = 16\n"
                             "init.kind = blob\n"
                             "init.amplitude = 1\n"
                             "init.support = 0:1\n"
                             "time.t_final = 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(RunConfig::parse_file("/nonexistent/path.cfg"),
                  std::invalid_argument);
}

TEST_SUITE_END();
