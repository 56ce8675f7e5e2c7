#ifndef BURGERS_CONFIG_HPP
#define BURGERS_CONFIG_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "burgers/analysis.hpp"
#include "burgers/solver.hpp"

namespace burgers {

// Flat key-value experiment description with dotted keys, e.g.
//   dim = 1
//   grid.cells = 4096
//   grid.box = auto            # or "lo:hi" per direction, comma separated
//   init.kind = triangle       # box | triangle | gauss
//   init.amplitude = 1
//   init.support = 0:2
//   init.sign = +              # + | - | +- | -+
//   time.t_final = 10000
//   time.cfl = 0.9
//   time.samples = decades:10  # or list:1,2,5,...
//   time.t_first = 100
//   flux = eo                  # eo | godunov
//   analysis.window = 100:10000
//   analysis.gammas = 1/4,3/8  # eq3 gamma list, exact rationals
//   output.series = series.csv
//   output.report_prefix = report
struct RunConfig {
  int dim = 1;
  std::vector<int> cells;
  bool auto_box = true;
  std::vector<double> box_lo, box_hi;
  InitialData init;
  double t_final = 1.0;
  double cfl = 0.9;
  std::vector<double> sample_times;
  FluxChoice flux = FluxChoice::engquist_osher;
  double window_lo = 1.0;
  double window_hi = 0.0;  // resolved to t_final when unset
  std::vector<Rational> eq3_gammas;
  std::string series_path = "series.csv";
  std::string report_prefix = "report";

  static RunConfig parse_file(const std::string& path);
  static RunConfig parse(std::istream& is, const std::string& origin);

  Grid make_grid() const;
};

}  // namespace burgers

#endif  // BURGERS_CONFIG_HPP
