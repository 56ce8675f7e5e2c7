#ifndef BURGERS_GRID_HPP
#define BURGERS_GRID_HPP

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "burgers/equation.hpp"

namespace burgers {

// Uniform axis-aligned grid of cell averages. Cell (i_1,..,i_d) covers
// [lo_k + i_k dx_k, lo_k + (i_k+1) dx_k) per direction.
struct Grid {
  int dim = 1;
  std::vector<int> cells;
  std::vector<double> lo, hi;
  std::vector<double> dx;

  static constexpr std::size_t kMaxCells = std::size_t{1} << 28;

  static Grid make(int dim, std::vector<int> cells, std::vector<double> lo,
                   std::vector<double> hi);

  std::size_t size() const;
  std::size_t stride(int k) const;  // flat-index stride of direction k (0-based)
  double cell_center(int k, long i) const { return lo[k] + (i + 0.5) * dx[k]; }
  double cell_volume() const;
};

struct Field {
  Grid grid;
  std::vector<double> values;
  double time = 0.0;

  // cell-center sampling of the analytic initial data
  static Field sample(const InitialData& u0, const Grid& grid);

  double min_value() const;
  double max_value() const;
};

// Snapshot format: three header lines (dim, cells, box), then row-major cell
// values, one per line, 17 significant digits.
void write_field_text(const Field& f, std::ostream& os);

}  // namespace burgers

#endif  // BURGERS_GRID_HPP
