#include "burgers/grid.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "burgers/norms.hpp"

namespace burgers {

Grid Grid::make(int dim, std::vector<int> cells, std::vector<double> lo,
                std::vector<double> hi) {
  if (dim < 1) throw std::invalid_argument("Grid: dimension must be >= 1");
  if (cells.size() != static_cast<std::size_t>(dim) ||
      lo.size() != static_cast<std::size_t>(dim) ||
      hi.size() != static_cast<std::size_t>(dim))
    throw std::invalid_argument("Grid: rank mismatch");
  std::size_t total = 1;
  for (int k = 0; k < dim; ++k) {
    if (cells[k] < 1) throw std::invalid_argument("Grid: cell count must be >= 1");
    if (!(hi[k] > lo[k])) throw std::invalid_argument("Grid: empty box interval");
    if (total > kMaxCells / static_cast<std::size_t>(cells[k]))
      throw std::invalid_argument("Grid: exceeds cell budget (2^28)");
    total *= static_cast<std::size_t>(cells[k]);
  }
  Grid g;
  g.dim = dim;
  g.cells = std::move(cells);
  g.lo = std::move(lo);
  g.hi = std::move(hi);
  g.dx.resize(dim);
  for (int k = 0; k < dim; ++k) {
    g.dx[k] = (g.hi[k] - g.lo[k]) / g.cells[k];
    if (!(g.dx[k] > 0.0) || !std::isfinite(g.dx[k]))
      throw std::invalid_argument("Grid: degenerate spacing");
  }
  return g;
}

std::size_t Grid::size() const {
  std::size_t total = 1;
  for (int c : cells) total *= static_cast<std::size_t>(c);
  return total;
}

std::size_t Grid::stride(int k) const {
  std::size_t s = 1;
  for (int j = 0; j < k; ++j) s *= static_cast<std::size_t>(cells[j]);
  return s;
}

double Grid::cell_volume() const {
  double v = 1.0;
  for (int k = 0; k < dim; ++k) v *= dx[k];
  return v;
}

Field Field::sample(const InitialData& u0, const Grid& grid) {
  if (u0.dim != grid.dim)
    throw std::invalid_argument("Field::sample: dimension mismatch");
  Field f;
  f.grid = grid;
  f.values.assign(grid.size(), 0.0);
  f.time = 0.0;
  std::vector<long> idx(grid.dim, 0);
  std::vector<double> x(grid.dim, 0.0);
  for (std::size_t flat = 0; flat < f.values.size(); ++flat) {
    for (int k = 0; k < grid.dim; ++k) x[k] = grid.cell_center(k, idx[k]);
    f.values[flat] = u0.value(x);
    for (int k = 0; k < grid.dim; ++k) {
      if (++idx[k] < grid.cells[k]) break;
      idx[k] = 0;
    }
  }
  return f;
}

double Field::min_value() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::min(m, v);
  return m;
}

double Field::max_value() const {
  double m = values.empty() ? 0.0 : values[0];
  for (double v : values) m = std::max(m, v);
  return m;
}

void write_field_text(const Field& f, std::ostream& os) {
  char buf[64];
  os << "dim " << f.grid.dim << "\n";
  os << "cells";
  for (int c : f.grid.cells) os << " " << c;
  os << "\n";
  os << "box";
  for (int k = 0; k < f.grid.dim; ++k) {
    std::snprintf(buf, sizeof buf, " %.17g %.17g", f.grid.lo[k], f.grid.hi[k]);
    os << buf;
  }
  os << "\n";
  for (double v : f.values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    os << buf;
  }
}

double lp_norm(const Field& f, double p) {
  if (std::isinf(p)) return linf_norm(f);
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  CompensatedSum s;
  for (double v : f.values) s.add(std::pow(std::abs(v), p));
  return std::pow(s.value() * f.grid.cell_volume(), 1.0 / p);
}

double linf_norm(const Field& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double signed_mass(const Field& f) {
  CompensatedSum s;
  for (double v : f.values) s.add(v);
  return s.value() * f.grid.cell_volume();
}

NormRow measure_norms(const Field& f, double p) {
  CompensatedSum s1, s2, sp;
  double mx = 0.0;
  for (double v : f.values) {
    double a = std::abs(v);
    s1.add(a);
    s2.add(v * v);
    sp.add(std::pow(a, p));
    mx = std::max(mx, a);
  }
  double vol = f.grid.cell_volume();
  NormRow row;
  row.t = f.time;
  row.l1 = s1.value() * vol;
  row.l2 = std::sqrt(s2.value() * vol);
  row.lp = std::pow(sp.value() * vol, 1.0 / p);
  row.linf = mx;
  return row;
}

}  // namespace burgers
