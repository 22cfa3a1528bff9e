#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hydromom/paraboloidal.hpp"
#include "hydromom/spherical.hpp"

namespace hydromom {

/// Uniform axis: steps points from p_min to p_max inclusive.
struct GridSpec {
  double p_min = -3.0;
  double p_max = 3.0;
  int steps = 61;

  void validate() const;
  double at(int k) const;
  std::vector<double> points() const;
  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Parses "MIN:MAX:STEPS"; throws DomainError on malformed input.
GridSpec parse_grid(const std::string& text);

struct GridRow {
  double x = 0.0;
  double y = 0.0;
  double re = 0.0;
  double im = 0.0;
  double abs2 = 0.0;
  friend bool operator==(const GridRow&, const GridRow&) = default;
};

/// Rows in x-major order: row k = (x_i, y_j) with k = i * steps + j.
struct GridSample {
  std::string x_label;
  std::string y_label;
  GridSpec grid;
  std::vector<GridRow> rows;
};

GridSample evaluate_grid_serial(const parabolic::MomentumWavefunction& wf, const GridSpec& grid);
GridSample evaluate_grid(const parabolic::MomentumWavefunction& wf, const GridSpec& grid);
GridSample evaluate_grid_serial(const spherical::SphericalWavefunction& wf, const GridSpec& grid);
GridSample evaluate_grid(const spherical::SphericalWavefunction& wf, const GridSpec& grid);

}  // namespace hydromom
