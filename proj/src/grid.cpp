#include "hydromom/grid.hpp"

#include <charconv>
#include <cmath>

#include "hydromom/errors.hpp"

namespace hydromom {

void GridSpec::validate() const {
  if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_min < p_max)) {
    throw DomainError("grid requires finite p_min < p_max");
  }
  if (steps < 2) throw DomainError("grid requires at least 2 steps");
}

double GridSpec::at(int k) const {
  if (k == steps - 1) return p_max;
  return p_min + (p_max - p_min) * k / (steps - 1);
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out(steps);
  for (int k = 0; k < steps; ++k) out[k] = at(k);
  return out;
}

namespace {

double parse_double(std::string_view s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(s), &used);
    if (used != s.size()) throw DomainError("");
    return v;
  } catch (const std::exception&) {
    throw DomainError("bad number '" + std::string(s) + "' in grid spec");
  }
}

GridRow make_row(double x, double y, std::complex<double> v) {
  return {x, y, v.real(), v.imag(), v.real() * v.real() + v.imag() * v.imag()};
}

template <class Axis1, class Axis2>
GridSample fill_serial(GridSample out, Axis1&& fx, Axis2&& fy) {
  const auto pts = out.grid.points();
  const std::size_t n = pts.size();
  out.rows.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.rows[i * n + j] = make_row(pts[i], pts[j], fx(pts[i]) * fy(pts[j]));
    }
  }
  return out;
}

// Separable product: each axis factor is evaluated once per point, then the outer product is
// formed in parallel. Both paths compute the same two doubles per cell and multiply them the
// same way, so results agree bitwise with fill_serial.
template <class Axis1, class Axis2>
GridSample fill_parallel(GridSample out, Axis1&& fx, Axis2&& fy) {
  const auto pts = out.grid.points();
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  std::vector<std::complex<double>> ax(n), ay(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    ax[i] = fx(pts[i]);
    ay[i] = fy(pts[i]);
  }
  out.rows.resize(static_cast<std::size_t>(n * n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = 0; j < n; ++j) {
      out.rows[i * n + j] = make_row(pts[i], pts[j], ax[i] * ay[j]);
    }
  }
  return out;
}

GridSample header(const parabolic::MomentumWavefunction&, const GridSpec& grid) {
  grid.validate();
  return {"p_u", "p_v", grid, {}};
}

GridSample header(const spherical::SphericalWavefunction&, const GridSpec& grid) {
  grid.validate();
  return {"p_r", "p_theta", grid, {}};
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos || text.find(':', b + 1) != std::string::npos) {
    throw DomainError("grid must look like MIN:MAX:STEPS, got '" + text + "'");
  }
  GridSpec g;
  g.p_min = parse_double(std::string_view(text).substr(0, a));
  g.p_max = parse_double(std::string_view(text).substr(a + 1, b - a - 1));
  const std::string steps = text.substr(b + 1);
  int k = 0;
  const auto res = std::from_chars(steps.data(), steps.data() + steps.size(), k);
  if (res.ec != std::errc() || res.ptr != steps.data() + steps.size()) {
    throw DomainError("bad step count '" + steps + "' in grid spec");
  }
  g.steps = k;
  g.validate();
  return g;
}

GridSample evaluate_grid_serial(const parabolic::MomentumWavefunction& wf, const GridSpec& grid) {
  return fill_serial(
      header(wf, grid), [&](double p) { return wf.u_factor(Complex(p, 0.0)); },
      [&](double p) { return wf.v_factor(Complex(p, 0.0)); });
}

GridSample evaluate_grid(const parabolic::MomentumWavefunction& wf, const GridSpec& grid) {
  return fill_parallel(
      header(wf, grid), [&](double p) { return wf.u_factor(Complex(p, 0.0)); },
      [&](double p) { return wf.v_factor(Complex(p, 0.0)); });
}

GridSample evaluate_grid_serial(const spherical::SphericalWavefunction& wf, const GridSpec& grid) {
  return fill_serial(
      header(wf, grid), [&](double p) { return wf.radial(Complex(p, 0.0)); },
      [&](double p) { return wf.angular(p); });
}

GridSample evaluate_grid(const spherical::SphericalWavefunction& wf, const GridSpec& grid) {
  return fill_parallel(
      header(wf, grid), [&](double p) { return wf.radial(Complex(p, 0.0)); },
      [&](double p) { return wf.angular(p); });
}

}  // namespace hydromom
