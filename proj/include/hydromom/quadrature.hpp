#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hydromom {

using ComplexIntegrand = std::function<std::complex<double>(double)>;

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_intervals = 20000;
};

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;
  int intervals = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature on [a, b], bisecting the interval with
/// the largest |K15 - G7| until the summed estimate meets max(abs_tol, rel_tol |I|).
/// The optional breakpoints seed the initial partition. Throws NonConvergenceError when the
/// interval budget runs out.
QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                                    const QuadratureOptions& opts = {},
                                    const std::vector<double>& breakpoints = {});

/// Integral over (-inf, inf) of a function decaying at least like |p|^(-3/2).
/// [-scale, scale] is integrated directly; each tail through p = +-scale / x^2, which turns
/// algebraic decay into a polynomial in x.
QuadratureResult integrate_whole_line(const ComplexIntegrand& f, double scale,
                                      const QuadratureOptions& opts = {});

/// Integral over [start, inf) of an algebraically decaying function (at least |p|^(-2)),
/// through p = start / x.
QuadratureResult integrate_algebraic_tail(const ComplexIntegrand& f, double start,
                                          const QuadratureOptions& opts = {});

/// Integral over [0, inf) of an exponentially decaying function through q = scale t / (1 - t).
QuadratureResult integrate_half_line(const ComplexIntegrand& f, double scale,
                                     const QuadratureOptions& opts = {});

/// Fixed-rule integral over (-inf, inf) through p = scale tan(theta): composite Gauss-Legendre
/// on `panels` equal panels of theta in (-pi/2, pi/2). Independent of the adaptive scheme;
/// accurate for integrands decaying at least like |p|^(-3).
std::complex<double> integrate_whole_line_tangent(const ComplexIntegrand& f, double scale,
                                                  int panels = 400, int nodes = 20);

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussLegendreRule gauss_legendre(int n);

namespace detail {

/// Single 15-point Kronrod estimate and embedded 7-point Gauss estimate on [a, b].
struct KronrodPair {
  std::complex<double> kronrod;
  std::complex<double> gauss;
};
KronrodPair gauss_kronrod_15(const ComplexIntegrand& f, double a, double b);

}  // namespace detail

}  // namespace hydromom
