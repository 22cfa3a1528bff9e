#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hydromom/grid.hpp"
#include "hydromom/half_int.hpp"
#include "hydromom/paraboloidal.hpp"
#include "hydromom/pole_sum.hpp"

/// Position-space reference functions, the numerical conjugate transform, proportionality
/// fits and two-sided expectation values.
namespace hydromom::oracle {

/// L_n^alpha(x) by the three-term recurrence.
double generalized_laguerre(int n, double alpha, double x);

/// Normalized R_{nl}(r), integral of R^2 r^2 dr = 1. DomainError for r <= 0.
double position_radial(int n, int l, double r, double p0 = 1.0);

/// Normalized U(u) of the paraboloidal u equation with separation charge Z_i, integral of
/// U^2 u du = 1. DomainError for u <= 0.
double position_parabolic(int n1, int m, double Z_i, int n, double u);

/// P_l^|m|(x) with the Condon-Shortley phase. DomainError for |x| > 1.
double associated_legendre(int l, int m, double x);

/// Quadrature carrier: integral of g(q) dq ~ sum_j weights_j g(abscissae_j) for the function
/// whose samples are in values.
struct SampledFunction {
  std::vector<double> abscissae;
  std::vector<Complex> values;
  std::vector<double> weights;
  HalfInt weight_exponent;
};

/// Samples f on [0, q_max] with 20-point Gauss-Legendre panels of width 0.25 (first panel
/// through q = t^2), extending q_max until |f| q^w stays below 1e-14 of its peak.
SampledFunction sample_half_line(const std::function<double(double)>& f, HalfInt weight_exponent);

/// Samples g on [-1, 1] through x = sin(theta), so endpoint square-root behaviour is smooth.
SampledFunction sample_unit_interval(const std::function<double(double)>& g, int panels = 32);

/// phi(p) = sum_j w_j exp(i kernel_sign q_j p) q_j^w f_j for each p in p_grid.
std::vector<Complex> conjugate_transform_serial(const SampledFunction& f, int kernel_sign,
                                                const std::vector<double>& p_grid);
/// OpenMP version over grid points; bitwise equal to the serial one.
std::vector<Complex> conjugate_transform(const SampledFunction& f, int kernel_sign,
                                         const std::vector<double>& p_grid);

/// Integral of |f|^2 q^(2w) dq over the sampled range.
double weighted_norm_squared(const SampledFunction& f);

struct FitReport {
  Complex constant;
  double max_rel_err = 0.0;
  std::optional<GridSpec> grid;
};

/// Least-squares c minimizing sum |numeric - c closed|^2; max_rel_err is
/// max |numeric - c closed| / max |c closed|. Needs >= 8 points; DegenerateFitError when
/// closed is numerically zero.
FitReport fit_proportionality(const std::vector<Complex>& numeric, const std::vector<Complex>& closed);

// Reference samples for the three transform families.
SampledFunction radial_samples(int n, int l, double p0);
SampledFunction parabolic_samples(const parabolic::ParabolicState& s, parabolic::Axis which);
SampledFunction angular_samples(int l, int m);

enum class Operator { identity, position, inverse_position };

/// Raw momentum-side integral: identity -> int f* f, position -> int f* (i f'),
/// inverse_position -> int f* (-i antiderivative(f)). Contour when every exponent is integer.
Complex expectation(const PoleSum& f, Operator op);

/// expectation(f, op) / expectation(f, identity), with the conjugate coordinate scaled back by
/// coordinate_scale (position multiplied, inverse_position divided).
double normalized_expectation(const PoleSum& f, Operator op, double coordinate_scale = 1.0);

/// <r^k> with k = 0, 1, -1 for identity, position, inverse_position, by quadrature.
double position_expectation_radial(int n, int l, double p0, Operator op);
/// <u^k> under the u du measure, normalized.
double position_expectation_parabolic(const parabolic::ParabolicState& s, parabolic::Axis which,
                                      Operator op);

/// Residual of -chi''/2 + (l(l+1)/(2r^2) - Z/r) chi - E chi with chi = r R, by a 5-point
/// stencil.
double radial_ode_residual(int n, int l, double r, double p0 = 1.0);
/// Residual of (1/u)(u U')' + (E/2 + Z_i/u - m^2/(4u^2)) U.
double parabolic_ode_residual(int n1, int m, double Z_i, int n, double u);

}  // namespace hydromom::oracle
