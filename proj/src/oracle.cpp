#include "hydromom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hydromom/errors.hpp"
#include "hydromom/quadrature.hpp"
#include "hydromom/residue.hpp"
#include "hydromom/specfun.hpp"

namespace hydromom::oracle {

using specfun::factorial;

double generalized_laguerre(int n, double alpha, double x) {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double position_radial(int n, int l, double r, double p0) {
  if (!(r > 0.0)) throw DomainError("position_radial requires r > 0");
  if (n < 1 || l < 0 || l >= n) throw DomainError("position_radial requires 0 <= l < n");
  const double x = 2.0 * p0 * r / n;
  const double k = 2.0 * p0 / n;
  const double norm = std::sqrt(k * k * k * factorial(n - l - 1) / (2.0 * n * factorial(n + l)));
  return norm * std::exp(-x / 2.0) * std::pow(x, l) * generalized_laguerre(n - l - 1, 2 * l + 1, x);
}

double position_parabolic(int n1, int m, double Z_i, int n, double u) {
  if (!(u > 0.0)) throw DomainError("position_parabolic requires u > 0");
  const int am = std::abs(m);
  if (n1 < 0 || n < n1 + am + 1) throw DomainError("position_parabolic requires n >= n1 + |m| + 1");
  const double n_eff = n1 + (am + 1) / 2.0;
  const double eps = Z_i / n_eff;  // p0 / n
  const double x = eps * u;
  const double norm =
      eps * std::sqrt(factorial(n1) / (factorial(n1 + am) * (2.0 * n1 + am + 1.0)));
  return norm * std::exp(-x / 2.0) * std::pow(x, am / 2.0) * generalized_laguerre(n1, am, x);
}

double associated_legendre(int l, int m, double x) {
  const int am = std::abs(m);
  if (std::abs(x) > 1.0) throw DomainError("associated_legendre requires |x| <= 1");
  if (l < 0 || am > l) throw DomainError("associated_legendre requires |m| <= l");
  double pmm = 1.0;
  const double s = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
  for (int k = 1; k <= am; ++k) pmm *= -(2.0 * k - 1.0) * s;
  if (l == am) return pmm;
  double pm1 = x * (2.0 * am + 1.0) * pmm;
  for (int ll = am + 2; ll <= l; ++ll) {
    const double next = (x * (2.0 * ll - 1.0) * pm1 - (ll + am - 1.0) * pmm) / (ll - am);
    pmm = pm1;
    pm1 = next;
  }
  return pm1;
}

namespace {

constexpr double kPanel = 0.25;
constexpr int kNodes = 20;
constexpr int kMaxPanels = 20000;

double kernel_weight(double q, HalfInt w) {
  if (w == HalfInt(0)) return 1.0;
  if (w == HalfInt(1)) return q;
  return std::pow(q, w.value());
}

Complex transform_at(const SampledFunction& f, int kernel_sign, double p) {
  Complex sum(0.0, 0.0);
  for (std::size_t j = 0; j < f.abscissae.size(); ++j) {
    const double q = f.abscissae[j];
    const double phase = kernel_sign * q * p;
    sum += (f.weights[j] * kernel_weight(q, f.weight_exponent)) *
           (Complex(std::cos(phase), std::sin(phase)) * f.values[j]);
  }
  return sum;
}

}  // namespace

SampledFunction sample_half_line(const std::function<double(double)>& f, HalfInt weight_exponent) {
  const auto rule = gauss_legendre(kNodes);
  SampledFunction out;
  out.weight_exponent = weight_exponent;
  double peak = 0.0;
  int quiet = 0;
  for (int k = 0; k < kMaxPanels; ++k) {
    double panel_max = 0.0;
    for (int j = 0; j < kNodes; ++j) {
      double q = 0.0;
      double w = 0.0;
      if (k == 0) {
        // q = t^2 on t in [0, sqrt(kPanel)] removes the square-root behaviour at the origin.
        const double h = std::sqrt(kPanel);
        const double t = 0.5 * h * (rule.nodes[j] + 1.0);
        q = t * t;
        w = 0.5 * h * rule.weights[j] * 2.0 * t;
      } else {
        const double a = k * kPanel;
        q = a + 0.5 * kPanel * (rule.nodes[j] + 1.0);
        w = 0.5 * kPanel * rule.weights[j];
      }
      const double v = f(q);
      out.abscissae.push_back(q);
      out.weights.push_back(w);
      out.values.emplace_back(v, 0.0);
      panel_max = std::max(panel_max, std::abs(v) * kernel_weight(q, weight_exponent));
    }
    peak = std::max(peak, panel_max);
    quiet = panel_max < 1e-14 * peak ? quiet + 1 : 0;
    if (quiet >= 8) return out;
  }
  throw NonConvergenceError("sampled function does not decay within the panel budget");
}

SampledFunction sample_unit_interval(const std::function<double(double)>& g, int panels) {
  const auto rule = gauss_legendre(kNodes);
  SampledFunction out;
  out.weight_exponent = HalfInt(0);
  const double width = std::numbers::pi / panels;
  for (int k = 0; k < panels; ++k) {
    const double a = -std::numbers::pi / 2.0 + k * width;
    for (int j = 0; j < kNodes; ++j) {
      const double theta = a + 0.5 * width * (rule.nodes[j] + 1.0);
      const double x = std::sin(theta);
      out.abscissae.push_back(x);
      out.weights.push_back(0.5 * width * rule.weights[j] * std::cos(theta));
      out.values.emplace_back(g(x), 0.0);
    }
  }
  return out;
}

std::vector<Complex> conjugate_transform_serial(const SampledFunction& f, int kernel_sign,
                                                const std::vector<double>& p_grid) {
  if (kernel_sign != 1 && kernel_sign != -1) throw DomainError("kernel_sign must be +-1");
  std::vector<Complex> out(p_grid.size());
  for (std::size_t k = 0; k < p_grid.size(); ++k) out[k] = transform_at(f, kernel_sign, p_grid[k]);
  return out;
}

std::vector<Complex> conjugate_transform(const SampledFunction& f, int kernel_sign,
                                         const std::vector<double>& p_grid) {
  if (kernel_sign != 1 && kernel_sign != -1) throw DomainError("kernel_sign must be +-1");
  const auto n = static_cast<std::ptrdiff_t>(p_grid.size());
  std::vector<Complex> out(p_grid.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < n; ++k) out[k] = transform_at(f, kernel_sign, p_grid[k]);
  return out;
}

double weighted_norm_squared(const SampledFunction& f) {
  double s = 0.0;
  for (std::size_t j = 0; j < f.abscissae.size(); ++j) {
    const double w = kernel_weight(f.abscissae[j], f.weight_exponent);
    s += f.weights[j] * std::norm(f.values[j]) * w * w;
  }
  return s;
}

FitReport fit_proportionality(const std::vector<Complex>& numeric, const std::vector<Complex>& closed) {
  if (numeric.size() != closed.size()) throw DomainError("fit lists differ in length");
  if (numeric.size() < 8) throw DomainError("fit needs at least 8 points");
  Complex num(0.0, 0.0);
  double den = 0.0;
  double closed_max = 0.0;
  double numeric_max = 0.0;
  for (std::size_t k = 0; k < closed.size(); ++k) {
    num += std::conj(closed[k]) * numeric[k];
    den += std::norm(closed[k]);
    closed_max = std::max(closed_max, std::abs(closed[k]));
    numeric_max = std::max(numeric_max, std::abs(numeric[k]));
  }
  if (!(closed_max > 1e-300) || !(den > 0.0)) throw DegenerateFitError("closed-form values vanish");
  FitReport r;
  r.constant = num / den;
  double dev = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < closed.size(); ++k) {
    const Complex model = r.constant * closed[k];
    dev = std::max(dev, std::abs(numeric[k] - model));
    scale = std::max(scale, std::abs(model));
  }
  if (!(scale > 1e-14 * numeric_max) || scale == 0.0) {
    // Numeric data orthogonal to the closed form: nothing is explained by the fit.
    r.max_rel_err = 1.0;
    return r;
  }
  r.max_rel_err = dev / scale;
  return r;
}

SampledFunction radial_samples(int n, int l, double p0) {
  return sample_half_line([=](double r) { return position_radial(n, l, r, p0); }, HalfInt(1));
}

SampledFunction parabolic_samples(const parabolic::ParabolicState& s, parabolic::Axis which) {
  const int ni = which == parabolic::Axis::u ? s.n1 : s.n2;
  const double zi = which == parabolic::Axis::u ? s.Z1 : s.Z2;
  const double scale = parabolic::kCoordinateScale;
  return sample_half_line(
      [=, m = s.m, n = s.n](double q) { return position_parabolic(ni, m, zi, n, scale * q); }, kHalf);
}

SampledFunction angular_samples(int l, int m) {
  return sample_unit_interval([=](double x) { return associated_legendre(l, m, x); });
}

Complex expectation(const PoleSum& f, Operator op) {
  const PoleSum fc = conjugate_on_real_axis(f);
  switch (op) {
    case Operator::identity:
      return integrate_product_real_line(fc, f);
    case Operator::position:
      return integrate_product_real_line(fc, Complex(0.0, 1.0) * derivative(f));
    case Operator::inverse_position:
      return integrate_product_real_line(fc, Complex(0.0, -1.0) * antiderivative_from_minus_infinity(f));
  }
  throw DomainError("unknown operator");
}

double normalized_expectation(const PoleSum& f, Operator op, double coordinate_scale) {
  const double norm = expectation(f, Operator::identity).real();
  const double v = expectation(f, op).real() / norm;
  if (op == Operator::position) return v * coordinate_scale;
  if (op == Operator::inverse_position) return v / coordinate_scale;
  return v;
}

namespace {

int power_of(Operator op) {
  switch (op) {
    case Operator::identity: return 0;
    case Operator::position: return 1;
    case Operator::inverse_position: return -1;
  }
  return 0;
}

QuadratureOptions tight() {
  QuadratureOptions o;
  o.abs_tol = 1e-14;
  o.rel_tol = 1e-12;
  return o;
}

}  // namespace

double position_expectation_radial(int n, int l, double p0, Operator op) {
  const int k = power_of(op);
  auto moment = [&](int power) {
    return integrate_half_line(
               [&](double r) {
                 if (r <= 0.0) return Complex(0.0, 0.0);
                 const double R = position_radial(n, l, r, p0);
                 return Complex(R * R * std::pow(r, 2 + power), 0.0);
               },
               n * n / p0, tight())
        .value.real();
  };
  return moment(k) / moment(0);
}

double position_expectation_parabolic(const parabolic::ParabolicState& s, parabolic::Axis which,
                                      Operator op) {
  const int k = power_of(op);
  const int ni = which == parabolic::Axis::u ? s.n1 : s.n2;
  const double zi = which == parabolic::Axis::u ? s.Z1 : s.Z2;
  auto moment = [&](int power) {
    return integrate_half_line(
               [&](double u) {
                 if (u <= 0.0) return Complex(0.0, 0.0);
                 const double U = position_parabolic(ni, s.m, zi, s.n, u);
                 return Complex(U * U * std::pow(u, 1 + power), 0.0);
               },
               2.0 * s.n / s.p0, tight())
        .value.real();
  };
  return moment(k) / moment(0);
}

namespace {

// 5-point first and second derivatives.
template <class F>
std::pair<double, double> derivatives(F&& f, double x, double h) {
  const double fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
  const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
  const double d2 = (-fm2 + 16 * fm1 - 30 * f0 + 16 * fp1 - fp2) / (12 * h * h);
  return {d1, d2};
}

}  // namespace

double radial_ode_residual(int n, int l, double r, double p0) {
  const double h = 1e-2 * std::min(1.0, r / 4.0);
  auto chi = [&](double x) { return x * position_radial(n, l, x, p0); };
  const auto [d1, d2] = derivatives(chi, r, h);
  (void)d1;
  const double E = -p0 * p0 / (2.0 * n * n);
  const double c = chi(r);
  return -0.5 * d2 + (l * (l + 1.0) / (2.0 * r * r) - p0 / r) * c - E * c;
}

double parabolic_ode_residual(int n1, int m, double Z_i, int n, double u) {
  const double h = 1e-2 * std::min(1.0, u / 4.0);
  auto U = [&](double x) { return position_parabolic(n1, m, Z_i, n, x); };
  const auto [d1, d2] = derivatives(U, u, h);
  const double n_eff = n1 + (std::abs(m) + 1) / 2.0;
  const double p0 = Z_i * n / n_eff;
  const double E = -p0 * p0 / (2.0 * n * n);
  const double v = U(u);
  return d2 + d1 / u + (E / 2.0 + Z_i / u - m * m / (4.0 * u * u)) * v;
}

}  // namespace hydromom::oracle
