#include "hydromom/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hydromom/errors.hpp"

namespace hydromom::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;

[[noreturn]] void gamma_pole(double x) {
  throw PoleError("gamma has a pole at " + std::to_string(x));
}

// J_{-1/2} and J_{1/2} closed forms.
double j_minus_half(double x) { return std::sqrt(2.0 / (kPi * x)) * std::cos(x); }
double j_plus_half(double x) { return std::sqrt(2.0 / (kPi * x)) * std::sin(x); }

// Hankel expansion of J_0 / J_1 for large real x.
double bessel_j_large(HalfInt order, double x) {
  return detail::hankel_asymptotic(order, {x, 0.0}, 1).real();
}

// Miller's backward recurrence for integer orders, normalized with
// J_0 + 2 sum_k J_{2k} = 1.
double bessel_j_integer_miller(int order, double x) {
  const double reach = std::max<double>(order, x);
  int start = static_cast<int>(reach + 30.0 + std::sqrt(40.0 * reach));
  start += start % 2;
  double next = 0.0;  // J_{k+1}
  double curr = 1e-300;  // J_k
  double sum = 0.0;
  double result = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = (2.0 * k / x) * curr - next;  // J_{k-1}
    next = curr;
    curr = prev;
    if (std::abs(curr) > 1e250) {
      curr *= 1e-250;
      next *= 1e-250;
      sum *= 1e-250;
      result *= 1e-250;
    }
    if ((k - 1) == order) result = curr;
    if ((k - 1) % 2 == 0 && k - 1 > 0) sum += 2.0 * curr;
  }
  sum += curr;  // J_0
  return result / sum;
}

// Half-integer orders n + 1/2. Upward recurrence is stable while x >= order; below that
// the backward recurrence is normalized against the closed forms of J_{+-1/2}.
double bessel_j_half_integer(HalfInt order, double x) {
  const int n = order.floor();  // order = n + 1/2
  if (x >= order.value()) {
    double prev = j_minus_half(x);
    double curr = j_plus_half(x);
    for (int k = 0; k < n; ++k) {
      const double mu = k + 0.5;
      const double next = (2.0 * mu / x) * curr - prev;
      prev = curr;
      curr = next;
    }
    return curr;
  }
  const int start = n + 20 + static_cast<int>(std::sqrt(40.0 * (n + 1)));
  double next = 0.0;
  double curr = 1e-300;  // J_{start+1/2}
  double at_order = (start == n) ? curr : 0.0;
  for (int k = start; k >= 0; --k) {
    // curr = J_{k+1/2}; compute J_{k-1/2}
    const double mu = k + 0.5;
    const double prev = (2.0 * mu / x) * curr - next;
    next = curr;
    curr = prev;
    if ((k - 1) == n) at_order = curr;
    if (std::abs(curr) > 1e250) {
      curr *= 1e-250;
      next *= 1e-250;
      at_order *= 1e-250;
    }
  }
  // curr = J_{-1/2}, next = J_{1/2} (unnormalized)
  const double jm = j_minus_half(x);
  const double jp = j_plus_half(x);
  const double scale = std::abs(jm) > std::abs(jp) ? jm / curr : jp / next;
  if (n == 0) return next * scale;
  return at_order * scale;
}

}  // namespace

double gamma(HalfInt x) {
  if (x.is_integer()) {
    const int n = x.as_int();
    if (n <= 0) gamma_pole(x.value());
    return factorial(n - 1);
  }
  if (x.twice() > 0) {
    // Gamma(k + 1/2) = sqrt(pi) prod_{j<k} (j + 1/2)
    const int k = x.floor();
    double r = kSqrtPi;
    for (int j = 0; j < k; ++j) r *= j + 0.5;
    return r;
  }
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), with sin(pi x) = +-1 exactly here.
  // x = -k - 1/2  =>  sin(pi x) = -(-1)^k
  const int k = -x.floor() - 1;
  const double sine = (k % 2 == 0) ? -1.0 : 1.0;
  return kPi / (sine * gamma(HalfInt(1) - x));
}

double gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) gamma_pole(x);
  const double twice = 2.0 * x;
  if (twice == std::floor(twice) && std::abs(twice) < 1e6) {
    return gamma(HalfInt::from_twice(static_cast<int>(twice)));
  }
  return std::tgamma(x);
}

double factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

double pochhammer(double a, int k) {
  if (k < 0) throw DomainError("pochhammer requires k >= 0");
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= a + j;
  return r;
}

double binomial(double top, int k) {
  if (k < 0) return 0.0;
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= (top - j) / (j + 1);
  return r;
}

double bessel_j(HalfInt order, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_j requires x > 0");
  if (order.twice() < 0) throw DomainError("bessel_j requires a non-negative order");
  if (x <= 1.0) return detail::bessel_j_series(order, x);
  if (!order.is_integer()) return bessel_j_half_integer(order, x);
  const int n = order.as_int();
  if (x >= 25.0 && x > n) {
    double prev = bessel_j_large(0, x);
    if (n == 0) return prev;
    double curr = bessel_j_large(1, x);
    for (int k = 1; k < n; ++k) {
      const double next = (2.0 * k / x) * curr - prev;
      prev = curr;
      curr = next;
    }
    return curr;
  }
  return bessel_j_integer_miller(n, x);
}

double reduced_bessel_j(HalfInt order, HalfInt scale, double x) {
  const HalfInt gap = order - scale;
  if (!gap.is_integer() || gap.twice() < 0) {
    throw DomainError("reduced_bessel_j requires order - scale to be a non-negative integer");
  }
  const double ax = std::abs(x);
  if (ax <= 1.0) {
    // (2/x)^scale (x/2)^order sum_j (-1)^j (x/2)^{2j} / (j! Gamma(j+order+1))
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = 1.0 / gamma(order + 1);
    double sum = term;
    for (int j = 1; j < 60; ++j) {
      term *= -h2 / (j * (j + order.value()));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return std::pow(h, gap.as_int()) * sum;
  }
  const double value = std::pow(2.0 / ax, scale.value()) * bessel_j(order, ax);
  return (x < 0.0 && gap.as_int() % 2 != 0) ? -value : value;
}

namespace detail {

std::complex<double> hankel_asymptotic(HalfInt order, std::complex<double> z, int kind) {
  const double nu = order.value();
  const double four_nu2 = 4.0 * nu * nu;
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> step = (kind == 1 ? i : -i) / (8.0 * z);
  std::complex<double> term(1.0, 0.0);
  std::complex<double> sum = term;
  double smallest = std::abs(term);
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (four_nu2 - odd * odd) / k * step;
    const double mag = std::abs(term);
    if (mag == 0.0) break;
    if (mag > smallest) break;  // asymptotic series: stop at the smallest term
    smallest = mag;
    sum += term;
    if (mag < 1e-17 * std::abs(sum)) break;
  }
  const double phase = nu * kPi / 2.0 + kPi / 4.0;
  const std::complex<double> osc =
      kind == 1 ? std::exp(i * (z - phase)) : std::exp(-i * (z - phase));
  return std::sqrt(2.0 / (kPi * z)) * osc * sum;
}

double bessel_j_series(HalfInt order, double x) {
  const double h = 0.5 * x;
  const double h2 = h * h;
  double term = std::pow(h, order.value()) / gamma(order + 1);
  double sum = term;
  for (int j = 1; j < 200; ++j) {
    term *= -h2 / (j * (j + order.value()));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace detail

}  // namespace hydromom::specfun
