#include "hydromom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "hydromom/errors.hpp"

namespace hydromom {

namespace {

// QUADPACK qk15 abscissae (xgk) and weights; odd entries of xgk are the 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a;
  double b;
  std::complex<double> value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

Interval evaluate(const ComplexIntegrand& f, double a, double b) {
  const auto pair = detail::gauss_kronrod_15(f, a, b);
  return {a, b, pair.kronrod, std::abs(pair.kronrod - pair.gauss)};
}

}  // namespace

namespace detail {

KronrodPair gauss_kronrod_15(const ComplexIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const std::complex<double> fc = f(center);
  std::complex<double> kronrod = fc * kWgk[7];
  std::complex<double> gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const std::complex<double> sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {kronrod * half, gauss * half};
}

}  // namespace detail

QuadratureResult integrate_adaptive(const ComplexIntegrand& f, double a, double b,
                                    const QuadratureOptions& opts,
                                    const std::vector<double>& breakpoints) {
  std::vector<double> cuts{a};
  for (double c : breakpoints) {
    if (c > a && c < b) cuts.push_back(c);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  std::priority_queue<Interval> heap;
  std::complex<double> total(0.0, 0.0);
  double error = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Interval iv = evaluate(f, cuts[k], cuts[k + 1]);
    total += iv.value;
    error += iv.error;
    heap.push(iv);
  }
  int count = static_cast<int>(heap.size());
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (count >= opts.max_intervals) {
      throw NonConvergenceError("adaptive quadrature did not converge: error estimate " +
                                std::to_string(error));
    }
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision; accept what we have.
      break;
    }
    Interval left = evaluate(f, worst.a, mid);
    Interval right = evaluate(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++count;
  }
  // Recompute the totals from the leaves to shed accumulated update roundoff.
  std::complex<double> sum(0.0, 0.0);
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, count};
}

QuadratureResult integrate_whole_line(const ComplexIntegrand& f, double scale,
                                      const QuadratureOptions& opts) {
  const double L = scale;
  QuadratureOptions part = opts;
  part.abs_tol = opts.abs_tol / 3.0;
  const auto inner = integrate_adaptive(f, -L, L, part, {-0.5 * L, -0.1 * L, 0.0, 0.1 * L, 0.5 * L});
  auto tail = [&](double sign) {
    return integrate_adaptive(
        [&, sign](double x) {
          const double p = sign * L / (x * x);
          return f(p) * (2.0 * L / (x * x * x));
        },
        0.0, 1.0, part);
  };
  const auto right = tail(1.0);
  const auto left = tail(-1.0);
  return {inner.value + right.value + left.value, inner.error + right.error + left.error,
          inner.intervals + right.intervals + left.intervals};
}

QuadratureResult integrate_algebraic_tail(const ComplexIntegrand& f, double start,
                                          const QuadratureOptions& opts) {
  return integrate_adaptive(
      [&](double x) { return f(start / x) * (start / (x * x)); }, 0.0, 1.0, opts);
}

QuadratureResult integrate_half_line(const ComplexIntegrand& f, double scale,
                                     const QuadratureOptions& opts) {
  return integrate_adaptive(
      [&](double t) {
        const double one_minus = 1.0 - t;
        const double q = scale * t / one_minus;
        const double jac = scale / (one_minus * one_minus);
        if (!std::isfinite(q) || !std::isfinite(jac)) return std::complex<double>(0.0, 0.0);
        const auto v = f(q);
        if (v == std::complex<double>(0.0, 0.0)) return v;
        return v * jac;
      },
      0.0, 1.0, opts, {0.25, 0.5, 0.75});
}

std::complex<double> integrate_whole_line_tangent(const ComplexIntegrand& f, double scale,
                                                  int panels, int nodes) {
  const auto rule = gauss_legendre(nodes);
  const double lo = -std::numbers::pi / 2.0;
  const double width = std::numbers::pi / panels;
  std::complex<double> sum(0.0, 0.0);
  for (int k = 0; k < panels; ++k) {
    const double a = lo + k * width;
    const double center = a + 0.5 * width;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double theta = center + 0.5 * width * rule.nodes[j];
      const double c = std::cos(theta);
      const double p = scale * std::tan(theta);
      sum += rule.weights[j] * 0.5 * width * f(p) * (scale / (c * c));
    }
  }
  return sum;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre requires n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace hydromom
