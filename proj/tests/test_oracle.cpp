#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hydromom/errors.hpp"
#include "hydromom/oracle.hpp"
#include "hydromom/quadrature.hpp"
#include "hydromom/spherical.hpp"

using namespace hydromom;
using namespace hydromom::oracle;

namespace {

const Complex I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

std::vector<double> span(double a, double b, int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(a + (b - a) * k / (n - 1));
  return v;
}

std::vector<Complex> values_of(const PoleSum& f, const std::vector<double>& ps) {
  std::vector<Complex> v;
  for (double p : ps) v.push_back(f(p));
  return v;
}

int sign_changes(const std::function<double(double)>& f, double a, double b) {
  int changes = 0;
  double prev = f(a);
  for (double x = a; x <= b; x += 1e-3) {
    const double cur = f(x);
    if (cur == 0.0) continue;
    if ((cur > 0) != (prev > 0)) ++changes;
    prev = cur;
  }
  return changes;
}

}  // namespace

TEST_CASE("generalized Laguerre against the standard library") {
  for (int n = 0; n <= 6; ++n) {
    for (int a = 0; a <= 7; ++a) {
      for (double x : {0.0, 0.3, 2.0, 7.5, 15.0}) {
        const double ref = std::assoc_laguerre(n, a, x);
        CHECK(std::abs(generalized_laguerre(n, a, x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      }
    }
  }
}

TEST_CASE("position radial functions") {
  CHECK(std::abs(position_radial(1, 0, 1.0) - 2.0 * std::exp(-1.0)) < 1e-15);
  CHECK(std::abs(position_radial(1, 0, 0.5, 2.0) - 2.0 * std::pow(2.0, 1.5) * std::exp(-1.0)) < 1e-14);
  CHECK_THROWS_AS(position_radial(1, 0, 0.0), DomainError);
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      CHECK(std::abs(position_expectation_radial(n, l, 1.0, Operator::identity) - 1.0) < 1e-14);
      const double norm = integrate_half_line(
                              [&](double r) {
                                if (r <= 0.0) return Complex(0.0, 0.0);
                                const double R = position_radial(n, l, r);
                                return Complex(R * R * r * r, 0.0);
                              },
                              double(n * n))
                              .value.real();
      CHECK(std::abs(norm - 1.0) < 1e-10);
      for (double r = 0.1; r <= 20.0; r += 0.1) CHECK(std::abs(radial_ode_residual(n, l, r)) < 1e-8);
    }
  }
  // textbook moments
  CHECK(std::abs(position_expectation_radial(1, 0, 1.0, Operator::position) - 1.5) < 1e-12);
  CHECK(std::abs(position_expectation_radial(2, 1, 1.0, Operator::inverse_position) - 0.25) < 1e-12);
}

TEST_CASE("position paraboloidal functions") {
  // ground state: U proportional to exp(-p0 u / 2), residual vanishes with E = -p0^2/2, Z1 = Z/2
  for (double u : {0.05, 0.7, 3.0, 12.0}) {
    CHECK(std::abs(position_parabolic(0, 0, 0.5, 1, u) - std::exp(-u / 2.0)) < 1e-15);
    CHECK(std::abs(parabolic_ode_residual(0, 0, 0.5, 1, u)) < 1e-7);
  }
  CHECK_THROWS_AS(position_parabolic(0, 0, 0.5, 1, 0.0), DomainError);
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n, 1.3)) {
      for (auto ax : {parabolic::Axis::u, parabolic::Axis::v}) {
        const int ni = ax == parabolic::Axis::u ? s.n1 : s.n2;
        const double zi = ax == parabolic::Axis::u ? s.Z1 : s.Z2;
        CHECK(std::abs(position_expectation_parabolic(s, ax, Operator::identity) - 1.0) < 1e-14);
        const double norm = integrate_half_line(
                                [&](double u) {
                                  if (u <= 0.0) return Complex(0.0, 0.0);
                                  const double U = position_parabolic(ni, s.m, zi, s.n, u);
                                  return Complex(U * U * u, 0.0);
                                },
                                2.0 * n)
                                .value.real();
        CHECK(std::abs(norm - 1.0) < 1e-10);
        for (double u = 0.05; u <= 30.0; u += 0.25) {
          CHECK(std::abs(parabolic_ode_residual(ni, s.m, zi, s.n, u)) < 1e-7);
        }
      }
    }
  }
}

TEST_CASE("node count equals n1") {
  for (int n1 = 0; n1 <= 3; ++n1) {
    for (int m : {0, 1, 2}) {
      const int n = n1 + std::abs(m) + 1;
      const double zi = 1.0 * (n1 + (std::abs(m) + 1) / 2.0) / n;
      CHECK(sign_changes([&](double u) { return position_parabolic(n1, m, zi, n, u); }, 1e-3, 80.0) == n1);
    }
  }
}

TEST_CASE("associated Legendre functions") {
  CHECK(associated_legendre(0, 0, 0.3) == 1.0);
  CHECK(std::abs(associated_legendre(1, 1, 0.5) + std::sqrt(0.75)) < 1e-15);
  CHECK(std::abs(associated_legendre(2, 0, 0.5) + 0.125) < 1e-15);
  for (int l = 0; l <= 5; ++l) {
    for (int m = 0; m <= l; ++m) {
      for (double x : {-0.9, -0.2, 0.0, 0.45, 0.99}) {
        const double ref = (m % 2 == 0 ? 1.0 : -1.0) * std::assoc_legendre(l, m, x);
        CHECK(std::abs(associated_legendre(l, m, x) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
        CHECK(associated_legendre(l, -m, x) == associated_legendre(l, m, x));
      }
    }
  }
  CHECK_THROWS_AS(associated_legendre(1, 0, 1.5), DomainError);
}

TEST_CASE("transform of r R_10 is proportional to (p - i p0)^-2") {
  const double p0 = 1.0;
  const auto ps = span(-4.0, 4.0, 33);
  const auto numeric = conjugate_transform(radial_samples(1, 0, p0), -1, ps);
  const auto fit = fit_proportionality(numeric, values_of(PoleSum::single(1.0, Complex(0.0, p0), 2), ps));
  CHECK(fit.max_rel_err <= 1e-6);
  // int_0^inf exp(-i p r) r 2 exp(-r) dr = 2 / (1 + i p)^2 = -2 (p - i)^-2
  CHECK(std::abs(fit.constant + 2.0) < 1e-9);
  const auto vs_alpha =
      fit_proportionality(numeric, values_of(spherical::alpha_radial(spherical::make_state(1, 0, 0)), ps));
  CHECK(vs_alpha.max_rel_err <= 1e-6);
}

TEST_CASE("transform of the ground paraboloidal function") {
  const auto s = parabolic::parabolic_numbers(0, 0, 0);
  const auto ps = span(-4.0, 4.0, 33);
  const auto numeric = conjugate_transform(parabolic_samples(s, parabolic::Axis::u), -1, ps);
  const auto closed = values_of(PoleSum::single(1.0, I, HalfInt::from_twice(3)), ps);
  const auto fit = fit_proportionality(numeric, closed);
  CHECK(fit.max_rel_err <= 1e-6);
  // int_0^inf exp(-i p s) sqrt(s) exp(-s) ds = Gamma(3/2) (1 + i p)^(-3/2)
  CHECK(std::abs(fit.constant - std::sqrt(kPi) / 2.0 * std::polar(1.0, -0.75 * kPi)) < 1e-9);
}

TEST_CASE("transform is linear and the parallel path matches the serial one") {
  const auto f = radial_samples(2, 1, 1.0);
  auto g = f;
  const Complex a(0.3, -1.7);
  for (auto& v : g.values) v *= a;
  const auto ps = span(-3.0, 3.0, 17);
  const auto tf = conjugate_transform(f, -1, ps);
  const auto tg = conjugate_transform_serial(g, -1, ps);
  for (std::size_t k = 0; k < ps.size(); ++k) CHECK(std::abs(tg[k] - a * tf[k]) <= 1e-12 * std::abs(tg[k]));
  CHECK(conjugate_transform(f, -1, ps) == conjugate_transform_serial(f, -1, ps));
  CHECK_THROWS_AS(conjugate_transform(f, 0, ps), DomainError);
}

TEST_CASE("Parseval fixes the transform constant") {
  // The sampled transform is only trusted on a moderate window, so compare window integrals
  // against the closed form and read the full-line statement off the fit constant.
  const double P = 8.0;
  for (int n = 1; n <= 3; ++n) {
    for (int l = 0; l < n; ++l) {
      const auto f = radial_samples(n, l, 1.0);
      const auto alpha = spherical::alpha_radial(spherical::make_state(n, l, 0));
      const auto ps = span(-3.0, 3.0, 25);
      const auto fit = fit_proportionality(conjugate_transform_serial(f, -1, ps), values_of(alpha, ps));
      CHECK(std::abs(std::norm(fit.constant) - 2.0 * kPi * weighted_norm_squared(f)) < 1e-10);
      CHECK(std::abs(weighted_norm_squared(f) - 1.0) < 1e-12);
      const auto window = integrate_adaptive(
          [&](double p) { return Complex(std::norm(conjugate_transform_serial(f, -1, {p})[0]), 0.0); }, -P, P);
      const auto closed = integrate_adaptive([&](double p) { return Complex(std::norm(alpha(p)), 0.0); }, -P, P);
      CHECK(std::abs(window.value.real() - 2.0 * kPi * closed.value.real()) <= 1e-8);
    }
  }
}

TEST_CASE("kernel sign selects upper-half-plane poles") {
  const auto ps = span(-4.0, 4.0, 33);
  for (int n = 1; n <= 3; ++n) {
    const auto closed = values_of(spherical::alpha_radial(spherical::make_state(n, 0, 0)), ps);
    CHECK(fit_proportionality(conjugate_transform(radial_samples(n, 0, 1.0), -1, ps), closed).max_rel_err <= 1e-6);
    CHECK(fit_proportionality(conjugate_transform(radial_samples(n, 0, 1.0), +1, ps), closed).max_rel_err > 0.1);
  }
}

TEST_CASE("angular transform matches beta for l=2, m=0 at p = 3") {
  const auto ps = span(0.1, 20.0, 40);
  const auto numeric = conjugate_transform(angular_samples(2, 0), -1, ps);
  std::vector<Complex> closed;
  for (double p : ps) closed.push_back(spherical::beta_angular(2, 0, p));
  const auto fit = fit_proportionality(numeric, closed);
  CHECK(fit.max_rel_err <= 1e-6);
  const Complex at3 = conjugate_transform(angular_samples(2, 0), -1, {3.0})[0];
  CHECK(std::abs(at3 - fit.constant * spherical::beta_angular(2, 0, 3.0)) < 1e-9);
}

TEST_CASE("fit_proportionality") {
  std::vector<Complex> closed, numeric, noisy;
  for (int k = 0; k < 12; ++k) {
    closed.emplace_back(std::cos(k), 1.0 + 0.1 * k);
    numeric.push_back(Complex(0.0, 2.0) * closed.back());
    noisy.push_back(closed.back() + Complex(1e-9 * std::sin(3.0 * k), -1e-9 * std::cos(5.0 * k)));
  }
  const auto exact = fit_proportionality(numeric, closed);
  CHECK(std::abs(exact.constant - Complex(0.0, 2.0)) < 1e-15);
  CHECK(exact.max_rel_err < 1e-15);
  CHECK(fit_proportionality(noisy, closed).max_rel_err <= 1e-8);
  CHECK_THROWS_AS(fit_proportionality(numeric, std::vector<Complex>(12, 0.0)), DegenerateFitError);
  CHECK_THROWS_AS(fit_proportionality({1.0, 2.0}, {1.0, 2.0}), DomainError);
}

TEST_CASE("expectation values") {
  const auto a = spherical::alpha_radial(spherical::make_state(1, 0, 0));
  CHECK(std::abs(expectation(a, Operator::identity) - 1.0) < 1e-14);
  const double p0 = 1.7;
  const auto b = spherical::alpha_radial(spherical::make_state(1, 0, 0, p0));
  const Complex inv = expectation(b, Operator::inverse_position);
  CHECK(std::abs(inv.real() - p0) < 1e-12);
  CHECK(std::abs(inv.imag()) < 1e-9);
  CHECK(std::abs(position_expectation_radial(1, 0, p0, Operator::inverse_position) - p0) < 1e-12);
  const Complex r = expectation(b, Operator::position);
  CHECK(std::abs(r.real() - 1.5 / p0) < 1e-12);
  CHECK(std::abs(r.imag()) < 1e-9);

  const auto g = parabolic::parabolic_numbers(0, 0, 0, p0);
  const auto u = parabolic::alpha_parabolic(g, parabolic::Axis::u);
  const double u_mom = normalized_expectation(u, Operator::position, parabolic::kCoordinateScale);
  const double u_pos = position_expectation_parabolic(g, parabolic::Axis::u, Operator::position);
  CHECK(std::abs(u_pos - 2.0 / p0) < 1e-12);
  CHECK(std::abs(u_mom - u_pos) <= 1e-6 * u_pos);
  CHECK(std::abs(expectation(u, Operator::position).imag()) < 1e-9);
}

TEST_CASE("two-sided expectation agreement") {
  for (int n = 1; n <= 3; ++n) {
    const auto a = spherical::alpha_radial(spherical::make_state(n, 0, 0));
    const double mom = normalized_expectation(a, Operator::inverse_position);
    CHECK(std::abs(mom - 1.0 / (n * n)) < 1e-6 / (n * n));
    CHECK(std::abs(mom - position_expectation_radial(n, 0, 1.0, Operator::inverse_position)) < 1e-6 / (n * n));
  }
  for (int n = 1; n <= 2; ++n) {
    for (const auto& s : parabolic::enumerate_shell(n)) {
      for (auto ax : {parabolic::Axis::u, parabolic::Axis::v}) {
        const auto f = parabolic::alpha_parabolic(s, ax);
        for (auto op : {Operator::position, Operator::inverse_position}) {
          const double mom = normalized_expectation(f, op, parabolic::kCoordinateScale);
          const double pos = position_expectation_parabolic(s, ax, op);
          CHECK(std::abs(mom - pos) <= 1e-6 * std::abs(pos));
        }
      }
    }
  }
}
