#include "hydromom/spherical.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hydromom/errors.hpp"
#include "hydromom/quadrature.hpp"
#include "hydromom/specfun.hpp"

namespace hydromom::spherical {

using specfun::factorial;
using specfun::gamma;
using specfun::pochhammer;

void validate(const SphericalState& s) {
  if (s.n < 1) throw DomainError("n must be >= 1");
  if (s.l < 0 || s.l >= s.n) throw DomainError("l must satisfy 0 <= l < n");
  if (std::abs(s.m) > s.l) throw DomainError("m must satisfy |m| <= l");
  if (!(s.Z > 0.0) || !std::isfinite(s.Z)) throw DomainError("Z must be positive");
}

SphericalState make_state(int n, int l, int m, double Z) {
  SphericalState s{n, l, m, Z};
  validate(s);
  return s;
}

double energy(int n, double Z) {
  if (n < 1) throw DomainError("n must be >= 1");
  return -(Z * Z) / (2.0 * n * n);
}

double energy(const SphericalState& s) {
  validate(s);
  return energy(s.n, s.Z);
}

double radial_s_sum(int n, int l) {
  const int top = n - l - 1;
  double s = 0.0;
  for (int k = 0; k <= top; ++k) {
    for (int j = 0; j <= top; ++j) {
      const double sign = (k + j) % 2 == 0 ? 1.0 : -1.0;
      s += sign * factorial(2 * l + k + j + 2) /
           (factorial(k) * factorial(j) * factorial(top - k) * factorial(top - j) *
            factorial(2 * l + k + 1) * factorial(2 * l + j + 1));
    }
  }
  return s;
}

double radial_normalization(int n, int l, double p0) {
  return std::ldexp(1.0, l + 1) /
         (factorial(n - l - 1) * std::sqrt(std::numbers::pi * radial_s_sum(n, l))) *
         std::sqrt(n / p0);
}

PoleSum alpha_radial(const SphericalState& s) {
  validate(s);
  const int n = s.n;
  const int l = s.l;
  const Complex a(0.0, s.p0() / n);
  const double norm = radial_normalization(n, l, s.p0());
  std::vector<PoleTerm> terms;
  for (int k = 0; k <= n - l - 1; ++k) {
    const double c = norm * specfun::binomial(n - l - 1, k) * std::ldexp(1.0, k) *
                     factorial(l + k + 1) / factorial(2 * l + k + 1);
    terms.push_back({c * std::pow(a, l + k + 2), a, HalfInt(l + k + 2)});
  }
  return PoleSum(std::move(terms));
}

Complex beta_normalization(int l, int m) {
  const int am = std::abs(m);
  const double mag = std::sqrt((2.0 * l + 1.0) * factorial(l - am) / (2.0 * factorial(l + am)));
  return std::polar(mag, std::numbers::pi / 4.0);
}

AngularFunction beta_angular_function(int l, int m) {
  const int am = std::abs(m);
  if (l < 0 || am > l) throw DomainError("beta requires 0 <= |m| <= l");
  const Complex nb = beta_normalization(l, m);
  const double half_m = am / 2.0;
  AngularFunction out;
  out.l = l;
  out.m = am;
  out.scale = HalfInt::from_twice(am + 1);
  const int d = l - am;
  if (d % 2 == 0) {
    const int n = d / 2;
    const double pref = std::ldexp(1.0, am) * gamma(kHalf) * gamma(HalfInt::from_twice(am + 2)) *
                        gamma(HalfInt::from_twice(am + 1)) /
                        (gamma(HalfInt::from_twice(1 - l - am)) * gamma(HalfInt(1 + n)) *
                         gamma(HalfInt::from_twice(am + 3 + 2 * n)));
    for (int k = 0; k <= n; ++k) {
      const double sign_k = k % 2 == 0 ? 1.0 : -1.0;            // (-i)^(2k)
      const double sign_nk = (n - k) % 2 == 0 ? 1.0 : -1.0;
      const double c = (2.0 * k + half_m + 0.5) * sign_k * pochhammer(-n, k) *
                       pochhammer(n + am + 0.5, k) / (factorial(k) * pochhammer(0.5, k)) * sign_nk *
                       pochhammer(half_m, n - k) * pochhammer(half_m + 0.5, k) *
                       pochhammer(half_m + 1.0, k) / pochhammer(half_m + 1.5 + n, k);
      if (c == 0.0) continue;
      out.terms.push_back({nb * (pref * c), HalfInt::from_twice(am + 4 * k + 1)});
    }
  } else {
    const int n = (d - 1) / 2;
    const double pref = -std::ldexp(1.0, am + 1) * gamma(kHalf) *
                        gamma(HalfInt::from_twice(am + 2)) * gamma(HalfInt::from_twice(am + 3)) /
                        (gamma(HalfInt::from_twice(1 + l - am)) * gamma(HalfInt::from_twice(-l - am)) *
                         gamma(HalfInt::from_twice(am + 5 + 2 * n)));
    for (int k = 0; k <= n; ++k) {
      const double sign_k = k % 2 == 0 ? 1.0 : -1.0;            // (-i)^(2k+1) = -i (-1)^k
      const double sign_nk = (n - k) % 2 == 0 ? 1.0 : -1.0;
      const double c = (2.0 * k + half_m + 1.5) * sign_k * pochhammer(-n, k) *
                       pochhammer(n + am + 1.5, k) / (factorial(k) * pochhammer(1.5, k)) * sign_nk *
                       pochhammer(half_m, n - k) * pochhammer(half_m + 1.5, k) *
                       pochhammer(half_m + 1.0, k) / pochhammer(half_m + 2.5 + n, k);
      if (c == 0.0) continue;
      out.terms.push_back({nb * Complex(0.0, -pref * c), HalfInt::from_twice(am + 4 * k + 3)});
    }
  }
  return out;
}

Complex AngularFunction::operator()(double p_theta) const {
  Complex sum(0.0, 0.0);
  for (const auto& t : terms) sum += t.coeff * specfun::reduced_bessel_j(t.order, scale, p_theta);
  return sum;
}

Complex beta_angular(int l, int m, double p_theta) { return beta_angular_function(l, m)(p_theta); }

namespace {

constexpr double kTailStart = 40.0;

// sum_k coeff_k (2/z)^scale H^(kind)_{order_k}(z) for complex z in the right half plane.
Complex hankel_part(const AngularFunction& f, Complex z, int kind) {
  Complex sum(0.0, 0.0);
  for (const auto& t : f.terms) sum += t.coeff * specfun::detail::hankel_asymptotic(t.order, z, kind);
  return sum * std::pow(Complex(2.0, 0.0) / z, f.scale.value());
}

// Same with every coefficient conjugated: the continuation of conj(f(x)) from real x is
// built from conj(coeff) times the same real-on-axis Hankel pieces.
AngularFunction conjugated(const AngularFunction& f) {
  AngularFunction g = f;
  for (auto& t : g.terms) t.coeff = std::conj(t.coeff);
  return g;
}

}  // namespace

Complex angular_overlap(const AngularFunction& a, const AngularFunction& b) {
  if (a.parity() * b.parity() < 0) return Complex(0.0, 0.0);
  const AngularFunction bc = conjugated(b);
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-10;

  std::vector<double> cuts;
  for (int k = 1; k < 40; ++k) cuts.push_back(k * 1.0);
  const Complex head =
      integrate_adaptive([&](double p) { return a(p) * std::conj(b(p)); }, 0.0, kTailStart, opts, cuts)
          .value;

  // J = (H1 + H2) / 2, so a * conj(b) = (A1 + A2)(B1 + B2) / 4 with B built from bc.
  const double P = kTailStart;
  auto piece = [&](Complex z, int ka, int kb) { return hankel_part(a, z, ka) * hankel_part(bc, z, kb); };
  // H1 H1 grows like exp(2iz): decays upwards along z = P + i t.
  const Complex up =
      Complex(0.0, 1.0) *
      integrate_half_line([&](double t) { return piece(Complex(P, t), 1, 1); }, 1.0, opts).value;
  const Complex down =
      Complex(0.0, -1.0) *
      integrate_half_line([&](double t) { return piece(Complex(P, -t), 2, 2); }, 1.0, opts).value;
  const Complex cross = integrate_algebraic_tail(
                            [&](double p) {
                              const Complex z(p, 0.0);
                              return piece(z, 1, 2) + piece(z, 2, 1);
                            },
                            P, opts)
                            .value;
  const Complex half = head + 0.25 * (up + down + cross);
  return 2.0 * half;
}

Complex SphericalWavefunction::operator()(double p_r, double p_theta) const {
  return radial(Complex(p_r, 0.0)) * angular(p_theta);
}

SphericalWavefunction wavefunction_spherical(const SphericalState& s) {
  validate(s);
  return {s, alpha_radial(s), beta_angular_function(s.l, s.m), rho_delta(s.m)};
}

}  // namespace hydromom::spherical
