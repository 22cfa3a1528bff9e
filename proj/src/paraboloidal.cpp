#include "hydromom/paraboloidal.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hydromom/errors.hpp"
#include "hydromom/residue.hpp"
#include "hydromom/specfun.hpp"
#include "hydromom/spherical.hpp"

namespace hydromom::parabolic {

using specfun::factorial;
using specfun::gamma;

std::string ParabolicState::label() const {
  return std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(m);
}

ParabolicState parabolic_numbers(int n1, int n2, int m, double Z) {
  if (n1 < 0 || n2 < 0) throw DomainError("n1 and n2 must be >= 0");
  if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("Z must be positive");
  const int am = std::abs(m);
  ParabolicState s;
  s.n1 = n1;
  s.n2 = n2;
  s.m = m;
  s.Z = Z;
  s.n = n1 + n2 + am + 1;
  s.l_eff = HalfInt::from_twice(am - 1);
  s.n_eff1 = HalfInt::from_twice(2 * n1 + am + 1);
  s.n_eff2 = HalfInt::from_twice(2 * n2 + am + 1);
  s.Z1 = Z * s.n_eff1.value() / s.n;
  s.Z2 = Z - s.Z1;
  s.p0 = Z;
  return s;
}

namespace {

int radial_count(const ParabolicState& s, Axis which) { return which == Axis::u ? s.n1 : s.n2; }
HalfInt effective_n(const ParabolicState& s, Axis which) {
  return which == Axis::u ? s.n_eff1 : s.n_eff2;
}

}  // namespace

double closed_form_s_sum(HalfInt n_eff, HalfInt l) {
  const int top = (n_eff - l - HalfInt(1)).as_int();
  const HalfInt two_l = l + l;
  double s = 0.0;
  for (int k = 0; k <= top; ++k) {
    for (int j = 0; j <= top; ++j) {
      const double sign = (k + j) % 2 == 0 ? 1.0 : -1.0;
      s += sign * gamma(two_l + HalfInt(k + j + 3)) /
           (factorial(k) * factorial(j) * gamma(n_eff - l - HalfInt(k)) *
            gamma(n_eff - l - HalfInt(j)) * gamma(two_l + HalfInt(k + 2)) *
            gamma(two_l + HalfInt(j + 2)));
    }
  }
  return s;
}

double closed_form_normalization(const ParabolicState& s, Axis which) {
  const HalfInt ne = effective_n(s, which);
  const HalfInt l = s.l_eff;
  return std::pow(2.0, l.value() + 1.0) /
         (gamma(ne - l) * std::sqrt(std::numbers::pi * closed_form_s_sum(ne, l))) *
         std::sqrt(s.n / s.p0);
}

PoleSum alpha_parabolic_closed_form(const ParabolicState& s, Axis which) {
  const int ni = radial_count(s, which);
  const HalfInt l = s.l_eff;
  const Complex a(0.0, s.p0 / s.n);
  const double norm = closed_form_normalization(s, which);
  std::vector<PoleTerm> terms;
  for (int k = 0; k <= ni; ++k) {
    const HalfInt e = l + HalfInt(k + 2);
    const double c = norm * specfun::binomial(ni, k) * std::ldexp(1.0, k) * gamma(e) /
                     gamma(l + l + HalfInt(k + 2));
    terms.push_back({c * std::pow(a, e.value()), a, e});
  }
  return PoleSum(std::move(terms));
}

double norm_squared(const PoleSum& f) {
  const PoleSum fc = conjugate_on_real_axis(f);
  if (all_integer_exponents(f)) return integrate_product_contour(f, fc).real();
  QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.rel_tol = 1e-13;
  return integrate_product_quadrature(f, fc, opts).real();
}

PoleSum alpha_parabolic(const ParabolicState& s, Axis which) {
  PoleSum f = alpha_parabolic_closed_form(s, which);
  f *= Complex(1.0 / std::sqrt(norm_squared(f)), 0.0);
  return f;
}

Complex MomentumWavefunction::operator()(double p_u, double p_v) const {
  return u_factor(Complex(p_u, 0.0)) * v_factor(Complex(p_v, 0.0));
}

MomentumWavefunction wavefunction_parabolic(const ParabolicState& s) {
  return {s, alpha_parabolic(s, Axis::u), alpha_parabolic(s, Axis::v), rho_delta(s.m)};
}

double energy_parabolic(const ParabolicState& s) { return spherical::energy(s.n, s.Z); }

std::vector<ParabolicState> enumerate_shell(int n, double Z) {
  if (n < 1) throw DomainError("shell index must be >= 1");
  std::vector<ParabolicState> out;
  for (int am = 0; am <= n - 1; ++am) {
    const int rest = n - 1 - am;
    for (int n1 = rest; n1 >= 0; --n1) {
      out.push_back(parabolic_numbers(n1, rest - n1, am, Z));
      if (am > 0) out.push_back(parabolic_numbers(n1, rest - n1, -am, Z));
    }
  }
  return out;
}

bool has_tabulated_closed_form(const ParabolicState& s) {
  return s.n <= 2;
}

Complex tabulated_closed_form(const ParabolicState& s, double p_u, double p_v) {
  const double p0 = s.p0;
  const Complex i(0.0, 1.0);
  const Complex pu(p_u, 0.0);
  const Complex pv(p_v, 0.0);
  auto pw = [](Complex w, double e) { return std::pow(w, e); };
  if (s.n == 1) {
    return -i * p0 * p0 / (2.0 * pw(pu - i * p0, 1.5) * pw(pv - i * p0, 1.5));
  }
  if (s.n == 2 && s.m == 0) {
    const Complex pre = i * p0 * p0 / (4.0 * std::sqrt(2.0));
    const Complex h = i * p0 / 2.0;
    if (s.n1 == 1) return pre * (pu + i * p0 / 4.0) / (pw(pu - h, 2.5) * pw(pv - h, 1.5));
    return pre * (pv + i * p0 / 4.0) / (pw(pu - h, 1.5) * pw(pv - h, 2.5));
  }
  if (s.n == 2) {
    const Complex h = i * p0 / 2.0;
    return p0 * p0 * p0 / (4.0 * std::numbers::pi) / ((pu - h) * (pu - h) * (pv - h) * (pv - h));
  }
  throw DomainError("no tabulated closed form for state " + s.label());
}

}  // namespace hydromom::parabolic
