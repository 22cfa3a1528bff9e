#include "hydromom/residue.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hydromom/errors.hpp"
#include "hydromom/taylor_jet.hpp"

namespace hydromom {

namespace {

constexpr Complex kTwoPiI(0.0, 2.0 * std::numbers::pi);

// Largest exponent among the terms of f sitting at `at` (0 when none).
int principal_order(const PoleSum& f, Complex at) {
  int order = 0;
  for (const auto& t : f.terms()) {
    if (!same_location(t.location, at)) continue;
    if (!t.exponent.is_integer()) {
      throw BranchPointError("half-integer exponent " + t.exponent.to_string() +
                             " at the requested residue point");
    }
    order = std::max(order, t.exponent.as_int());
  }
  return order;
}

// (p - at)^order * f(p) as a Taylor jet about `at` with `size` coefficients.
TaylorJet regular_part(const PoleSum& f, Complex at, int order, std::size_t size) {
  std::vector<Complex> coeffs(size, Complex(0.0, 0.0));
  std::vector<PoleTerm> others;
  for (const auto& t : f.terms()) {
    if (same_location(t.location, at)) {
      const auto idx = static_cast<std::size_t>(order - t.exponent.as_int());
      if (idx < size) coeffs[idx] += t.coeff;
    } else {
      others.push_back(t);
    }
  }
  const auto shift = static_cast<std::size_t>(order);
  if (!others.empty() && shift < size) {
    const auto jet = TaylorJet::expand(PoleSum(std::move(others)), at, size - shift);
    for (std::size_t j = 0; j + shift < size; ++j) coeffs[j + shift] += jet[j];
  }
  return TaylorJet(at, std::move(coeffs));
}

bool has_real_location(const PoleSum& f) {
  return std::any_of(f.terms().begin(), f.terms().end(), [](const PoleTerm& t) {
    return std::abs(t.location.imag()) <= 1e-14 * std::max(1.0, std::abs(t.location));
  });
}

void check_integrable(const PoleSum& f, HalfInt decay) {
  if (has_real_location(f)) {
    throw DivergentIntegralError("pole or branch point on the integration path");
  }
  if (decay <= HalfInt(1)) {
    throw DivergentIntegralError("integrand decays like |p|^-" + decay.to_string() +
                                 "; need faster than 1/|p|");
  }
}

std::vector<Complex> merged_upper_poles(const PoleSum& f, const PoleSum& g) {
  auto poles = upper_half_plane_poles(f);
  for (Complex s : upper_half_plane_poles(g)) {
    const bool seen = std::any_of(poles.begin(), poles.end(),
                                  [&](Complex q) { return same_location(q, s); });
    if (!seen) poles.push_back(s);
  }
  return poles;
}

}  // namespace

Complex residue_of_product(std::span<const PoleSum> factors, Complex at) {
  std::vector<int> orders;
  int total = 0;
  for (const auto& f : factors) {
    orders.push_back(principal_order(f, at));
    total += orders.back();
  }
  if (total == 0) throw NotAPoleError("no pole at the requested point");
  const auto size = static_cast<std::size_t>(total);
  TaylorJet acc = TaylorJet::constant(at, Complex(1.0, 0.0), size);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    acc *= regular_part(factors[k], at, orders[k], size);
  }
  return acc[size - 1];
}

Complex residue(const PoleSum& f, Complex at) {
  return residue_of_product(std::span<const PoleSum>(&f, 1), at);
}

double pole_scale(const PoleSum& f) {
  double s = 0.0;
  for (const auto& t : f.terms()) s = std::max(s, std::abs(t.location));
  return s > 0.0 ? 4.0 * s : 1.0;
}

Complex integrate_real_line_contour(const PoleSum& f) {
  check_integrable(f, decay_order(f));
  if (!all_integer_exponents(f)) {
    throw BranchPointError("contour route needs integer exponents");
  }
  Complex sum(0.0, 0.0);
  for (Complex s : upper_half_plane_poles(f)) sum += residue(f, s);
  return kTwoPiI * sum;
}

Complex integrate_real_line_quadrature(const PoleSum& f, const QuadratureOptions& opts) {
  check_integrable(f, decay_order(f));
  return integrate_whole_line([&](double p) { return f(Complex(p, 0.0)); }, pole_scale(f), opts)
      .value;
}

Complex integrate_real_line(const PoleSum& f) {
  if (all_integer_exponents(f)) return integrate_real_line_contour(f);
  return integrate_real_line_quadrature(f);
}

Complex integrate_product_contour(const PoleSum& f, const PoleSum& g) {
  if (has_real_location(f) || has_real_location(g)) {
    throw DivergentIntegralError("pole or branch point on the integration path");
  }
  check_integrable(PoleSum(), decay_order(f) + decay_order(g));
  if (!all_integer_exponents(f) || !all_integer_exponents(g)) {
    throw BranchPointError("contour route needs integer exponents");
  }
  const PoleSum pair[2] = {f, g};
  Complex sum(0.0, 0.0);
  for (Complex s : merged_upper_poles(f, g)) sum += residue_of_product(pair, s);
  return kTwoPiI * sum;
}

Complex integrate_product_quadrature(const PoleSum& f, const PoleSum& g,
                                     const QuadratureOptions& opts) {
  if (has_real_location(f) || has_real_location(g)) {
    throw DivergentIntegralError("pole or branch point on the integration path");
  }
  check_integrable(PoleSum(), decay_order(f) + decay_order(g));
  const double scale = std::max(pole_scale(f), pole_scale(g));
  return integrate_whole_line(
             [&](double p) {
               const Complex z(p, 0.0);
               return f(z) * g(z);
             },
             scale, opts)
      .value;
}

Complex integrate_product_real_line(const PoleSum& f, const PoleSum& g) {
  if (all_integer_exponents(f) && all_integer_exponents(g)) return integrate_product_contour(f, g);
  return integrate_product_quadrature(f, g);
}

}  // namespace hydromom
