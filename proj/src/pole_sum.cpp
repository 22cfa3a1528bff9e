#include "hydromom/pole_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hydromom/errors.hpp"
#include "hydromom/specfun.hpp"

namespace hydromom {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularTol = 1e-14;

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Branch argument of w in the range chosen for the location.
double branch_arg(Complex w, Complex location) {
  double arg = std::arg(w);
  if (location.imag() > 0.0) {
    if (arg > kPi / 2) arg -= 2 * kPi;  // cut along arg = pi/2
  } else if (location.imag() < 0.0) {
    if (arg < -kPi / 2) arg += 2 * kPi;  // cut along arg = -pi/2
  }
  return arg;
}

Complex integer_inverse_power(Complex w, int e) {
  Complex base = 1.0 / w;
  Complex r(1.0, 0.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

// Partial fractions of (p-a)^(-m) (p-b)^(-n) for a != b; adds terms into out.
void split_pair(Complex ca, Complex a, int m, Complex cb, Complex b, int n,
                std::vector<PoleTerm>& out) {
  const Complex c = ca * cb;
  // coefficient of (p-a)^(-k): (-1)^(m-k) C(n+m-k-1, m-k) (a-b)^(-(n+m-k))
  for (int k = 1; k <= m; ++k) {
    const int j = m - k;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double binom = specfun::binomial(n + j - 1, j);
    out.push_back({c * sign * binom * integer_inverse_power(a - b, n + j), a, HalfInt(k)});
  }
  for (int k = 1; k <= n; ++k) {
    const int j = n - k;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double binom = specfun::binomial(m + j - 1, j);
    out.push_back({c * sign * binom * integer_inverse_power(b - a, m + j), b, HalfInt(k)});
  }
}

}  // namespace

Complex branch_power(Complex w, Complex location, HalfInt exponent) {
  if (exponent.is_integer()) {
    const int e = exponent.as_int();
    if (e >= 0) return integer_inverse_power(w, e);
    return 1.0 / integer_inverse_power(w, -e);
  }
  const double arg = branch_arg(w, location);
  return std::polar(std::pow(std::abs(w), -exponent.value()), -exponent.value() * arg);
}

bool same_location(Complex a, Complex b) {
  return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

PoleSum::PoleSum(std::vector<PoleTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.exponent < kHalf) {
      throw DomainError("pole exponent must be >= 1/2, got " + t.exponent.to_string());
    }
    if (!finite(t.coeff) || !finite(t.location)) {
      throw DomainError("pole term with non-finite coefficient or location");
    }
  }
  canonicalize();
}

PoleSum PoleSum::single(Complex coeff, Complex location, HalfInt exponent) {
  return PoleSum({{coeff, location, exponent}});
}

void PoleSum::canonicalize() {
  std::vector<PoleTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const PoleTerm& m) {
      return m.exponent == t.exponent && same_location(m.location, t.location);
    });
    if (it == merged.end()) {
      merged.push_back(t);
    } else {
      it->coeff += t.coeff;
    }
  }
  std::erase_if(merged, [](const PoleTerm& t) { return t.coeff == Complex(0.0, 0.0); });
  // Group by location (first occurrence order is not stable under merging, so sort).
  std::sort(merged.begin(), merged.end(), [](const PoleTerm& x, const PoleTerm& y) {
    if (!same_location(x.location, y.location)) {
      if (x.location.imag() != y.location.imag()) return x.location.imag() > y.location.imag();
      return x.location.real() < y.location.real();
    }
    return x.exponent < y.exponent;
  });
  terms_ = std::move(merged);
}

Complex PoleSum::operator()(Complex p) const {
  Complex sum(0.0, 0.0);
  for (const auto& t : terms_) {
    const Complex w = p - t.location;
    if (std::abs(w) <= kSingularTol * std::max(1.0, std::abs(t.location))) {
      std::ostringstream os;
      os << "evaluation at pole location " << t.location;
      throw SingularityError(os.str());
    }
    sum += t.coeff * branch_power(w, t.location, t.exponent);
  }
  return sum;
}

PoleSum& PoleSum::operator+=(const PoleSum& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize();
  return *this;
}

PoleSum& PoleSum::operator-=(const PoleSum& other) {
  for (auto t : other.terms_) {
    t.coeff = -t.coeff;
    terms_.push_back(t);
  }
  canonicalize();
  return *this;
}

PoleSum& PoleSum::operator*=(Complex scale) {
  for (auto& t : terms_) t.coeff *= scale;
  canonicalize();
  return *this;
}

Complex evaluate(const PoleSum& f, Complex p) { return f(p); }

PoleSum derivative(const PoleSum& f) {
  std::vector<PoleTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    out.push_back({-t.exponent.value() * t.coeff, t.location, t.exponent + 1});
  }
  return PoleSum(std::move(out));
}

PoleSum antiderivative_from_minus_infinity(const PoleSum& f) {
  std::vector<PoleTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.exponent < HalfInt::from_twice(3)) {
      throw NonIntegrableError("term with exponent " + t.exponent.to_string() +
                               " has no antiderivative vanishing at -infinity");
    }
    out.push_back({t.coeff / (1.0 - t.exponent.value()), t.location, t.exponent - 1});
  }
  return PoleSum(std::move(out));
}

PoleSum product(const PoleSum& f, const PoleSum& g) {
  std::vector<PoleTerm> out;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      if (same_location(a.location, b.location)) {
        out.push_back({a.coeff * b.coeff, a.location, a.exponent + b.exponent});
      } else if (a.exponent.is_integer() && b.exponent.is_integer()) {
        split_pair(a.coeff, a.location, a.exponent.as_int(), b.coeff, b.location,
                   b.exponent.as_int(), out);
      } else {
        throw RepresentationError(
            "product of distinct-location terms with half-integer exponent has no pole-sum form");
      }
    }
  }
  return PoleSum(std::move(out));
}

PoleSum conjugate_on_real_axis(const PoleSum& f) {
  std::vector<PoleTerm> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back({std::conj(t.coeff), std::conj(t.location), t.exponent});
  return PoleSum(std::move(out));
}

PoleSum multiply_by_p(const PoleSum& f) {
  std::vector<PoleTerm> out;
  out.reserve(2 * f.size());
  for (const auto& t : f.terms()) {
    if (t.exponent < HalfInt::from_twice(3)) {
      throw RepresentationError("p * (p-s)^(-" + t.exponent.to_string() +
                                ") leaves the pole-sum representation");
    }
    out.push_back({t.coeff, t.location, t.exponent - 1});
    out.push_back({t.coeff * t.location, t.location, t.exponent});
  }
  return PoleSum(std::move(out));
}

bool approx_equal(const PoleSum& a, const PoleSum& b, double rel_tol) {
  double scale = 0.0;
  for (const auto& t : a.terms()) scale = std::max(scale, std::abs(t.coeff));
  for (const auto& t : b.terms()) scale = std::max(scale, std::abs(t.coeff));
  const double tol = rel_tol * scale;
  const PoleSum diff = a - b;
  return std::all_of(diff.terms().begin(), diff.terms().end(),
                     [&](const PoleTerm& t) { return std::abs(t.coeff) <= tol; });
}

bool all_integer_exponents(const PoleSum& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const PoleTerm& t) { return t.exponent.is_integer(); });
}

HalfInt decay_order(const PoleSum& f) {
  if (f.empty()) return HalfInt(1000);
  HalfInt lowest = f.terms().front().exponent;
  for (const auto& t : f.terms()) lowest = std::min(lowest, t.exponent);
  if (lowest != HalfInt(1)) return lowest;
  Complex sum(0.0, 0.0);
  double mag = 0.0;
  HalfInt next(1000);
  for (const auto& t : f.terms()) {
    if (t.exponent == HalfInt(1)) {
      sum += t.coeff;
      mag += std::abs(t.coeff);
    } else {
      next = std::min(next, t.exponent);
    }
  }
  if (std::abs(sum) <= 1e-12 * mag) return std::min(HalfInt(2), next);
  return HalfInt(1);
}

std::vector<Complex> upper_half_plane_poles(const PoleSum& f) {
  std::vector<Complex> out;
  for (const auto& t : f.terms()) {
    if (t.location.imag() <= 0.0) continue;
    if (std::none_of(out.begin(), out.end(), [&](Complex s) { return same_location(s, t.location); })) {
      out.push_back(t.location);
    }
  }
  return out;
}

}  // namespace hydromom
