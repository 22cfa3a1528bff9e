#include "hydromom/taylor_jet.hpp"

#include <algorithm>

#include "hydromom/errors.hpp"

namespace hydromom {

TaylorJet::TaylorJet(Complex center, std::vector<Complex> coefficients)
    : center_(center), coefficients_(std::move(coefficients)) {}

TaylorJet TaylorJet::constant(Complex center, Complex value, std::size_t order) {
  std::vector<Complex> c(order, Complex(0.0, 0.0));
  if (order > 0) c[0] = value;
  return TaylorJet(center, std::move(c));
}

TaylorJet TaylorJet::expand(const PoleSum& f, Complex center, std::size_t order) {
  std::vector<Complex> c(order, Complex(0.0, 0.0));
  for (const auto& t : f.terms()) {
    if (same_location(t.location, center)) {
      throw DomainError("TaylorJet::expand at a pole of the expanded function");
    }
    // (d + x)^(-e) = sum_j binom(-e, j) d^(-e-j) x^j,  d = center - s
    const Complex d = center - t.location;
    Complex term = t.coeff * branch_power(d, t.location, t.exponent);
    const double e = t.exponent.value();
    for (std::size_t j = 0; j < order; ++j) {
      c[j] += term;
      term *= -(e + static_cast<double>(j)) / (static_cast<double>(j + 1) * d);
    }
  }
  return TaylorJet(center, std::move(c));
}

void TaylorJet::check_compatible(const TaylorJet& o) const {
  if (o.center_ != center_ || o.order() != order()) {
    throw DomainError("TaylorJet arithmetic requires equal centers and orders");
  }
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < order(); ++k) coefficients_[k] += o.coefficients_[k];
  return *this;
}

TaylorJet& TaylorJet::operator-=(const TaylorJet& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < order(); ++k) coefficients_[k] -= o.coefficients_[k];
  return *this;
}

TaylorJet& TaylorJet::operator*=(const TaylorJet& o) {
  check_compatible(o);
  std::vector<Complex> r(order(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < order(); ++i) {
    for (std::size_t j = 0; i + j < order(); ++j) r[i + j] += coefficients_[i] * o.coefficients_[j];
  }
  coefficients_ = std::move(r);
  return *this;
}

TaylorJet& TaylorJet::operator/=(const TaylorJet& o) {
  check_compatible(o);
  if (order() == 0) return *this;
  if (o.coefficients_[0] == Complex(0.0, 0.0)) {
    throw DomainError("TaylorJet division by a series with zero leading term");
  }
  std::vector<Complex> q(order(), Complex(0.0, 0.0));
  for (std::size_t k = 0; k < order(); ++k) {
    Complex acc = coefficients_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= o.coefficients_[j] * q[k - j];
    q[k] = acc / o.coefficients_[0];
  }
  coefficients_ = std::move(q);
  return *this;
}

TaylorJet& TaylorJet::operator*=(Complex s) {
  for (auto& c : coefficients_) c *= s;
  return *this;
}

}  // namespace hydromom
