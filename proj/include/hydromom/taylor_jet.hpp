#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hydromom/pole_sum.hpp"

namespace hydromom {

/// Truncated power series sum_k c_k (p - center)^k, k < order().
///
/// Arithmetic is the exact truncation of the corresponding operation on the full series.
class TaylorJet {
 public:
  TaylorJet(Complex center, std::vector<Complex> coefficients);

  static TaylorJet constant(Complex center, Complex value, std::size_t order);

  /// Expansion of a PoleSum about a point where it is regular.
  static TaylorJet expand(const PoleSum& f, Complex center, std::size_t order);

  Complex center() const { return center_; }
  std::size_t order() const { return coefficients_.size(); }
  std::span<const Complex> coefficients() const { return coefficients_; }
  Complex operator[](std::size_t k) const { return coefficients_[k]; }

  TaylorJet& operator+=(const TaylorJet& o);
  TaylorJet& operator-=(const TaylorJet& o);
  TaylorJet& operator*=(const TaylorJet& o);
  TaylorJet& operator/=(const TaylorJet& o);
  TaylorJet& operator*=(Complex s);

  friend TaylorJet operator+(TaylorJet a, const TaylorJet& b) { return a += b; }
  friend TaylorJet operator-(TaylorJet a, const TaylorJet& b) { return a -= b; }
  friend TaylorJet operator*(TaylorJet a, const TaylorJet& b) { return a *= b; }
  friend TaylorJet operator/(TaylorJet a, const TaylorJet& b) { return a /= b; }

 private:
  void check_compatible(const TaylorJet& o) const;
  Complex center_;
  std::vector<Complex> coefficients_;
};

}  // namespace hydromom
