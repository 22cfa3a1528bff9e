#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hydromom/half_int.hpp"

namespace hydromom {

using Complex = std::complex<double>;

/// One term coeff * (p - location)^(-exponent).
///
/// For half-integer exponents the power uses a branch whose cut leaves the location
/// vertically away from the real axis (upwards for Im(location) > 0, downwards for
/// Im(location) < 0, principal branch for real locations), so every term is analytic on
/// and near the real axis.
struct PoleTerm {
  Complex coeff;
  Complex location;
  HalfInt exponent;

  friend bool operator==(const PoleTerm&, const PoleTerm&) = default;
};

/// (w)^(-exponent) where w = p - location, under the branch rule of PoleTerm.
Complex branch_power(Complex w, Complex location, HalfInt exponent);

/// Locations compare equal within 1e-12 relative (absolute below unit magnitude).
bool same_location(Complex a, Complex b);

/// Finite sum of pole terms in canonical form: one term per (location, exponent) key,
/// zero coefficients dropped, terms ordered by location then exponent.
class PoleSum {
 public:
  PoleSum() = default;
  explicit PoleSum(std::vector<PoleTerm> terms);

  static PoleSum single(Complex coeff, Complex location, HalfInt exponent);

  std::span<const PoleTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Termwise evaluation; throws SingularityError within 1e-14 of a pole.
  Complex operator()(Complex p) const;

  PoleSum& operator+=(const PoleSum& other);
  PoleSum& operator-=(const PoleSum& other);
  PoleSum& operator*=(Complex scale);

  friend PoleSum operator+(PoleSum a, const PoleSum& b) { return a += b; }
  friend PoleSum operator-(PoleSum a, const PoleSum& b) { return a -= b; }
  friend PoleSum operator*(Complex s, PoleSum a) { return a *= s; }
  friend PoleSum operator*(PoleSum a, Complex s) { return a *= s; }
  friend PoleSum operator-(PoleSum a) { return a *= Complex(-1.0, 0.0); }

  friend bool operator==(const PoleSum&, const PoleSum&) = default;

 private:
  void canonicalize();
  std::vector<PoleTerm> terms_;
};

Complex evaluate(const PoleSum& f, Complex p);

/// Termwise d/dp.
PoleSum derivative(const PoleSum& f);

/// Termwise integral from -infinity along the real axis. Every exponent must be >= 3/2;
/// NonIntegrableError otherwise.
PoleSum antiderivative_from_minus_infinity(const PoleSum& f);

/// Canonical product. Same-location pairs add exponents; distinct-location integer pairs are
/// split by partial fractions; distinct-location pairs with a half-integer exponent raise
/// RepresentationError.
PoleSum product(const PoleSum& f, const PoleSum& g);

/// f*(p) for real p: coefficients and locations conjugated, branch mirrored.
PoleSum conjugate_on_real_axis(const PoleSum& f);

/// p * f(p) through (p - s) + s. Requires every exponent >= 3/2 (RepresentationError).
PoleSum multiply_by_p(const PoleSum& f);

/// Termwise comparison: same keys (exponent exact, location within tolerance) and
/// coefficients within rel_tol of the larger coefficient magnitude of the two sums.
/// Terms below rel_tol of that scale count as absent.
bool approx_equal(const PoleSum& a, const PoleSum& b, double rel_tol = 1e-13);

bool all_integer_exponents(const PoleSum& f);

/// Power of 1/|p| at which f decays on the real line. Exponent-1 terms whose coefficients
/// sum to zero count as order 2.
HalfInt decay_order(const PoleSum& f);

/// Distinct locations with Im > 0.
std::vector<Complex> upper_half_plane_poles(const PoleSum& f);

}  // namespace hydromom
