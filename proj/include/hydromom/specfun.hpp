#pragma once

#include <complex>

#include "hydromom/half_int.hpp"

/// Real-argument special functions: Gamma at integer and half-integer points, Pochhammer
/// symbols, binomials, and Bessel J of integer and half-integer order.
///
/// Every function is pure and reentrant.
namespace hydromom::specfun {

/// Gamma at an integer or half-integer point.
///
/// Positive integers use the factorial product, positive half-integers the sqrt(pi)-scaled
/// double-factorial product, negative half-integers the reflection formula.
/// Throws PoleError at 0, -1, -2, ...
double gamma(HalfInt x);

/// Gamma at a general real point (std::tgamma), with PoleError at non-positive integers.
double gamma(double x);

/// n! as a double; throws DomainError for n < 0.
double factorial(int n);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1), (a)_0 = 1, by direct product.
double pochhammer(double a, int k);
inline double pochhammer(HalfInt a, int k) { return pochhammer(a.value(), k); }

/// Generalized binomial coefficient top (top-1) ... (top-k+1) / k!.
double binomial(double top, int k);

/// Bessel function of the first kind J_order(x) for order a non-negative integer or
/// half-integer and x > 0. Throws DomainError for x <= 0 or negative order.
double bessel_j(HalfInt order, double x);

/// (2/x)^scale J_order(x), continued to x <= 0 as an entire function of x.
///
/// Requires order - scale to be a non-negative integer so the continuation is single valued;
/// near the origin the ascending series is used, which removes the apparent singularity.
double reduced_bessel_j(HalfInt order, HalfInt scale, double x);

namespace detail {

/// Large-|z| Hankel expansion of H^(1)_order(z) (kind == 1) or H^(2)_order(z) (kind == 2),
/// principal branch, valid for |z| >~ 20 and |arg z| < pi/2. For half-integer orders the
/// expansion terminates and is exact.
std::complex<double> hankel_asymptotic(HalfInt order, std::complex<double> z, int kind);

/// Ascending series of J_order(x); accurate for |x| <~ 2.
double bessel_j_series(HalfInt order, double x);

}  // namespace detail

}  // namespace hydromom::specfun
