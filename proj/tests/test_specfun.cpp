#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hydromom/errors.hpp"
#include "hydromom/specfun.hpp"

using namespace hydromom;
using specfun::bessel_j;
using specfun::pochhammer;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("HalfInt arithmetic is exact") {
  const HalfInt a = HalfInt::from_twice(3);
  CHECK(a.value() == 1.5);
  CHECK((a + kHalf) == HalfInt(2));
  CHECK((a - HalfInt(2)) == HalfInt::from_twice(-1));
  CHECK(HalfInt::from_twice(-1).floor() == -1);
  CHECK(HalfInt::from_twice(-3).floor() == -2);
  CHECK(HalfInt(4).floor() == 4);
  CHECK(kHalf < HalfInt(1));
  CHECK_THROWS_AS((void)a.as_int(), DomainError);
  CHECK(a.to_string() == "3/2");
}

TEST_CASE("gamma at integer and half-integer points") {
  CHECK(specfun::gamma(HalfInt(1)) == 1.0);
  CHECK(rel(specfun::gamma(kHalf), std::sqrt(std::numbers::pi)) < 1e-15);
  // reference: std::tgamma, independent of the reflection path
  CHECK(rel(specfun::gamma(HalfInt::from_twice(-1)), std::tgamma(-0.5)) < 1e-14);
  CHECK(rel(specfun::gamma(HalfInt::from_twice(-1)), -2.0 * std::sqrt(std::numbers::pi)) < 1e-15);
  CHECK(specfun::gamma(HalfInt(6)) == 120.0);
  for (int tw = -21; tw <= 41; tw += 2) {
    const HalfInt x = HalfInt::from_twice(tw);
    CHECK(rel(specfun::gamma(x), std::tgamma(x.value())) < 1e-13);
  }
  CHECK(rel(specfun::gamma(2.7), std::tgamma(2.7)) < 1e-15);
}

TEST_CASE("gamma poles") {
  CHECK_THROWS_AS(specfun::gamma(HalfInt(0)), PoleError);
  CHECK_THROWS_AS(specfun::gamma(HalfInt(-3)), PoleError);
  CHECK_THROWS_AS(specfun::gamma(-2.0), PoleError);
}

TEST_CASE("gamma recurrence over 200 half-integer points") {
  int count = 0;
  for (int tw = -199; count < 200; tw += 2, ++count) {
    const HalfInt x = HalfInt::from_twice(tw);
    const double lhs = specfun::gamma(x + HalfInt(1));
    const double rhs = x.value() * specfun::gamma(x);
    CHECK(rel(lhs, rhs) <= 1e-13);
  }
  CHECK(count == 200);
}

TEST_CASE("pochhammer by product") {
  CHECK(pochhammer(3.3, 0) == 1.0);
  CHECK(pochhammer(-2.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);
  CHECK(pochhammer(kHalf, 2) == 0.75);
  CHECK(pochhammer(-2.0, 3) == 0.0);
  CHECK(pochhammer(-2.0, 2) == 2.0);
  for (double a : {-3.5, -2.0, 0.0, 0.5, 1.25}) {
    for (int k = 0; k < 8; ++k) CHECK(pochhammer(a, k + 1) == pochhammer(a, k) * (a + k));
  }
}

TEST_CASE("binomial and factorial") {
  CHECK(specfun::binomial(5, 2) == 10.0);
  CHECK(specfun::binomial(4, 0) == 1.0);
  CHECK(specfun::binomial(3, 5) == 0.0);
  CHECK(specfun::factorial(10) == 3628800.0);
  CHECK_THROWS_AS(specfun::factorial(-1), DomainError);
}

TEST_CASE("bessel_j examples") {
  CHECK(std::abs(bessel_j(kHalf, std::numbers::pi)) < 1e-15);
  CHECK(std::abs(bessel_j(1, 1e-12)) < 1e-12);
  const double x = 1.0;
  const double closed = std::sqrt(2.0 / (std::numbers::pi * x)) * (std::sin(x) / x - std::cos(x));
  CHECK(rel(bessel_j(HalfInt::from_twice(3), 1.0), closed) < 1e-14);
  CHECK(bessel_j(HalfInt::from_twice(3), 1.0) == doctest::Approx(0.2402978).epsilon(1e-7));
  CHECK_THROWS_AS(bessel_j(1, 0.0), DomainError);
  CHECK_THROWS_AS(bessel_j(1, -1.0), DomainError);
}

TEST_CASE("bessel_j against the standard library on (0, 50]") {
  double worst = 0.0;
  for (int tw = 0; tw <= 24; ++tw) {
    const HalfInt nu = HalfInt::from_twice(tw);
    for (double x = 0.05; x <= 50.0; x += 0.37) {
      const double ref = std::cyl_bessel_j(nu.value(), x);
      const double got = bessel_j(nu, x);
      // relative error, measured against the local envelope so zeros of J do not blow it up
      const double env = std::sqrt(std::pow(ref, 2) + std::pow(std::cyl_bessel_j(nu.value() + 1, x), 2));
      worst = std::max(worst, std::abs(got - ref) / env);
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("bessel recurrence") {
  for (int tw = 3; tw <= 11; tw += 2) {
    const HalfInt nu = HalfInt::from_twice(tw);
    for (double x : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0}) {
      const double lhs = bessel_j(nu - HalfInt(1), x) + bessel_j(nu + HalfInt(1), x);
      const double rhs = 2.0 * nu.value() / x * bessel_j(nu, x);
      const double scale = std::abs(bessel_j(nu - HalfInt(1), x)) + std::abs(bessel_j(nu + HalfInt(1), x));
      CHECK(std::abs(lhs - rhs) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("reduced bessel continues through the origin") {
  // (2/x)^{1/2} J_{1/2}(x) = 2 sin(x) / (x sqrt(pi)) -> 2/sqrt(pi) at 0
  const double at0 = specfun::reduced_bessel_j(kHalf, kHalf, 0.0);
  CHECK(rel(at0, 2.0 / std::sqrt(std::numbers::pi)) < 1e-15);
  for (double x : {-7.3, -2.0, -0.4, 0.3, 0.9, 1.1, 4.0, 17.0}) {
    const double ref = std::pow(2.0 / std::abs(x), 0.5) * std::cyl_bessel_j(0.5, std::abs(x));
    CHECK(rel(specfun::reduced_bessel_j(kHalf, kHalf, x), ref) < 1e-13);
    // odd gap changes sign with x
    const double odd = std::pow(2.0 / std::abs(x), 0.5) * std::cyl_bessel_j(1.5, std::abs(x)) * (x < 0 ? -1 : 1);
    CHECK(rel(specfun::reduced_bessel_j(HalfInt::from_twice(3), kHalf, x), odd) < 1e-13);
  }
  CHECK_THROWS_AS(specfun::reduced_bessel_j(kHalf, HalfInt(1), 1.0), DomainError);
}

TEST_CASE("hankel expansion matches J on the real axis") {
  for (int tw : {0, 1, 2, 3, 5, 7}) {
    const HalfInt nu = HalfInt::from_twice(tw);
    for (double x : {30.0, 41.5, 80.0}) {
      const auto h1 = specfun::detail::hankel_asymptotic(nu, {x, 0.0}, 1);
      const auto h2 = specfun::detail::hankel_asymptotic(nu, {x, 0.0}, 2);
      CHECK(std::abs(0.5 * (h1 + h2).real() - std::cyl_bessel_j(nu.value(), x)) < 1e-14);
      CHECK(std::abs(h1 - std::conj(h2)) < 1e-15);
    }
  }
}
