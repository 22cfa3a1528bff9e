#pragma once

#include <vector>

#include "hydromom/delta.hpp"
#include "hydromom/half_int.hpp"
#include "hydromom/pole_sum.hpp"

namespace hydromom::spherical {

struct SphericalState {
  int n = 1;
  int l = 0;
  int m = 0;
  double Z = 1.0;

  double p0() const { return Z; }
};

/// Throws DomainError unless n >= 1, 0 <= l < n, |m| <= l, Z > 0.
void validate(const SphericalState& s);
SphericalState make_state(int n, int l, int m, double Z = 1.0);

/// -Z^2 / (2 n^2) hartree.
double energy(const SphericalState& s);
double energy(int n, double Z);

/// Closed-form double sum S_{n,l} of the radial normalization.
double radial_s_sum(int n, int l);
/// N_{n,l} = 2^(l+1) / ((n-l-1)! sqrt(pi S)) sqrt(n/p0).
double radial_normalization(int n, int l, double p0);

/// Normalized radial momentum function: terms at i p0/n with exponents l+2 ... n+1.
PoleSum alpha_radial(const SphericalState& s);

/// One term coeff * (2/x)^scale * J_order(x) of an angular function.
struct BesselTerm {
  Complex coeff;
  HalfInt order;
};

/// beta_l^m(p_theta) as a finite Bessel sum sharing one reduced power (2/p)^scale.
struct AngularFunction {
  int l = 0;
  int m = 0;  // |m|
  HalfInt scale;
  std::vector<BesselTerm> terms;

  Complex operator()(double p_theta) const;
  /// beta(-p) = parity() * beta(p).
  int parity() const { return (l - m) % 2 == 0 ? 1 : -1; }
};

/// The two parity branches l - |m| even / odd, including N_beta.
AngularFunction beta_angular_function(int l, int m);
Complex beta_angular(int l, int m, double p_theta);

/// N_beta with the square root of i taken as exp(i pi / 4).
Complex beta_normalization(int l, int m);

/// Integral over the real line of a(p) conj(b(p)). The oscillatory tail beyond p = 40 is
/// split into Hankel components and integrated along rays into the half plane where each
/// decays.
Complex angular_overlap(const AngularFunction& a, const AngularFunction& b);

struct SphericalWavefunction {
  SphericalState state;
  PoleSum radial;
  AngularFunction angular;
  DeltaFactor delta;

  /// alpha(p_r) beta(p_theta); the delta factor is not evaluated.
  Complex operator()(double p_r, double p_theta) const;
};

SphericalWavefunction wavefunction_spherical(const SphericalState& s);

}  // namespace hydromom::spherical
