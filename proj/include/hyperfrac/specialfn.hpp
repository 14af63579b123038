#pragma once

namespace hyperfrac {

/// Gamma function for real non-pole arguments.  Relative accuracy around
/// 1e-14 for |x| <= 50; throws std::domain_error at 0, -1, -2, ...
double gamma_fn(double x);

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma log_gamma_signed(double x);

/// Laplace transform of sin^{2m} evaluated at a > 0:
/// (2m)! / (a * prod_{k=1..m} (4k^2 + a^2)).
double sin2m_laplace(int m, double a);

/// Closed forms for the circle/sphere trigonometric moments.
/// Full circle: int_0^{2pi} sin^{2a}(t) cos^{2b}(t) dt.
double circle_sin_cos_moment(double a, double b);
/// Half period: int_0^{pi} sin^{2a}(t) cos^{2b}(t) dt.
double halfcircle_sin_cos_moment(double a, double b);
/// Radial profile integral int_0^inf rho^{N-2} (1+rho^2)^{-(N+2s)/2} drho.
double radial_profile_integral(int N, double s);

}  // namespace hyperfrac
