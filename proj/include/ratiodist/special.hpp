#pragma once

// Scalar special functions used by the closed-form ratio densities.

namespace ratiodist::special {

/// Largest admissible q^2/2 for kummer_1f1_half; exp(700) is close to the
/// top of the double range.
inline constexpr double kKummerMaxHalfSquare = 700.0;

/// Gauss error function. Rational Chebyshev approximations
/// (three ranges), relative error below 1e-15 on finite input.
double erf(double x);

/// Complementary error function 1 - erf(x), accurate in the upper tail.
double erfc(double x);

/// Standard normal CDF; evaluated through erfc so the lower tail keeps
/// relative accuracy.
double std_normal_cdf(double x);

double std_normal_pdf(double x);

/// 1F1(1; 1/2; q^2/2) = sqrt(pi/2) q erf(q/sqrt 2) exp(q^2/2) + 1 for signed q.
/// Throws OverflowError when q^2/2 > kKummerMaxHalfSquare.
double kummer_1f1_half(double q);

}  // namespace ratiodist::special
