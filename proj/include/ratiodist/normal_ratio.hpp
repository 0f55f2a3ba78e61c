#pragma once

// Closed-form engine for W = X1/X2 with (X1, X2) bivariate normal.

#include <vector>

#include "ratiodist/types.hpp"

namespace ratiodist {

struct BivNormalParams {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double rho = 0.0;

  /// Throws DomainError unless sigma1, sigma2 > 0 and |rho| < 1.
  void validate() const;
};

/// Means of the standardized ratio T = (a + V1)/(b + V2), V1, V2 iid N(0,1).
struct StdRatioParams {
  double a = 0.0;
  double b = 0.0;

  void validate() const;
};

/// W = T/r + s.
struct RatioTransform {
  double r = 1.0;
  double s = 0.0;
  int sign = 1;
};

struct StandardForm {
  StdRatioParams params;
  RatioTransform transform;
};

/// Reduces a correlated normal ratio to its standardized form. The sign
/// carried in the transform is chosen so that a >= 0; it also absorbs a
/// negative denominator mean.
StandardForm to_standard(const BivNormalParams& p);

/// Density of T. The exp(q^2/2) growth of the Kummer factor is folded into
/// the prefactor before exponentiation, so large a, b do not overflow.
double pdf_T(StdRatioParams p, double t);

/// Density of W through the affine change of variables of to_standard().
double pdf_W_phamgia(const BivNormalParams& p, double w);

/// Density of W from the two-term formula with Phi and the quadratic forms
/// a(w), b(w), c, d(w).
double pdf_W_hinkley(const BivNormalParams& p, double w);

/// Pre/post test summary statistics of a course of n participants.
struct HakeInputs {
  double mu_pre = 0.0;
  double mu_post = 0.0;
  double sd_pre = 1.0;
  double sd_post = 1.0;
  double rho_star = 0.0;
  int n = 1;

  void validate() const;
};

/// Bivariate normal law of (mean gain, 100 - mean pre score).
BivNormalParams hake_params(const HakeInputs& h);

/// (a, b) of the normalized gain written directly in the test statistics.
/// Uses standard errors sd/sqrt(n), so it agrees with
/// to_standard(hake_params(h)).params for every n.
StdRatioParams hake_ab(const HakeInputs& h);

enum class Modality { Unimodal, Bimodal };

const char* to_string(Modality m);

/// Upper end of the transition range of a.
inline constexpr double kModalityA0 = 2.256058904;

/// A secondary mode whose peak density is below this floor is treated as
/// invisible by classify_modality(p, true).
inline constexpr double kInvisibleModeDensity = 1e-13;

/// Boundary b*(a) of the bimodal region for 1 <= a < kModalityA0, from the
/// quintic-over-(a0 - a) fit.
double modality_curve(double a);

/// a <= 1: unimodal; a >= a0: bimodal; otherwise bimodal iff b < b*(a), with
/// b == b*(a) resolved as unimodal. With `practical`, a bimodal verdict is
/// downgraded when a second local maximum of pdf_T exists and its peak is
/// below kInvisibleModeDensity.
Modality classify_modality(StdRatioParams p, bool practical = true);

/// Local maxima (abscissa, density) of pdf_T, located on a grid uniform in
/// atan(t) and refined by golden-section search. Sorted by abscissa.
struct Mode {
  double t;
  double density;
};
std::vector<Mode> find_modes(StdRatioParams p);

/// Normal approximation G(z) = Phi((z - mu)/(mu sqrt(d1^2 + d2^2))).
double normal_approx_cdf(double z, double mu, double delta1, double delta2);

struct PracticalMoments {
  double mu = 0.0;
  double sigma2 = 0.0;
};

/// mu = a/b, sigma^2 = mu^2 (1/a^2 + 1/b^2); requires a > 0, b > 0.
PracticalMoments practical_moments(StdRatioParams p);

/// mu = mu1/mu2, sigma^2 = mu^2 (delta1^2 + delta2^2), delta_i = sigma_i/mu_i.
PracticalMoments practical_moments(const BivNormalParams& p);

/// mu -/+ k sigma from the practical moments.
Interval evaluation_interval(StdRatioParams p, double k = 2.0);
Interval evaluation_interval(const BivNormalParams& p, double k = 2.0);

double cohens_d(double mu_post, double mu_pre, double sd);

}  // namespace ratiodist
