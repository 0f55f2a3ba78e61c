#pragma once

// Characteristic functions: Gil-Pelaez inversion in one dimension and the
// Broda-Kan double integrals for ratio densities and distribution functions.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratiodist/parallel.hpp"
#include "ratiodist/quadrature.hpp"
#include "ratiodist/types.hpp"

namespace ratiodist {

using Complex = std::complex<double>;
using ComplexFn = std::function<Complex(double)>;
using ComplexFn2 = std::function<Complex(double, double)>;

/// Modulus floor used to size integration ranges.
inline constexpr double kCfDecayTol = 1e-14;

struct CharFn {
  ComplexFn phi;
  std::optional<ComplexFn> dphi;
  /// t beyond which |phi(t)| < kCfDecayTol, when known in closed form.
  std::optional<double> decay_scale;
  std::string label;
};

struct JointCharFn {
  ComplexFn2 phi2d;
  /// Partial derivative in the second argument.
  std::optional<ComplexFn2> dphi2d_dt2;
  /// Decay scales of the two marginals, used by automatic grids.
  std::optional<double> decay1;
  std::optional<double> decay2;
  std::string label;
};

/// Node counts and steps for the midpoint trapezoidal sums.
/// t_i = h_i (nu_i + 1/2), nu_1 in [-N, N], nu_2 in [0, N].
struct Grid2DConfig {
  int N = 500;
  double h1 = 0.0;
  double h2 = 0.0;
  /// When set, h1 and h2 are replaced by auto_grid() at evaluation time.
  bool auto_range = true;
  /// Modulus threshold that defines the automatic ranges.
  double decay_tol = kCfDecayTol;

  void validate() const;
};

CharFn normal_cf(double mu, double sigma);
/// (1 - 2it)^(-k/2), principal branch.
CharFn chi_square_cf(int k);
/// exp(i loc t - scale |t|).
CharFn cauchy_cf(double loc = 0.0, double scale = 1.0);
CharFn uniform_cf(double lo, double hi);

/// Closed-form derivative when present, otherwise (phi(t+h) - phi(t-h))/(2h).
Complex cf_derivative(const CharFn& cf, double t, double h = 1e-4);

/// Smallest t found with |phi(t)| and |phi(2t)| below tol, bracketed by
/// doubling from 1 and refined by bisection. Uses decay_scale when
/// tol == kCfDecayTol. Throws DomainError if |phi(1e6)| >= tol.
double cf_decay_point(const CharFn& cf, double tol = kCfDecayTol);

/// Gil-Pelaez defaults: rel_tol 1e-10, abs_floor 1e-14.
QuadratureConfig gil_pelaez_default_config();

/// f(x) = (1/pi) int_0^inf Re[exp(-itx) phi(t)] dt. The range is cut where
/// |phi| < 1e-2 rel_tol and split into panels a half period long; each panel
/// goes through tanh-sinh.
double gil_pelaez_pdf(const CharFn& cf, double x,
                      const QuadratureConfig& cfg = gil_pelaez_default_config());

/// Probability clamped to [0, 1]. `raw` is the unclamped value; `warning`
/// is set when raw leaves [0, 1] by more than kClampWarnBand.
struct CdfValue {
  double value = 0.0;
  double raw = 0.0;
  bool warning = false;
};
inline constexpr double kClampWarnBand = 1e-8;
CdfValue clamp_probability(double raw);

/// F(x) = 1/2 - (1/pi) int_0^inf Im[exp(-itx) phi(t)]/t dt.
CdfValue gil_pelaez_cdf(const CharFn& cf, double x,
                        const QuadratureConfig& cfg = gil_pelaez_default_config());

struct GridHint {
  int N = 500;
  double decay_tol = kCfDecayTol;
};

/// T1 = decay point of cf1, T2 = decay point of cf2, h_i = T_i/N.
Grid2DConfig auto_grid(const CharFn& cf1, const CharFn& cf2, GridHint hint = {});
Grid2DConfig auto_grid(const JointCharFn& jcf, GridHint hint = {});
/// Explicit ranges: h_i = T_i/N.
Grid2DConfig grid_from_ranges(double T1, double T2, int N = 500);

/// Bivariate normal joint CF with closed-form tau-partial.
JointCharFn bivariate_normal_cf(double mu1, double mu2, double sigma1, double sigma2, double rho);
/// phi(s, tau) = phi1(s) phi2(tau).
JointCharFn joint_from_independent(const CharFn& cf1, const CharFn& cf2);

/// Ratio density of independent X1/X2:
/// (h1 h2/pi^2) sum_nu2 sum_nu1 Re{phi2'(-(x t1 + t2)) phi1(t1)/t2}.
/// Rows (fixed nu2) are summed with compensation and combined in ascending
/// nu2, so results do not depend on the thread count.
double broda_kan_pdf_indep(const CharFn& cf1, const CharFn& cf2, double x,
                           const Grid2DConfig& cfg = {}, Exec exec = Exec::Serial);

/// Grid version; phi1 is tabulated once and points run in parallel under
/// Exec::Parallel.
std::vector<double> broda_kan_pdf_indep_grid(const CharFn& cf1, const CharFn& cf2,
                                             std::span<const double> xs,
                                             const Grid2DConfig& cfg = {},
                                             Exec exec = Exec::Serial);

/// Plain double loop calling the CFs at every node. Kept as the reference
/// for the tabulated kernels.
double broda_kan_pdf_indep_reference(const CharFn& cf1, const CharFn& cf2, double x,
                                     const Grid2DConfig& cfg = {});

/// Same sum with d phi(s, tau)/d tau at tau = -(w s + t) in place of the
/// product form. Needs dphi2d_dt2.
double broda_kan_pdf_joint(const JointCharFn& jcf, double w, const Grid2DConfig& cfg = {},
                           Exec exec = Exec::Serial);
std::vector<double> broda_kan_pdf_joint_grid(const JointCharFn& jcf, std::span<const double> ws,
                                             const Grid2DConfig& cfg = {},
                                             Exec exec = Exec::Serial);

/// F(r) = 1/2 + (1/pi^2) int_0^inf int_0^inf
///        Re[phi(s, t - rs) - phi(s, -t - rs)] ds/s dt/t
/// by the midpoint sum over nu_1, nu_2 in [0, N].
CdfValue broda_kan_cdf(const JointCharFn& jcf, double r, const Grid2DConfig& cfg = {},
                       Exec exec = Exec::Serial);

/// |f_N - f_{N/2}| at the same ranges; a conservative error estimate.
double broda_kan_error_estimate(const CharFn& cf1, const CharFn& cf2, double x,
                                const Grid2DConfig& cfg = {});

struct CfMoments {
  double mu = 0.0;
  double second = 0.0;  // E[X^2]
  double sigma2 = 0.0;
};

/// E[X] from an 8th-order central difference on Im phi, E[X^2] from one on
/// Re phi, step h.
CfMoments cf_moments(const CharFn& cf, double h = 1e-4);

/// mu1/mu2 -/+ k sigma with sigma^2 = s1^2/mu2^2 + mu1^2 s2^2/mu2^4 from the
/// estimated constituent moments. When |mu2| <= 1e-6 s2 the result is the
/// union of mu_i -/+ k s_i; if `pdf` is given, each end of that union is
/// pushed outward (doubling its distance from the centre, at most
/// kSixSigmaMaxExtensions times) until pdf falls below 1e-10.
inline constexpr int kSixSigmaMaxExtensions = 4;
Interval six_sigma_interval(const CharFn& cf1, const CharFn& cf2, double k = 6.0,
                            const RealFn& pdf = {});

}  // namespace ratiodist
