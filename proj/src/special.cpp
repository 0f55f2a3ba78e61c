#include "ratiodist/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ratiodist/error.hpp"

namespace ratiodist::special {
namespace {

// Coefficients of the netlib CALERF routine.
constexpr double kA[5] = {3.1611237438705656, 113.864154151050156, 377.485237685302021,
                          3209.37758913846947, 0.185777706184603153};
constexpr double kB[4] = {23.6012909523441209, 244.024637934444173, 1282.61652607737228,
                          2844.23683343917062};
constexpr double kC[9] = {0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
                          298.635138197400131,  881.95222124176909,  1712.04761263407058,
                          2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8};
constexpr double kD[8] = {15.7449261107098347, 117.693950891312499, 537.181101862009858,
                          1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
                          3439.36767414372164, 1230.33935480374942};
constexpr double kP[6] = {0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
                          0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
constexpr double kQ[5] = {2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
                          0.0605183413124413191, 0.00233520497626869185};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr double kThreshold = 0.46875;
constexpr double kXSmall = 1.11e-16;
constexpr double kXBig = 26.543;

enum class Kind { Erf, Erfc };

// exp(-y*y) split as exp(-ysq^2) * exp(-del) with ysq = trunc(16 y)/16 so the
// large part is exact.
double gaussian_tail(double y) {
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del);
}

// erfc(y) for y > kThreshold.
double erfc_positive(double y) {
  if (y <= 4.0) {
    double num = kC[8] * y;
    double den = y;
    for (int i = 0; i < 7; ++i) {
      num = (num + kC[i]) * y;
      den = (den + kD[i]) * y;
    }
    return gaussian_tail(y) * (num + kC[7]) / (den + kD[7]);
  }
  if (y >= kXBig) return 0.0;
  const double ysq = 1.0 / (y * y);
  double num = kP[5] * ysq;
  double den = ysq;
  for (int i = 0; i < 4; ++i) {
    num = (num + kP[i]) * ysq;
    den = (den + kQ[i]) * ysq;
  }
  const double r = (kInvSqrtPi - ysq * (num + kP[4]) / (den + kQ[4])) / y;
  return gaussian_tail(y) * r;
}

double calerf(double x, Kind kind) {
  const double y = std::abs(x);
  if (y <= kThreshold) {
    const double ysq = y > kXSmall ? y * y : 0.0;
    double num = kA[4] * ysq;
    double den = ysq;
    for (int i = 0; i < 3; ++i) {
      num = (num + kA[i]) * ysq;
      den = (den + kB[i]) * ysq;
    }
    const double e = x * (num + kA[3]) / (den + kB[3]);
    return kind == Kind::Erf ? e : 1.0 - e;
  }
  const double c = erfc_positive(y);
  if (kind == Kind::Erf) {
    const double e = 1.0 - c;
    return x < 0.0 ? -e : e;
  }
  return x < 0.0 ? 2.0 - c : c;
}

}  // namespace

double erf(double x) { return calerf(x, Kind::Erf); }

double erfc(double x) { return calerf(x, Kind::Erfc); }

double std_normal_cdf(double x) { return 0.5 * erfc(-x / std::numbers::sqrt2); }

double std_normal_pdf(double x) {
  return std::exp(-0.5 * x * x) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
}

double kummer_1f1_half(double q) {
  const double half_sq = 0.5 * q * q;
  if (!(half_sq <= kKummerMaxHalfSquare)) {
    throw OverflowError("kummer_1f1_half: q^2/2 = " + std::to_string(half_sq) +
                        " exceeds " + std::to_string(kKummerMaxHalfSquare));
  }
  const double sqrt_half_pi = std::sqrt(0.5 * std::numbers::pi);
  return sqrt_half_pi * q * erf(q / std::numbers::sqrt2) * std::exp(half_sq) + 1.0;
}

}  // namespace ratiodist::special
