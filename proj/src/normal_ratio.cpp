#include "ratiodist/normal_ratio.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ratiodist/error.hpp"
#include "ratiodist/special.hpp"

namespace ratiodist {
namespace {

constexpr double kSqrtHalfPi = 1.2533141373155002512;  // sqrt(pi/2)

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

void BivNormalParams::validate() const {
  require(std::isfinite(mu1) && std::isfinite(mu2), "BivNormalParams: means must be finite");
  require(sigma1 > 0.0 && std::isfinite(sigma1), "BivNormalParams: sigma1 must be > 0");
  require(sigma2 > 0.0 && std::isfinite(sigma2), "BivNormalParams: sigma2 must be > 0");
  require(std::abs(rho) < 1.0, "BivNormalParams: degenerate correlation, |rho| must be < 1");
}

void StdRatioParams::validate() const {
  require(a >= 0.0 && std::isfinite(a), "StdRatioParams: a must be finite and >= 0");
  require(b >= 0.0 && std::isfinite(b), "StdRatioParams: b must be finite and >= 0");
}

StandardForm to_standard(const BivNormalParams& p) {
  p.validate();
  const double sr = std::sqrt(1.0 - p.rho * p.rho);
  const double denom_sign = p.mu2 < 0.0 ? -1.0 : 1.0;
  const double a_raw = denom_sign * (p.mu1 / p.sigma1 - p.rho * p.mu2 / p.sigma2) / sr;
  const int sign = a_raw < 0.0 ? -1 : 1;
  const double scale = p.sigma1 / p.sigma2;

  StandardForm out;
  out.params = {std::abs(a_raw), std::abs(p.mu2) / p.sigma2};
  out.transform.sign = sign;
  out.transform.r = sign / (scale * sr);
  out.transform.s = p.rho * scale;
  return out;
}

double pdf_T(StdRatioParams p, double t) {
  const double a = p.a;
  const double b = p.b;
  // e = -(a - b t)^2 / (2 (1 + t^2)) equals q^2/2 - (a^2 + b^2)/2.
  double diff;       // (a - b t) / sqrt(1 + t^2)
  double q;          // (b + a t) / sqrt(1 + t^2)
  double inv_denom;  // 1 / (pi (1 + t^2))
  if (std::abs(t) <= 1.0) {
    const double s = std::sqrt(1.0 + t * t);
    diff = (a - b * t) / s;
    q = (b + a * t) / s;
    inv_denom = 1.0 / (std::numbers::pi * (1.0 + t * t));
  } else {
    const double u = 1.0 / t;
    const double sgn = t > 0.0 ? 1.0 : -1.0;
    const double s = std::sqrt(1.0 + u * u);
    diff = (a * std::abs(u) - b * sgn) / s;
    q = (b * std::abs(u) + a * sgn) / s;
    inv_denom = u * u / (std::numbers::pi * (1.0 + u * u));
  }
  const double gauss = std::exp(-0.5 * diff * diff);
  const double kummer_part = gauss * kSqrtHalfPi * q * special::erf(q / std::numbers::sqrt2);
  const double cauchy_part = std::exp(-0.5 * (a * a + b * b));
  return (kummer_part + cauchy_part) * inv_denom;
}

double pdf_W_phamgia(const BivNormalParams& p, double w) {
  const StandardForm sf = to_standard(p);
  const double r = sf.transform.r;
  return std::abs(r) * pdf_T(sf.params, r * (w - sf.transform.s));
}

double pdf_W_hinkley(const BivNormalParams& p, double w) {
  p.validate();
  const double s1 = p.sigma1;
  const double s2 = p.sigma2;
  const double rho = p.rho;
  const double one_m_rho2 = 1.0 - rho * rho;

  const double a2 = w * w / (s1 * s1) - 2.0 * rho * w / (s1 * s2) + 1.0 / (s2 * s2);
  const double aw = std::sqrt(a2);
  const double bw = p.mu1 * w / (s1 * s1) - rho * (p.mu1 + p.mu2 * w) / (s1 * s2) +
                    p.mu2 / (s2 * s2);
  const double c = p.mu1 * p.mu1 / (s1 * s1) - 2.0 * rho * p.mu1 * p.mu2 / (s1 * s2) +
                   p.mu2 * p.mu2 / (s2 * s2);
  const double dw = std::exp((bw * bw - c * a2) / (2.0 * one_m_rho2 * a2));

  // Phi(u) - Phi(-u) = erf(u / sqrt 2)
  const double u = bw / (std::sqrt(one_m_rho2) * aw);
  const double phi_diff = special::erf(u / std::numbers::sqrt2);

  const double first = bw * dw / (std::sqrt(2.0 * std::numbers::pi) * s1 * s2 * a2 * aw) *
                       phi_diff;
  const double second = std::sqrt(one_m_rho2) / (std::numbers::pi * s1 * s2 * a2) *
                        std::exp(-c / (2.0 * one_m_rho2));
  return first + second;
}

void HakeInputs::validate() const {
  require(sd_pre > 0.0 && sd_post > 0.0, "HakeInputs: standard deviations must be > 0");
  require(std::abs(rho_star) < 1.0, "HakeInputs: |rho_star| must be < 1");
  require(n >= 1, "HakeInputs: sample size must be positive");
  require(mu_pre < 100.0, "HakeInputs: mu_pre must be below 100");
}

BivNormalParams hake_params(const HakeInputs& h) {
  h.validate();
  const double n = static_cast<double>(h.n);
  const double var1 =
      (h.sd_pre * h.sd_pre + h.sd_post * h.sd_post - 2.0 * h.sd_pre * h.sd_post * h.rho_star) / n;
  require(var1 > 0.0, "hake_params: derived sigma1^2 <= 0");
  BivNormalParams p;
  p.mu1 = h.mu_post - h.mu_pre;
  p.mu2 = 100.0 - h.mu_pre;
  p.sigma1 = std::sqrt(var1);
  p.sigma2 = h.sd_pre / std::sqrt(n);
  p.rho = (h.sd_pre / p.sigma1 - h.rho_star * h.sd_post / p.sigma1) / std::sqrt(n);
  require(std::abs(p.rho) < 1.0, "hake_params: derived |rho| >= 1");
  return p;
}

StdRatioParams hake_ab(const HakeInputs& h) {
  h.validate();
  const double sqrt_n = std::sqrt(static_cast<double>(h.n));
  const double gain = h.mu_post - h.mu_pre;
  const double headroom = 100.0 - h.mu_pre;
  const double a = sqrt_n *
                   (gain - headroom + h.rho_star * h.sd_post * headroom / h.sd_pre) /
                   (h.sd_post * std::sqrt(1.0 - h.rho_star * h.rho_star));
  return {std::abs(a), sqrt_n * headroom / h.sd_pre};
}

const char* to_string(Modality m) { return m == Modality::Unimodal ? "unimodal" : "bimodal"; }

double modality_curve(double a) {
  require(a >= 1.0 && a < kModalityA0, "modality_curve: a outside [1, a0)");
  const double poly =
      18.621 + a * (-63.411 + a * (84.041 + a * (-54.668 + a * (17.716 + a * -2.2986))));
  return poly / (kModalityA0 - a);
}

std::vector<Mode> find_modes(StdRatioParams p) {
  p.validate();
  constexpr int kGrid = 20001;
  const double half_pi = 0.5 * std::numbers::pi;
  const double step = std::numbers::pi / (kGrid + 1);
  auto theta_at = [&](int i) { return -half_pi + step * (i + 1); };
  auto f = [&](double theta) { return pdf_T(p, std::tan(theta)); };

  std::vector<double> vals(kGrid);
  for (int i = 0; i < kGrid; ++i) vals[i] = f(theta_at(i));

  std::vector<Mode> modes;
  std::vector<int> locs;
  for (int i = 1; i + 1 < kGrid; ++i) {
    if (vals[i] > vals[i - 1] && vals[i] >= vals[i + 1]) locs.push_back(i);
  }
  // Merge maxima separated only by rounding-level dips.
  std::vector<int> kept;
  for (int i : locs) {
    if (!kept.empty()) {
      const int j = kept.back();
      const double dip = *std::min_element(vals.begin() + j, vals.begin() + i + 1);
      if (dip >= (1.0 - 1e-10) * std::min(vals[i], vals[j])) {
        if (vals[i] > vals[j]) kept.back() = i;
        continue;
      }
    }
    kept.push_back(i);
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i : kept) {
    double lo = theta_at(i - 1);
    double hi = theta_at(i + 1);
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = f(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = f(x1);
      }
    }
    const double theta = 0.5 * (lo + hi);
    const double peak = std::max(f(theta), vals[i]);
    modes.push_back({std::tan(theta), peak});
  }
  return modes;
}

Modality classify_modality(StdRatioParams p, bool practical) {
  p.validate();
  Modality verdict;
  if (p.a <= 1.0) {
    verdict = Modality::Unimodal;
  } else if (p.a >= kModalityA0) {
    verdict = Modality::Bimodal;
  } else {
    verdict = p.b < modality_curve(p.a) ? Modality::Bimodal : Modality::Unimodal;
  }
  if (verdict == Modality::Bimodal && practical) {
    std::vector<Mode> modes = find_modes(p);
    if (modes.size() >= 2) {
      std::sort(modes.begin(), modes.end(),
                [](const Mode& x, const Mode& y) { return x.density > y.density; });
      if (modes[1].density < kInvisibleModeDensity) verdict = Modality::Unimodal;
    }
  }
  return verdict;
}

double normal_approx_cdf(double z, double mu, double delta1, double delta2) {
  require(mu != 0.0, "normal_approx_cdf: mu must be nonzero");
  require(delta1 > 0.0 && delta2 > 0.0, "normal_approx_cdf: coefficients of variation must be > 0");
  return special::std_normal_cdf((z - mu) / (mu * std::hypot(delta1, delta2)));
}

PracticalMoments practical_moments(StdRatioParams p) {
  p.validate();
  require(p.b > 0.0, "practical_moments: denominator mean b must be > 0");
  require(p.a > 0.0, "practical_moments: numerator mean a must be > 0");
  const double mu = p.a / p.b;
  const double d1 = 1.0 / p.a;
  const double d2 = 1.0 / p.b;
  return {mu, mu * mu * (d1 * d1 + d2 * d2)};
}

PracticalMoments practical_moments(const BivNormalParams& p) {
  p.validate();
  require(p.mu2 != 0.0, "practical_moments: denominator mean must be nonzero");
  const double mu = p.mu1 / p.mu2;
  // mu^2 (delta1^2 + delta2^2) written without dividing by mu1.
  const double s1 = p.sigma1 / p.mu2;
  const double s2 = mu * p.sigma2 / p.mu2;
  return {mu, s1 * s1 + s2 * s2};
}

namespace {
Interval around(PracticalMoments m, double k) {
  require(k >= 0.0, "evaluation_interval: k must be >= 0");
  const double half = k * std::sqrt(m.sigma2);
  return {m.mu - half, m.mu + half};
}
}  // namespace

Interval evaluation_interval(StdRatioParams p, double k) { return around(practical_moments(p), k); }

Interval evaluation_interval(const BivNormalParams& p, double k) {
  return around(practical_moments(p), k);
}

double cohens_d(double mu_post, double mu_pre, double sd) {
  require(sd > 0.0, "cohens_d: sd must be > 0");
  return (mu_post - mu_pre) / sd;
}

}  // namespace ratiodist
