#include "ratiodist/cf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ratiodist/error.hpp"
#include "ratiodist/summation.hpp"

namespace ratiodist {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvPi2 = 1.0 / (kPi * kPi);
constexpr double kMaxDecayT = 1e6;
constexpr std::size_t kMaxPanels = 2'000'000;

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

Grid2DConfig resolve(const Grid2DConfig& cfg, const CharFn& cf1, const CharFn& cf2) {
  cfg.validate();
  if (!cfg.auto_range) return cfg;
  return auto_grid(cf1, cf2, {cfg.N, cfg.decay_tol});
}

Grid2DConfig resolve(const Grid2DConfig& cfg, const JointCharFn& jcf) {
  cfg.validate();
  if (!cfg.auto_range) return cfg;
  return auto_grid(jcf, {cfg.N, cfg.decay_tol});
}

double node(double h, int nu) { return h * (nu + 0.5); }

// (h1 h2/pi^2) sum_{nu2=0}^{N} sum_{nu1=lo}^{N} term(nu1, t1, t2). Each row is
// accumulated with compensation, rows are then combined in ascending nu2.
template <typename Term>
double midpoint_sum(const Grid2DConfig& g, int nu1_lo, Exec exec, Term&& term) {
  const int N = g.N;
  std::vector<double> rows(static_cast<std::size_t>(N) + 1);
  parallel_for(rows.size(), exec, [&](std::size_t r) {
    const double t2 = node(g.h2, static_cast<int>(r));
    CompensatedSum row;
    for (int nu1 = nu1_lo; nu1 <= N; ++nu1) row.add(term(nu1, node(g.h1, nu1), t2));
    rows[r] = row.value();
  });
  CompensatedSum total;
  for (double v : rows) total.add(v);
  const double out = g.h1 * g.h2 * kInvPi2 * total.value();
  if (!std::isfinite(out)) throw NumericalError("Broda-Kan sum is not finite");
  return out;
}

// phi1 on the nu1 = -N..N nodes.
std::vector<Complex> tabulate(const CharFn& cf, const Grid2DConfig& g) {
  std::vector<Complex> out(2 * static_cast<std::size_t>(g.N) + 1);
  for (int nu1 = -g.N; nu1 <= g.N; ++nu1) out[nu1 + g.N] = cf.phi(node(g.h1, nu1));
  return out;
}

double indep_sum(const std::vector<Complex>& phi1, const CharFn& cf2, double x,
                 const Grid2DConfig& g, Exec exec) {
  return midpoint_sum(g, -g.N, exec, [&](int nu1, double t1, double t2) {
    const Complex d2 = cf_derivative(cf2, -(x * t1 + t2));
    return (d2 * phi1[nu1 + g.N]).real() / t2;
  });
}

ComplexFn2 joint_partial(const JointCharFn& jcf) {
  if (!jcf.dphi2d_dt2) throw DomainError("broda_kan_pdf_joint: joint CF lacks its tau-partial");
  return *jcf.dphi2d_dt2;
}

// Integral of g over [0, T] as a sum of tanh-sinh panels.
double panel_integral(const RealFn& g, double T, double width, const QuadratureConfig& cfg) {
  const auto panels = static_cast<std::size_t>(std::ceil(T / width));
  if (panels > kMaxPanels) throw ConvergenceError("Gil-Pelaez: too many panels for the CF decay range");
  const double step = T / static_cast<double>(panels);
  CompensatedSum total;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = step * static_cast<double>(p);
    total.add(de_integrate(g, DETransform::finite(lo, lo + step), cfg).value);
  }
  return total.value();
}

struct GilPelaezRange {
  double T;
  double width;
};

GilPelaezRange gil_pelaez_range(const CharFn& cf, double x, const QuadratureConfig& cfg) {
  cfg.validate();
  const double tol = std::max(1e-2 * cfg.rel_tol, 1e-16);
  const double T = cf_decay_point(cf, tol);
  double mean = 0.0;
  if (cf.dphi) mean = (*cf.dphi)(0.0).imag();
  const double width = kPi / (1.0 + std::abs(x) + std::abs(mean));
  return {T, width};
}

}  // namespace

void Grid2DConfig::validate() const {
  require(N >= 1, "Grid2DConfig: N must be >= 1");
  if (!auto_range) require(h1 > 0.0 && h2 > 0.0, "Grid2DConfig: h1 and h2 must be > 0");
  require(decay_tol > 0.0 && decay_tol < 1.0, "Grid2DConfig: decay_tol must lie in (0, 1)");
}

CharFn normal_cf(double mu, double sigma) {
  require(sigma > 0.0, "normal_cf: sigma must be > 0");
  CharFn cf;
  cf.phi = [mu, sigma](double t) {
    return std::exp(Complex(-0.5 * sigma * sigma * t * t, mu * t));
  };
  cf.dphi = [mu, sigma](double t) {
    return Complex(-sigma * sigma * t, mu) * std::exp(Complex(-0.5 * sigma * sigma * t * t, mu * t));
  };
  cf.decay_scale = std::sqrt(2.0 * std::log(1.0 / kCfDecayTol)) / sigma;
  cf.label = "normal(" + std::to_string(mu) + "," + std::to_string(sigma) + ")";
  return cf;
}

CharFn chi_square_cf(int k) {
  require(k >= 1, "chi_square_cf: k must be >= 1");
  const double half_k = 0.5 * k;
  CharFn cf;
  cf.phi = [half_k](double t) { return std::pow(Complex(1.0, -2.0 * t), -half_k); };
  cf.dphi = [half_k, k](double t) {
    return Complex(0.0, k) * std::pow(Complex(1.0, -2.0 * t), -half_k - 1.0);
  };
  // (1 + 4t^2)^(-k/4) = tol
  const double m = std::pow(kCfDecayTol, -4.0 / k);
  cf.decay_scale = 0.5 * std::sqrt(m - 1.0);
  cf.label = "chisq(" + std::to_string(k) + ")";
  return cf;
}

CharFn cauchy_cf(double loc, double scale) {
  require(scale > 0.0, "cauchy_cf: scale must be > 0");
  CharFn cf;
  cf.phi = [loc, scale](double t) { return std::exp(Complex(-scale * std::abs(t), loc * t)); };
  cf.dphi = [loc, scale](double t) {
    const double sgn = t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0);
    return Complex(-scale * sgn, loc) * std::exp(Complex(-scale * std::abs(t), loc * t));
  };
  cf.decay_scale = std::log(1.0 / kCfDecayTol) / scale;
  cf.label = "cauchy(" + std::to_string(loc) + "," + std::to_string(scale) + ")";
  return cf;
}

CharFn uniform_cf(double lo, double hi) {
  require(lo < hi, "uniform_cf: need lo < hi");
  CharFn cf;
  cf.phi = [lo, hi](double t) {
    if (t == 0.0) return Complex(1.0, 0.0);
    const Complex num = std::exp(Complex(0.0, t * hi)) - std::exp(Complex(0.0, t * lo));
    return num / Complex(0.0, t * (hi - lo));
  };
  cf.label = "uniform(" + std::to_string(lo) + "," + std::to_string(hi) + ")";
  return cf;
}

Complex cf_derivative(const CharFn& cf, double t, double h) {
  if (cf.dphi) return (*cf.dphi)(t);
  require(h > 0.0, "cf_derivative: h must be > 0");
  return (cf.phi(t + h) - cf.phi(t - h)) / (2.0 * h);
}

double cf_decay_point(const CharFn& cf, double tol) {
  require(tol > 0.0 && tol < 1.0, "cf_decay_point: tol must lie in (0, 1)");
  if (tol == kCfDecayTol && cf.decay_scale) return *cf.decay_scale;
  auto small = [&](double t) { return std::abs(cf.phi(t)) < tol && std::abs(cf.phi(2.0 * t)) < tol; };
  if (!small(kMaxDecayT)) {
    throw DomainError("characteristic function " + cf.label +
                      " does not decay below tolerance by t = 1e6; give an explicit grid");
  }
  double hi = 1.0;
  while (!small(hi)) hi *= 2.0;
  double lo = 0.5 * hi;
  if (small(lo)) return lo;
  for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (small(mid) ? hi : lo) = mid;
  }
  return hi;
}

QuadratureConfig gil_pelaez_default_config() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  cfg.abs_floor = 1e-14;
  return cfg;
}

double gil_pelaez_pdf(const CharFn& cf, double x, const QuadratureConfig& cfg) {
  const GilPelaezRange range = gil_pelaez_range(cf, x, cfg);
  const RealFn g = [&](double t) { return (std::exp(Complex(0.0, -t * x)) * cf.phi(t)).real(); };
  return panel_integral(g, range.T, range.width, cfg) / kPi;
}

CdfValue clamp_probability(double raw) {
  CdfValue out;
  out.raw = raw;
  out.value = std::clamp(raw, 0.0, 1.0);
  out.warning = raw < -kClampWarnBand || raw > 1.0 + kClampWarnBand;
  return out;
}

CdfValue gil_pelaez_cdf(const CharFn& cf, double x, const QuadratureConfig& cfg) {
  const GilPelaezRange range = gil_pelaez_range(cf, x, cfg);
  const RealFn g = [&](double t) { return (std::exp(Complex(0.0, -t * x)) * cf.phi(t)).imag() / t; };
  return clamp_probability(0.5 - panel_integral(g, range.T, range.width, cfg) / kPi);
}

Grid2DConfig grid_from_ranges(double T1, double T2, int N) {
  require(N >= 1, "grid_from_ranges: N must be >= 1");
  require(T1 > 0.0 && T2 > 0.0, "grid_from_ranges: ranges must be > 0");
  Grid2DConfig g;
  g.N = N;
  g.h1 = T1 / N;
  g.h2 = T2 / N;
  g.auto_range = false;
  return g;
}

Grid2DConfig auto_grid(const CharFn& cf1, const CharFn& cf2, GridHint hint) {
  Grid2DConfig g = grid_from_ranges(cf_decay_point(cf1, hint.decay_tol),
                                    cf_decay_point(cf2, hint.decay_tol), hint.N);
  g.decay_tol = hint.decay_tol;
  return g;
}

Grid2DConfig auto_grid(const JointCharFn& jcf, GridHint hint) {
  if (!jcf.decay1 || !jcf.decay2) {
    throw DomainError("auto_grid: joint CF " + jcf.label + " carries no marginal decay scales");
  }
  return grid_from_ranges(*jcf.decay1, *jcf.decay2, hint.N);
}

JointCharFn bivariate_normal_cf(double mu1, double mu2, double sigma1, double sigma2, double rho) {
  require(sigma1 > 0.0 && sigma2 > 0.0, "bivariate_normal_cf: sigmas must be > 0");
  require(std::abs(rho) < 1.0, "bivariate_normal_cf: |rho| must be < 1");
  const double c = rho * sigma1 * sigma2;
  auto phi = [=](double s, double tau) {
    const double q = sigma1 * sigma1 * s * s + 2.0 * c * s * tau + sigma2 * sigma2 * tau * tau;
    return std::exp(Complex(-0.5 * q, mu1 * s + mu2 * tau));
  };
  JointCharFn j;
  j.phi2d = phi;
  j.dphi2d_dt2 = [=](double s, double tau) {
    return Complex(-c * s - sigma2 * sigma2 * tau, mu2) * phi(s, tau);
  };
  const double root = std::sqrt(2.0 * std::log(1.0 / kCfDecayTol));
  j.decay1 = root / sigma1;
  j.decay2 = root / sigma2;
  j.label = "bivariate-normal";
  return j;
}

JointCharFn joint_from_independent(const CharFn& cf1, const CharFn& cf2) {
  JointCharFn j;
  j.phi2d = [cf1, cf2](double s, double tau) { return cf1.phi(s) * cf2.phi(tau); };
  j.dphi2d_dt2 = [cf1, cf2](double s, double tau) { return cf_derivative(cf2, tau) * cf1.phi(s); };
  try {
    j.decay1 = cf_decay_point(cf1);
    j.decay2 = cf_decay_point(cf2);
  } catch (const DomainError&) {
    j.decay1.reset();
    j.decay2.reset();
  }
  j.label = cf1.label + "x" + cf2.label;
  return j;
}

double broda_kan_pdf_indep(const CharFn& cf1, const CharFn& cf2, double x,
                           const Grid2DConfig& cfg, Exec exec) {
  const Grid2DConfig g = resolve(cfg, cf1, cf2);
  return indep_sum(tabulate(cf1, g), cf2, x, g, exec);
}

std::vector<double> broda_kan_pdf_indep_grid(const CharFn& cf1, const CharFn& cf2,
                                             std::span<const double> xs,
                                             const Grid2DConfig& cfg, Exec exec) {
  const Grid2DConfig g = resolve(cfg, cf1, cf2);
  const std::vector<Complex> phi1 = tabulate(cf1, g);
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), exec, [&](std::size_t i) {
    out[i] = indep_sum(phi1, cf2, xs[i], g, Exec::Serial);
  });
  return out;
}

double broda_kan_pdf_indep_reference(const CharFn& cf1, const CharFn& cf2, double x,
                                     const Grid2DConfig& cfg) {
  const Grid2DConfig g = resolve(cfg, cf1, cf2);
  CompensatedSum total;
  for (int nu2 = 0; nu2 <= g.N; ++nu2) {
    const double t2 = node(g.h2, nu2);
    for (int nu1 = -g.N; nu1 <= g.N; ++nu1) {
      const double t1 = node(g.h1, nu1);
      total.add((cf_derivative(cf2, -(x * t1 + t2)) * cf1.phi(t1)).real() / t2);
    }
  }
  return g.h1 * g.h2 * kInvPi2 * total.value();
}

double broda_kan_pdf_joint(const JointCharFn& jcf, double w, const Grid2DConfig& cfg, Exec exec) {
  const Grid2DConfig g = resolve(cfg, jcf);
  const ComplexFn2 d = joint_partial(jcf);
  return midpoint_sum(g, -g.N, exec, [&](int, double t1, double t2) {
    return d(t1, -(w * t1 + t2)).real() / t2;
  });
}

std::vector<double> broda_kan_pdf_joint_grid(const JointCharFn& jcf, std::span<const double> ws,
                                             const Grid2DConfig& cfg, Exec exec) {
  const Grid2DConfig g = resolve(cfg, jcf);
  std::vector<double> out(ws.size());
  parallel_for(ws.size(), exec, [&](std::size_t i) {
    out[i] = broda_kan_pdf_joint(jcf, ws[i], g, Exec::Serial);
  });
  return out;
}

CdfValue broda_kan_cdf(const JointCharFn& jcf, double r, const Grid2DConfig& cfg, Exec exec) {
  const Grid2DConfig g = resolve(cfg, jcf);
  const double sum = midpoint_sum(g, 0, exec, [&](int, double s, double t) {
    const Complex d = jcf.phi2d(s, t - r * s) - jcf.phi2d(s, -t - r * s);
    return d.real() / (s * t);
  });
  return clamp_probability(0.5 + sum);
}

double broda_kan_error_estimate(const CharFn& cf1, const CharFn& cf2, double x,
                                const Grid2DConfig& cfg) {
  const Grid2DConfig fine = resolve(cfg, cf1, cf2);
  require(fine.N >= 2, "broda_kan_error_estimate: N must be >= 2");
  const Grid2DConfig coarse = grid_from_ranges(fine.h1 * fine.N, fine.h2 * fine.N, fine.N / 2);
  return std::abs(broda_kan_pdf_indep(cf1, cf2, x, fine) - broda_kan_pdf_indep(cf1, cf2, x, coarse));
}

CfMoments cf_moments(const CharFn& cf, double h) {
  require(h > 0.0, "cf_moments: h must be > 0");
  auto im = [&](int k) { return cf.phi(k * h).imag(); };
  auto re = [&](int k) { return cf.phi(k * h).real(); };
  CfMoments m;
  m.mu = (8.0 / 5.0 * im(1) - 2.0 / 5.0 * im(2) + 8.0 / 105.0 * im(3) - 2.0 / 280.0 * im(4)) / h;
  m.second = (205.0 / 72.0 - 16.0 / 5.0 * re(1) + 2.0 / 5.0 * re(2) - 16.0 / 315.0 * re(3) +
              2.0 / 560.0 * re(4)) / (h * h);
  m.sigma2 = m.second - m.mu * m.mu;
  return m;
}

Interval six_sigma_interval(const CharFn& cf1, const CharFn& cf2, double k, const RealFn& pdf) {
  require(k >= 0.0, "six_sigma_interval: k must be >= 0");
  const CfMoments m1 = cf_moments(cf1);
  const CfMoments m2 = cf_moments(cf2);
  const double s1 = std::sqrt(std::max(m1.sigma2, 0.0));
  const double s2 = std::sqrt(std::max(m2.sigma2, 0.0));
  if (std::abs(m2.mu) > 1e-6 * s2) {
    const double mu = m1.mu / m2.mu;
    const double mu2sq = m2.mu * m2.mu;
    const double sigma = std::sqrt(m1.sigma2 / mu2sq + m1.mu * m1.mu * m2.sigma2 / (mu2sq * mu2sq));
    return {mu - k * sigma, mu + k * sigma};
  }
  Interval out{std::min(m1.mu - k * s1, m2.mu - k * s2), std::max(m1.mu + k * s1, m2.mu + k * s2)};
  if (pdf) {
    const double c = out.mid();
    for (int i = 0; i < kSixSigmaMaxExtensions && pdf(out.lo) >= 1e-10; ++i) out.lo = c - 2.0 * (c - out.lo);
    for (int i = 0; i < kSixSigmaMaxExtensions && pdf(out.hi) >= 1e-10; ++i) out.hi = c + 2.0 * (out.hi - c);
  }
  return out;
}

}  // namespace ratiodist
