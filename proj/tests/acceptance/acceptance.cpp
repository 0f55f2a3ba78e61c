// Acceptance checks. One line per criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "ratiodist/bench.hpp"
#include "ratiodist/cf.hpp"
#include "ratiodist/distributions.hpp"
#include "ratiodist/mellin.hpp"
#include "ratiodist/normal_ratio.hpp"
#include "ratiodist/oracle.hpp"
#include "ratiodist/quadrature.hpp"

using namespace ratiodist;

namespace {

constexpr double kPi = std::numbers::pi;

// Criterion 1
constexpr double kCauchyTol = 1e-10;
constexpr double kCauchyBkTol = 5e-4;
constexpr double kCauchyTime = 5.0;
// Criterion 2
constexpr double kCrossTol = 1e-10;
constexpr double kCrossTime = 10.0;
// Criterion 3
constexpr double kMellinTightTol = 1e-13;
constexpr double kMellinLooseLo = 1e-6;
constexpr double kMellinLooseHi = 1e-3;
constexpr double kMellinTime = 30.0;
// Criterion 4
constexpr double kCheb257Tol = 1e-12;
constexpr double kCheb129Tol = 1e-6;
constexpr double kChebSpeedup = 3.0;
// Criterion 5
constexpr double kBkLo = 1e-6;
constexpr double kBkHi = 1e-3;
constexpr double kBkFactorTol = 1e-12;
constexpr double kBkTime = 300.0;
// Criterion 6
constexpr double kSweepNoise = 10.0;
// Criterion 8
constexpr double kNormTol = 1e-8;
// Criterion 9
constexpr double kKsTol = 0.002;
constexpr double kMcTime = 60.0;
constexpr std::size_t kMcSamples = 1'000'000;
constexpr std::uint64_t kMcSeed = 20240611;
// Criterion 10
constexpr double kNonNormalTol = 1e-3;
// Criterion 11
constexpr double kMomentMuTol = 1e-6;
constexpr double kMomentVarTol = 1e-5;
// Criterion 12
constexpr double kCvTol = 0.05;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %2d %-28s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  return eps_max(a, b);
}

QuadratureConfig mellin_tol(double rel) {
  QuadratureConfig c = mellin_default_config();
  c.rel_tol = rel;
  return c;
}

void guarded(int id, const char* name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, name, false, std::string("exception: ") + e.what());
  }
}

const std::vector<double>& table_grid() {
  static const std::vector<double> g = linspace(-5, 8, 1000);
  return g;
}

const std::vector<double>& table_reference() {
  static const std::vector<double> r = reference_pdf_grid({1.5, 1}, table_grid());
  return r;
}

void c1_cauchy() {
  const auto t0 = std::chrono::steady_clock::now();
  const double target = 1 / kPi;
  const double closed = pdf_T({0, 0}, 0.0);
  const Distribution z = normal_dist(0, 1);
  const double mellin = ratio_pdf(z.density, z.density, 0.0, mellin_tol(1e-12));
  const double gp = gil_pelaez_pdf(cauchy_cf(), 0.0);
  const double bk = broda_kan_pdf_indep(z.cf, z.cf, 0.0);
  const double dt = seconds_since(t0);
  const double e1 = std::max({std::abs(closed - target), std::abs(mellin - target), std::abs(gp - target)});
  const double e2 = std::abs(bk - target);
  report(1, "Cauchy sanity", e1 <= kCauchyTol && e2 <= kCauchyBkTol && dt < kCauchyTime,
         fmt("max|err| closed/mellin/gp = %.2e (<= %.0e), broda-kan %.2e (<= %.0e), %.2f s", e1, kCauchyTol,
             e2, kCauchyBkTol, dt));
}

void c2_cross_equality() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 gen(12345);
  std::uniform_real_distribution<double> mu(-5, 5), sd(0.2, 3), rho(-0.95, 0.95);
  double worst = 0;
  for (int s = 0; s < 200; ++s) {
    const BivNormalParams p{mu(gen), mu(gen), sd(gen), sd(gen), rho(gen)};
    const Interval iv = evaluation_interval(p, 3.0);
    for (double w : linspace(iv.lo, iv.hi, 50)) {
      worst = std::max(worst, std::abs(pdf_W_hinkley(p, w) - pdf_W_phamgia(p, w)));
    }
  }
  const double dt = seconds_since(t0);
  report(2, "closed-form cross-equality", worst <= kCrossTol && dt < kCrossTime,
         fmt("max|hinkley - phamgia| = %.2e over 200 x 50 (<= %.0e), %.2f s", worst, kCrossTol, dt));
}

void c3_mellin() {
  const auto t0 = std::chrono::steady_clock::now();
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  const double tight = max_abs_diff(ratio_pdf_grid(n1.density, n2.density, table_grid(), mellin_tol(1e-15)),
                                    table_reference());
  const double loose = max_abs_diff(ratio_pdf_grid(n1.density, n2.density, table_grid(), mellin_tol(1e-3)),
                                    table_reference());
  const double dt = seconds_since(t0);
  report(3, "Mellin-DE accuracy",
         tight <= kMellinTightTol && loose >= kMellinLooseLo && loose <= kMellinLooseHi && dt < kMellinTime,
         fmt("eps_max(1e-15) = %.2e (<= %.0e), eps_max(1e-3) = %.2e (in [%.0e, %.0e]), %.2f s", tight,
             kMellinTightTol, loose, kMellinLooseLo, kMellinLooseHi, dt));
}

void c4_chebyshev() {
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  const QuadratureConfig q = mellin_tol(1e-15);
  double t_direct = INFINITY, t_cheb = INFINITY;
  std::vector<double> direct, cheb;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    direct = ratio_pdf_grid(n1.density, n2.density, table_grid(), q);
    t_direct = std::min(t_direct, seconds_since(t0));
    t0 = std::chrono::steady_clock::now();
    cheb = ratio_pdf_grid(n1.density, n2.density, table_grid(), q, Acceleration::chebyshev(257));
    t_cheb = std::min(t_cheb, seconds_since(t0));
  }
  const double e257 = max_abs_diff(cheb, table_reference());
  const double e129 = max_abs_diff(
      ratio_pdf_grid(n1.density, n2.density, table_grid(), q, Acceleration::chebyshev(129)), table_reference());
  const double speed = t_direct / t_cheb;
  report(4, "Chebyshev acceleration", e257 <= kCheb257Tol && e129 <= kCheb129Tol && speed >= kChebSpeedup,
         fmt("eps_max(257) = %.2e (<= %.0e), eps_max(129) = %.2e (<= %.0e), speedup %.2fx (>= %.0fx)", e257,
             kCheb257Tol, e129, kCheb129Tol, speed, kChebSpeedup));
}

void c5_broda_kan() {
  const auto t0 = std::chrono::steady_clock::now();
  const CharFn a = normal_cf(1.5, 1), b = normal_cf(1, 1);
  const std::vector<double> bk = broda_kan_pdf_indep_grid(a, b, table_grid());
  const double dt = seconds_since(t0);
  const double err = max_abs_diff(bk, table_reference());
  const JointCharFn j = joint_from_independent(a, b);
  std::vector<double> sub, sub_indep;
  for (std::size_t i = 0; i < table_grid().size(); i += 10) {
    sub.push_back(table_grid()[i]);
    sub_indep.push_back(bk[i]);
  }
  const double fac = max_abs_diff(broda_kan_pdf_joint_grid(j, sub), sub_indep);
  report(5, "Broda-Kan accuracy", err >= kBkLo && err <= kBkHi && fac <= kBkFactorTol && dt < kBkTime,
         fmt("eps_max = %.3e (in [%.0e, %.0e]), |joint - indep| = %.2e on 100 points (<= %.0e), %.1f s", err,
             kBkLo, kBkHi, fac, kBkFactorTol, dt));
}

void c6_sweep() {
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  std::vector<double> errs;
  bool ok = true;
  std::string detail;
  for (double eps : {1e-3, 1e-6, 1e-10, 1e-15}) {
    errs.push_back(max_abs_diff(ratio_pdf_grid(n1.density, n2.density, table_grid(), mellin_tol(eps)),
                                table_reference()));
    detail += fmt("%s%.0e:%.2e", detail.empty() ? "" : ", ", eps, errs.back());
    if (errs.size() > 1 && errs.back() > kSweepNoise * errs[errs.size() - 2]) ok = false;
  }
  report(6, "tolerance-sweep monotonicity", ok, detail);
}

void c7_modality() {
  struct Case {
    StdRatioParams p;
    Modality want;
  };
  const Case cases[] = {
      {{2, 0.25}, Modality::Bimodal},   {{0.5, 0.1}, Modality::Unimodal}, {{0.5, 1}, Modality::Unimodal},
      {{0.5, 10}, Modality::Unimodal},  {{1.5, 1}, Modality::Unimodal},
      {{kModalityA0, 1}, Modality::Bimodal},
      {{4, 7}, Modality::Unimodal},     {{5, 25}, Modality::Unimodal},
  };
  int wrong = 0;
  std::string detail;
  for (const Case& c : cases) {
    const Modality got = classify_modality(c.p);
    if (got != c.want) {
      ++wrong;
      detail += fmt(" (%g,%g)->%s", c.p.a, c.p.b, to_string(got));
    }
  }
  report(7, "modality suite", wrong == 0, fmt("%d/%zu labels match", int(std::size(cases)) - wrong,
                                             std::size(cases)) + detail);
}

void c8_normalization() {
  double worst = 0;
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-12;
  for (StdRatioParams p : {StdRatioParams{2, 0.25}, {1.5, 1}, {4, 7}, {5, 25}}) {
    const double c = p.b != 0 ? p.a / p.b : 0.0;
    const double mass = de_integrate([p, c](double u) { return pdf_T(p, c + u); }, DETransform::real_line(), cfg).value;
    worst = std::max(worst, std::abs(mass - 1));
  }
  report(8, "normalization", worst <= kNormTol, fmt("max|mass - 1| = %.2e (<= %.0e), sinh-sinh", worst, kNormTol));
}

void c9_monte_carlo() {
  const auto t0 = std::chrono::steady_clock::now();
  const StdRatioParams p{1.5, 1};
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  const SampleSet s = mc_ratio_samples(n1.sample, n2.sample, kMcSamples, kMcSeed);
  const TabulatedCdf F = TabulatedCdf::build([p](double t) { return pdf_T(p, t); });
  const double ks = ks_distance(s, [&F](double x) { return F(x); });
  const double dt = seconds_since(t0);
  report(9, "Monte Carlo concordance", ks <= kKsTol && dt < kMcTime,
         fmt("KS = %.5f over %zu samples, seed %llu (<= %.3f), %.1f s", ks, kMcSamples,
             static_cast<unsigned long long>(kMcSeed), kKsTol, dt));
}

void c10_non_normal() {
  const Distribution z = normal_dist(0, 1), q = chi_square_dist(5);
  struct Case {
    const char* name;
    const Distribution* num;
    const Distribution* den;
    Grid2DConfig grid;
  };
  const Case cases[] = {
      {"N/chi2", &z, &q, grid_from_ranges(cf_decay_point(z.cf), 40.0, 500)},
      {"chi2/N", &q, &z, grid_from_ranges(30.0, 100.0, 750)},
  };
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    const Interval iv = six_sigma_interval(c.num->cf, c.den->cf);
    const std::vector<double> xs = linspace(iv.lo, iv.hi, 200);
    const double e = max_abs_diff(broda_kan_pdf_indep_grid(c.num->cf, c.den->cf, xs, c.grid),
                                  ratio_pdf_grid(c.num->density, c.den->density, xs));
    ok = ok && e <= kNonNormalTol;
    detail += fmt("%s%s on [%.2f, %.2f]: %.2e", detail.empty() ? "" : ", ", c.name, iv.lo, iv.hi, e);
  }
  report(10, "non-normal ratio", ok, detail + fmt(" (<= %.0e)", kNonNormalTol));
}

void c11_moments() {
  const CfMoments m = cf_moments(normal_cf(2, 1.5), 1e-4);
  const double em = std::abs(m.mu - 2), ev = std::abs(m.sigma2 - 2.25);
  report(11, "CF moment estimation", em <= kMomentMuTol && ev <= kMomentVarTol,
         fmt("|mu - 2| = %.2e (<= %.0e), |sigma2 - 2.25| = %.2e (<= %.0e)", em, kMomentMuTol, ev,
             kMomentVarTol));
}

void c12_stability() {
  MethodSpec m;
  m.kind = MethodKind::MellinDE;
  m.rel_tol = 1e-10;
  ExperimentOptions o;
  o.runs = 3;
  o.reps = 10;
  const BenchRecord r = run_experiment(m, {1.5, 1}, {-5, 8}, o);
  const bool pass = r.runtime_cv <= kCvTol;
  std::printf("[%s] 12 %-28s runtime_cv = %.4f over 3 x 10 (<= %.2f), mean %.4f s%s\n", pass ? "PASS" : "WARN",
              "protocol stability", r.runtime_cv, kCvTol, r.runtime_mean_s,
              pass ? "" : "; best-effort, not counted as a failure");
  std::fflush(stdout);
}

}  // namespace

int main() {
  guarded(1, "Cauchy sanity", c1_cauchy);
  guarded(2, "closed-form cross-equality", c2_cross_equality);
  guarded(3, "Mellin-DE accuracy", c3_mellin);
  guarded(4, "Chebyshev acceleration", c4_chebyshev);
  guarded(5, "Broda-Kan accuracy", c5_broda_kan);
  guarded(6, "tolerance-sweep monotonicity", c6_sweep);
  guarded(7, "modality suite", c7_modality);
  guarded(8, "normalization", c8_normalization);
  guarded(9, "Monte Carlo concordance", c9_monte_carlo);
  guarded(10, "non-normal ratio", c10_non_normal);
  guarded(11, "CF moment estimation", c11_moments);
  try {
    c12_stability();
  } catch (const std::exception& e) {
    std::printf("[WARN] 12 %-28s exception: %s\n", "protocol stability", e.what());
  }
  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
