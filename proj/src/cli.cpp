#include "ratiodist/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ratiodist/bench.hpp"
#include "ratiodist/cf.hpp"
#include "ratiodist/distributions.hpp"
#include "ratiodist/error.hpp"
#include "ratiodist/mellin.hpp"
#include "ratiodist/normal_ratio.hpp"
#include "ratiodist/oracle.hpp"
#include "ratiodist/parallel.hpp"

namespace ratiodist {
namespace {

enum class Engine { Analytic, Mellin, BrodaKan, GilPelaez };

struct RunConfig {
  std::string engine = "analytic";
  std::vector<double> std_ratio;
  std::vector<double> biv;
  std::vector<double> hake;
  std::vector<std::string> num;
  std::vector<std::string> den;
  std::vector<double> interval;
  bool auto_interval = false;
  std::optional<double> k;
  std::size_t n = 1000;
  double rel_tol = 1e-10;
  int grid_n = 500;
  std::vector<double> bk_range;
  double decay_tol = kCfDecayTol;
  std::size_t cheb = 0;
  std::string output;
  std::uint64_t seed = 1;
  int threads = 0;

  // bench
  std::string method = "mellin-de";
  bool sweep = false;
  bool all_pairs = false;
  bool with_broda_kan = false;
  bool parallel = false;
  int runs = 3;
  int reps = 10;
  std::string format = "csv";
};

Engine parse_engine(const std::string& s) {
  if (s == "analytic") return Engine::Analytic;
  if (s == "mellin") return Engine::Mellin;
  if (s == "broda-kan") return Engine::BrodaKan;
  if (s == "gil-pelaez") return Engine::GilPelaez;
  throw DomainError("unknown engine: " + s);
}

double to_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw DomainError("not a number: " + s);
  return v;
}

Distribution parse_distribution(const std::vector<std::string>& spec) {
  if (spec.empty()) throw DomainError("empty distribution spec");
  const std::string& kind = spec[0];
  auto arg = [&](std::size_t i, double fallback) {
    return i < spec.size() ? to_real(spec[i]) : fallback;
  };
  if (kind == "normal") return normal_dist(arg(1, 0.0), arg(2, 1.0));
  if (kind == "chisq") {
    if (spec.size() < 2) throw DomainError("chisq needs k");
    const double k = to_real(spec[1]);
    if (k != std::floor(k)) throw DomainError("chisq k must be an integer");
    return chi_square_dist(static_cast<int>(k));
  }
  if (kind == "cauchy") return cauchy_dist(arg(1, 0.0), arg(2, 1.0));
  if (kind == "uniform") return uniform_dist(arg(1, 0.0), arg(2, 1.0));
  throw DomainError("unknown distribution: " + kind);
}

bool is_normal(const Distribution& d) { return d.label.rfind("normal", 0) == 0; }

// The ratio described on the command line, in whichever forms it admits.
struct Problem {
  std::optional<BivNormalParams> biv;
  std::optional<Distribution> num;
  std::optional<Distribution> den;
  // Correlated normal ratio as W = T/r + s with T an independent ratio.
  std::optional<StandardForm> standard;
};

Problem build_problem(const RunConfig& c) {
  const int given = !c.std_ratio.empty() + !c.biv.empty() + !c.hake.empty() + (!c.num.empty() || !c.den.empty());
  if (given != 1) throw DomainError("give exactly one of --std-ratio, --biv, --hake, --num/--den");
  Problem p;
  if (!c.std_ratio.empty()) {
    p.biv = BivNormalParams{c.std_ratio[0], c.std_ratio[1], 1.0, 1.0, 0.0};
  } else if (!c.biv.empty()) {
    p.biv = BivNormalParams{c.biv[0], c.biv[1], c.biv[2], c.biv[3], c.biv[4]};
  } else if (!c.hake.empty()) {
    const double n = c.hake[5];
    if (n != std::floor(n) || n < 1) throw DomainError("--hake: n must be a positive integer");
    HakeInputs h{c.hake[0], c.hake[1], c.hake[2], c.hake[3], c.hake[4], static_cast<int>(n)};
    p.biv = hake_params(h);
  } else {
    if (!c.num.empty()) p.num = parse_distribution(c.num);
    if (!c.den.empty()) p.den = parse_distribution(c.den);
    if (p.num && p.den && is_normal(*p.num) && is_normal(*p.den)) {
      p.biv = BivNormalParams{p.num->mean, p.den->mean, std::sqrt(p.num->variance),
                              std::sqrt(p.den->variance), 0.0};
    }
    return p;
  }
  p.biv->validate();
  if (p.biv->rho == 0.0) {
    p.num = normal_dist(p.biv->mu1, p.biv->sigma1);
    p.den = normal_dist(p.biv->mu2, p.biv->sigma2);
  } else {
    p.standard = to_standard(*p.biv);
  }
  return p;
}

void require_ratio(const Problem& p, Engine e) {
  if (e == Engine::GilPelaez) {
    if (!p.num || p.den) throw DomainError("gil-pelaez inverts a single law: give --num only");
    return;
  }
  if (e == Engine::Analytic && !p.biv) throw DomainError("analytic engine needs a normal ratio");
  if (e == Engine::Mellin && !(p.num && p.den) && !p.standard) {
    throw DomainError("mellin engine needs --num and --den");
  }
  if (e == Engine::BrodaKan && !p.biv && !(p.num && p.den)) throw DomainError("broda-kan needs a ratio");
}

Exec engine_exec(const RunConfig& c) { return c.threads == 1 ? Exec::Serial : Exec::Parallel; }

QuadratureConfig quad_config(const RunConfig& c, QuadratureConfig base) {
  base.rel_tol = c.rel_tol;
  base.validate();
  return base;
}

Grid2DConfig grid_config(const RunConfig& c) {
  if (!c.bk_range.empty()) return grid_from_ranges(c.bk_range[0], c.bk_range[1], c.grid_n);
  Grid2DConfig g;
  g.N = c.grid_n;
  g.decay_tol = c.decay_tol;
  g.auto_range = true;
  g.validate();
  return g;
}

JointCharFn joint_of(const Problem& p) {
  if (p.biv) {
    const BivNormalParams& b = *p.biv;
    return bivariate_normal_cf(b.mu1, b.mu2, b.sigma1, b.sigma2, b.rho);
  }
  return joint_from_independent(p.num->cf, p.den->cf);
}

Interval resolve_interval(const RunConfig& c, const Problem& p, Engine e) {
  if (!c.interval.empty()) {
    if (!(c.interval[0] <= c.interval[1])) throw DomainError("--interval: need lo <= hi");
    return {c.interval[0], c.interval[1]};
  }
  if (!c.auto_interval) throw DomainError("give --interval lo hi or --auto-interval");
  if (e == Engine::GilPelaez) {
    const CfMoments m = cf_moments(p.num->cf);
    const double half = c.k.value_or(6.0) * std::sqrt(std::max(m.sigma2, 0.0));
    return {m.mu - half, m.mu + half};
  }
  if (e == Engine::BrodaKan) {
    const double k = c.k.value_or(6.0);
    if (p.num && p.den) return six_sigma_interval(p.num->cf, p.den->cf, k);
    const BivNormalParams& b = *p.biv;
    return six_sigma_interval(normal_cf(b.mu1, b.sigma1), normal_cf(b.mu2, b.sigma2), k);
  }
  const double k = c.k.value_or(2.0);
  if (p.biv) return evaluation_interval(*p.biv, k);
  const double m1 = p.num->mean, m2 = p.den->mean;
  if (!std::isfinite(m1) || !std::isfinite(m2) || m2 == 0.0) {
    throw DomainError("--auto-interval needs finite moments and a nonzero denominator mean");
  }
  const double s1 = std::sqrt(p.num->variance) / m2;
  const double s2 = m1 * std::sqrt(p.den->variance) / (m2 * m2);
  const double half = k * std::hypot(s1, s2);
  return {m1 / m2 - half, m1 / m2 + half};
}

// Densities whose Mellin ratio gives T, and the map W = T/r + s.
struct MellinForm {
  DensityFn num, den;
  double r = 1.0;
  double s = 0.0;
};

MellinForm mellin_form(const Problem& p) {
  if (!p.standard) return {p.num->density, p.den->density};
  const StdRatioParams& sp = p.standard->params;
  return {normal_dist(sp.a, 1.0).density, normal_dist(sp.b, 1.0).density, p.standard->transform.r,
          p.standard->transform.s};
}

std::vector<double> mellin_pdf_grid(const RunConfig& c, const Problem& p, const std::vector<double>& xs,
                                    Exec exec) {
  const MellinForm m = mellin_form(p);
  std::vector<double> ts(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ts[i] = m.r * (xs[i] - m.s);
  if (m.r < 0) std::reverse(ts.begin(), ts.end());
  const Acceleration acc = c.cheb ? Acceleration::chebyshev(c.cheb) : Acceleration::direct();
  std::vector<double> out = ratio_pdf_grid(m.num, m.den, ts, quad_config(c, mellin_default_config()), acc, exec);
  if (m.r < 0) std::reverse(out.begin(), out.end());
  for (double& v : out) v *= std::abs(m.r);
  return out;
}

std::vector<double> eval_pdf(const RunConfig& c, const Problem& p, Engine e,
                             const std::vector<double>& xs) {
  const Exec exec = engine_exec(c);
  std::vector<double> out(xs.size());
  switch (e) {
    case Engine::Analytic: {
      const BivNormalParams b = *p.biv;
      parallel_for(xs.size(), exec, [&](std::size_t i) { out[i] = pdf_W_phamgia(b, xs[i]); });
      return out;
    }
    case Engine::Mellin:
      return mellin_pdf_grid(c, p, xs, exec);
    case Engine::BrodaKan:
      if (p.biv) return broda_kan_pdf_joint_grid(joint_of(p), xs, grid_config(c), exec);
      return broda_kan_pdf_indep_grid(p.num->cf, p.den->cf, xs, grid_config(c), exec);
    case Engine::GilPelaez: {
      const QuadratureConfig q = quad_config(c, gil_pelaez_default_config());
      parallel_for(xs.size(), exec, [&](std::size_t i) { out[i] = gil_pelaez_pdf(p.num->cf, xs[i], q); });
      return out;
    }
  }
  return out;
}

std::vector<double> eval_cdf(const RunConfig& c, const Problem& p, Engine e,
                             const std::vector<double>& xs, std::ostream& err) {
  const Exec exec = engine_exec(c);
  std::vector<CdfValue> vals(xs.size());
  switch (e) {
    case Engine::Analytic: {
      const BivNormalParams b = *p.biv;
      const QuadratureConfig q = quad_config(c, {});
      parallel_for(xs.size(), exec, [&](std::size_t i) {
        vals[i] = clamp_probability(
            cdf_by_quadrature([&](double w) { return pdf_W_phamgia(b, w); }, xs[i], q));
      });
      break;
    }
    case Engine::Mellin: {
      const QuadratureConfig q = quad_config(c, mellin_default_config());
      const MellinForm m = mellin_form(p);
      // The inner integral has to be tighter than the outer one.
      QuadratureConfig inner = q;
      inner.rel_tol = std::max(1e-2 * q.rel_tol, 1e-15);
      const RealFn pdf = [&m, &inner](double w) {
        return std::abs(m.r) * ratio_pdf(m.num, m.den, m.r * (w - m.s), inner);
      };
      parallel_for(xs.size(), exec, [&](std::size_t i) { vals[i] = clamp_probability(cdf_by_quadrature(pdf, xs[i], q)); });
      break;
    }
    case Engine::BrodaKan: {
      const JointCharFn j = joint_of(p);
      const Grid2DConfig g = grid_config(c);
      parallel_for(xs.size(), exec, [&](std::size_t i) { vals[i] = broda_kan_cdf(j, xs[i], g); });
      break;
    }
    case Engine::GilPelaez: {
      const QuadratureConfig q = quad_config(c, gil_pelaez_default_config());
      parallel_for(xs.size(), exec, [&](std::size_t i) { vals[i] = gil_pelaez_cdf(p.num->cf, xs[i], q); });
      break;
    }
  }
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out[i] = vals[i].value;
    if (vals[i].warning) {
      err << "warning: probability " << format_real(vals[i].raw) << " at x = " << format_real(xs[i])
          << " clamped to [0, 1]\n";
    }
  }
  return out;
}

// Writes to --output when given, else to `out`.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw IoError("cannot open " + c.output);
  f << text;
  if (!f.flush()) throw IoError("write failed for " + c.output);
}

std::string two_column_csv(const char* header, const std::vector<double>& xs,
                           const std::vector<double>& ys) {
  std::ostringstream os;
  os << header << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) os << format_real(xs[i]) << ',' << format_real(ys[i]) << '\n';
  return os.str();
}

void cmd_pdf_or_cdf(const RunConfig& c, bool cdf, std::ostream& out, std::ostream& err) {
  const Engine e = parse_engine(c.engine);
  const Problem p = build_problem(c);
  require_ratio(p, e);
  const Interval iv = resolve_interval(c, p, e);
  const std::vector<double> xs = linspace(iv.lo, iv.hi, c.n);
  if (cdf) {
    emit(c, out, two_column_csv("x,probability", xs, eval_cdf(c, p, e, xs, err)));
  } else {
    emit(c, out, two_column_csv("x,value", xs, eval_pdf(c, p, e, xs)));
  }
}

StdRatioParams std_params(const RunConfig& c) {
  const Problem p = build_problem(c);
  if (!c.std_ratio.empty()) {
    StdRatioParams s{c.std_ratio[0], c.std_ratio[1]};
    s.validate();
    return s;
  }
  if (!p.biv) throw DomainError("modality needs a normal ratio");
  return to_standard(*p.biv).params;
}

void cmd_modality(const RunConfig& c, std::ostream& out) {
  const StdRatioParams s = std_params(c);
  std::ostringstream os;
  os << "modality: " << to_string(classify_modality(s)) << '\n';
  os << "a: " << format_real(s.a) << '\n';
  os << "b: " << format_real(s.b) << '\n';
  if (s.a >= 1.0 && s.a < kModalityA0) {
    os << "b_star: " << format_real(modality_curve(s.a)) << '\n';
  } else {
    os << "b_star: none (a outside [1, " << format_real(kModalityA0) << "))\n";
  }
  emit(c, out, os.str());
}

void cmd_interval(const RunConfig& c, std::ostream& out) {
  const Engine e = parse_engine(c.engine);
  const Problem p = build_problem(c);
  require_ratio(p, e);
  RunConfig auto_cfg = c;
  auto_cfg.auto_interval = true;
  auto_cfg.interval.clear();
  const Interval iv = resolve_interval(auto_cfg, p, e);
  emit(c, out, "lo,hi\n" + format_real(iv.lo) + "," + format_real(iv.hi) + "\n");
}

void cmd_bench(const RunConfig& c, std::ostream& out) {
  std::vector<StdRatioParams> pairs;
  if (c.all_pairs) {
    pairs = {{2.0, 0.25}, {1.5, 1.0}, {4.0, 7.0}, {5.0, 25.0}};
  } else {
    if (c.std_ratio.empty()) throw DomainError("bench needs --std-ratio a b or --all-pairs");
    pairs = {{c.std_ratio[0], c.std_ratio[1]}};
  }
  ExperimentOptions opts;
  opts.n_points = c.n;
  opts.runs = c.runs;
  opts.reps = c.reps;
  const Exec exec = c.parallel ? Exec::Parallel : Exec::Serial;

  std::vector<BenchRecord> records;
  for (const StdRatioParams& p : pairs) {
    Interval iv;
    if (!c.interval.empty()) {
      iv = {c.interval[0], c.interval[1]};
    } else {
      iv = evaluation_interval(p, c.k.value_or(2.0));
    }
    if (c.sweep) {
      for (BenchRecord& r : table_sweep(p, iv, opts, c.with_broda_kan, c.parallel)) records.push_back(r);
      continue;
    }
    MethodSpec m;
    m.kind = parse_method_kind(c.method);
    m.rel_tol = c.rel_tol;
    m.cheb_nodes = c.cheb ? c.cheb : 257;
    m.grid_N = c.grid_n;
    m.exec = exec;
    ExperimentOptions base_opts = opts;
    const BenchRecord base = run_experiment(baseline_method(), p, iv, base_opts);
    opts.baseline_mean_s = base.runtime_mean_s;
    records.push_back(run_experiment(m, p, iv, opts));
    opts.baseline_mean_s.reset();
  }
  if (c.format == "json") {
    emit(c, out, to_json(records));
  } else if (c.format == "csv") {
    emit(c, out, to_csv(records));
  } else {
    throw DomainError("--format must be csv or json");
  }
}

// N(0,1)/chi2(5) and its reciprocal orientation, Mellin-DE next to Broda-Kan.
void cmd_demo(const RunConfig& c, std::ostream& out) {
  const Distribution z = normal_dist(0.0, 1.0);
  const Distribution q = chi_square_dist(5);
  const QuadratureConfig qc = quad_config(c, mellin_default_config());
  const Exec exec = engine_exec(c);
  struct Case {
    const char* name;
    const Distribution* num;
    const Distribution* den;
    Grid2DConfig grid;
  };
  const Case cases[] = {
      {"normal/chisq", &z, &q, grid_from_ranges(cf_decay_point(z.cf), 40.0, c.grid_n)},
      {"chisq/normal", &q, &z, grid_from_ranges(30.0, 100.0, std::max(c.grid_n, 750))},
  };
  std::ostringstream os;
  os << "orientation,x,mellin,broda_kan\n";
  for (const Case& cs : cases) {
    const Interval iv = six_sigma_interval(cs.num->cf, cs.den->cf, c.k.value_or(6.0));
    const std::vector<double> xs = linspace(iv.lo, iv.hi, c.n);
    const std::vector<double> m = ratio_pdf_grid(cs.num->density, cs.den->density, xs, qc,
                                                 Acceleration::direct(), exec);
    const std::vector<double> bk = broda_kan_pdf_indep_grid(cs.num->cf, cs.den->cf, xs, cs.grid, exec);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      os << cs.name << ',' << format_real(xs[i]) << ',' << format_real(m[i]) << ',' << format_real(bk[i]) << '\n';
    }
  }
  emit(c, out, os.str());
}

void cmd_sample(const RunConfig& c, std::ostream& out) {
  const Problem p = build_problem(c);
  if (!p.num || !p.den) throw DomainError("sample needs independent --num and --den (rho = 0)");
  const SampleSet s = mc_ratio_samples(p.num->sample, p.den->sample, c.n, c.seed, engine_exec(c));
  std::ostringstream os;
  os << "x\n";
  for (double v : s.values) os << format_real(v) << '\n';
  emit(c, out, os.str());
}

void add_model_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--std-ratio", c.std_ratio, "Standardized ratio means a b")->expected(2);
  sub->add_option("--biv", c.biv, "Correlated normal ratio mu1 mu2 sigma1 sigma2 rho")->expected(5);
  sub->add_option("--hake", c.hake, "Normalized gain mu_pre mu_post sd_pre sd_post rho* n")->expected(6);
  sub->add_option("--num", c.num, "Numerator law: normal MU SIGMA | chisq K | cauchy LOC SCALE | uniform LO HI")
      ->expected(1, 3);
  sub->add_option("--den", c.den, "Denominator law, same forms as --num")->expected(1, 3);
}

void add_eval_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--engine", c.engine, "analytic | mellin | broda-kan | gil-pelaez");
  sub->add_option("--interval", c.interval, "Evaluation interval lo hi")->expected(2);
  sub->add_flag("--auto-interval", c.auto_interval, "Choose the interval from moments");
  sub->add_option("--k", c.k, "Width multiplier for --auto-interval");
  sub->add_option("--n", c.n, "Number of grid points")->check(CLI::PositiveNumber);
  sub->add_option("--rel-tol", c.rel_tol, "DE relative tolerance");
  sub->add_option("--grid-n", c.grid_n, "Broda-Kan half-width N")->check(CLI::PositiveNumber);
  sub->add_option("--bk-range", c.bk_range, "Broda-Kan ranges T1 T2 instead of the automatic ones")->expected(2);
  sub->add_option("--decay-tol", c.decay_tol, "CF modulus defining the automatic Broda-Kan ranges");
  sub->add_option("--cheb", c.cheb, "Chebyshev nodes 2^k+1 for the mellin engine");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Densities and distribution functions of ratios of random variables"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output,-o", c.output, "Write results to this file");
  app.add_option("--threads", c.threads, "Cap on worker threads (1 = serial)");

  CLI::App* pdf = app.add_subcommand("pdf", "Density on a grid, CSV x,value");
  add_model_options(pdf, c);
  add_eval_options(pdf, c);
  CLI::App* cdf = app.add_subcommand("cdf", "Distribution function on a grid, CSV x,probability");
  add_model_options(cdf, c);
  add_eval_options(cdf, c);
  CLI::App* mod = app.add_subcommand("modality", "Unimodal or bimodal verdict for a normal ratio");
  add_model_options(mod, c);
  CLI::App* itv = app.add_subcommand("interval", "Automatic evaluation interval");
  add_model_options(itv, c);
  itv->add_option("--engine", c.engine, "Engine whose moment source is used");
  itv->add_option("--k", c.k, "Width multiplier");

  CLI::App* bench = app.add_subcommand("bench", "Accuracy and runtime protocol, CSV or JSON records");
  bench->add_option("--std-ratio", c.std_ratio, "Standardized ratio means a b")->expected(2);
  bench->add_flag("--all-pairs", c.all_pairs, "Run (2,0.25), (1.5,1), (4,7), (5,25)");
  bench->add_option("--method", c.method, "analytic | mellin-de | mellin-de-cheb | broda-kan");
  bench->add_flag("--sweep", c.sweep, "Tolerance sweep with Chebyshev rows");
  bench->add_flag("--with-broda-kan", c.with_broda_kan, "Add Broda-Kan rows to --sweep");
  bench->add_flag("--parallel", c.parallel, "Time the OpenMP kernels as well / instead");
  bench->add_option("--interval", c.interval, "Evaluation interval lo hi")->expected(2);
  bench->add_option("--k", c.k, "Width multiplier when no interval is given");
  bench->add_option("--n", c.n, "Grid points")->check(CLI::PositiveNumber);
  bench->add_option("--runs", c.runs, "Runs")->check(CLI::PositiveNumber);
  bench->add_option("--reps", c.reps, "Realizations per run (>= 10)");
  bench->add_option("--rel-tol", c.rel_tol, "DE relative tolerance");
  bench->add_option("--cheb", c.cheb, "Chebyshev nodes");
  bench->add_option("--grid-n", c.grid_n, "Broda-Kan N")->check(CLI::PositiveNumber);
  bench->add_option("--format", c.format, "csv | json");

  CLI::App* demo = app.add_subcommand("demo", "N(0,1)/chi2(5) both ways, Mellin-DE against Broda-Kan");
  demo->add_option("--n", c.n, "Grid points per orientation")->check(CLI::PositiveNumber);
  demo->add_option("--k", c.k, "Six-sigma multiplier");
  demo->add_option("--rel-tol", c.rel_tol, "DE relative tolerance");
  demo->add_option("--grid-n", c.grid_n, "Broda-Kan N")->check(CLI::PositiveNumber);

  CLI::App* sample = app.add_subcommand("sample", "Seeded Monte Carlo draws of X1/X2");
  add_model_options(sample, c);
  sample->add_option("--n", c.n, "Number of draws")->check(CLI::PositiveNumber);
  sample->add_option("--seed", c.seed, "Generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  if (demo->parsed() && demo->count("--n") == 0) c.n = 200;

  try {
    if (c.threads > 0) set_max_threads(c.threads);
    if (pdf->parsed()) cmd_pdf_or_cdf(c, false, out, err);
    else if (cdf->parsed()) cmd_pdf_or_cdf(c, true, out, err);
    else if (mod->parsed()) cmd_modality(c, out);
    else if (itv->parsed()) cmd_interval(c, out);
    else if (bench->parsed()) cmd_bench(c, out);
    else if (demo->parsed()) cmd_demo(c, out);
    else if (sample->parsed()) cmd_sample(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ratiodist
