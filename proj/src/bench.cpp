#include "ratiodist/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ratiodist/cf.hpp"
#include "ratiodist/distributions.hpp"
#include "ratiodist/error.hpp"
#include "ratiodist/mellin.hpp"
#include "ratiodist/oracle.hpp"

namespace ratiodist {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const char* exec_name(Exec e) { return e == Exec::Serial ? "serial" : "parallel"; }

}  // namespace

double eps_max(std::span<const double> values, std::span<const double> reference) {
  if (values.size() != reference.size()) throw DomainError("eps_max: length mismatch");
  if (values.empty()) throw DomainError("eps_max: empty input");
  double m = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = std::abs(values[i] - reference[i]);
    if (std::isnan(d)) throw NumericalError("eps_max: NaN difference");
    m = std::max(m, d);
  }
  return m;
}

const char* to_string(MethodKind k) {
  switch (k) {
    case MethodKind::Analytic: return "analytic";
    case MethodKind::MellinDE: return "mellin-de";
    case MethodKind::MellinDECheb: return "mellin-de-cheb";
    case MethodKind::BrodaKan: return "broda-kan";
  }
  return "?";
}

MethodKind parse_method_kind(const std::string& name) {
  for (MethodKind k : {MethodKind::Analytic, MethodKind::MellinDE, MethodKind::MellinDECheb,
                       MethodKind::BrodaKan}) {
    if (name == to_string(k)) return k;
  }
  throw DomainError("unknown method: " + name);
}

std::string MethodSpec::id() const {
  std::ostringstream os;
  os << to_string(kind);
  switch (kind) {
    case MethodKind::Analytic: break;
    case MethodKind::MellinDE: os << "_eps" << rel_tol; break;
    case MethodKind::MellinDECheb: os << "_eps" << rel_tol << "_n" << cheb_nodes; break;
    case MethodKind::BrodaKan: os << "_N" << grid_N; break;
  }
  os << '_' << exec_name(exec);
  return os.str();
}

std::vector<double> evaluate_method(const MethodSpec& method, StdRatioParams p,
                                    std::span<const double> grid) {
  p.validate();
  switch (method.kind) {
    case MethodKind::Analytic: {
      std::vector<double> out(grid.size());
      parallel_for(grid.size(), method.exec, [&](std::size_t i) { out[i] = pdf_T(p, grid[i]); });
      return out;
    }
    case MethodKind::MellinDE:
    case MethodKind::MellinDECheb: {
      const Distribution d1 = normal_dist(p.a, 1.0);
      const Distribution d2 = normal_dist(p.b, 1.0);
      QuadratureConfig cfg = mellin_default_config();
      cfg.rel_tol = method.rel_tol;
      const Acceleration accel = method.kind == MethodKind::MellinDE
                                     ? Acceleration::direct()
                                     : Acceleration::chebyshev(method.cheb_nodes);
      return ratio_pdf_grid(d1.density, d2.density, grid, cfg, accel, method.exec);
    }
    case MethodKind::BrodaKan: {
      const CharFn c1 = normal_cf(p.a, 1.0);
      const CharFn c2 = normal_cf(p.b, 1.0);
      Grid2DConfig g;
      g.N = method.grid_N;
      return broda_kan_pdf_indep_grid(c1, c2, grid, g, method.exec);
    }
  }
  throw DomainError("evaluate_method: unknown method");
}

BenchRecord run_experiment(const MethodSpec& method, StdRatioParams p, Interval interval,
                           const ExperimentOptions& opts) {
  if (opts.n_points < 1) throw DomainError("run_experiment: n_points must be >= 1");
  if (opts.runs < 1) throw DomainError("run_experiment: runs must be >= 1");
  if (opts.reps < kMinReps) throw DomainError("run_experiment: reps must be >= 10");
  if (!(interval.lo < interval.hi)) throw DomainError("run_experiment: empty interval");

  const std::vector<double> grid = linspace(interval.lo, interval.hi, opts.n_points);
  const std::vector<double> reference = reference_pdf_grid(p, grid);

  BenchRecord rec;
  rec.method_id = method.id();
  rec.a = p.a;
  rec.b = p.b;
  rec.n_points = opts.n_points;
  rec.lo = interval.lo;
  rec.hi = interval.hi;
  rec.runs = opts.runs;
  rec.reps = opts.reps;
  rec.threads = method.exec == Exec::Parallel ? max_threads() : 1;

  auto start = Clock::now();
  std::vector<double> values = evaluate_method(method, p, grid);
  rec.setup_s = seconds_since(start);

  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(opts.runs * opts.reps));
  for (int r = 0; r < opts.runs; ++r) {
    for (int k = 0; k < opts.reps; ++k) {
      start = Clock::now();
      values = evaluate_method(method, p, grid);
      times.push_back(seconds_since(start));
    }
  }
  double mean = 0.0;
  for (double t : times) mean += t;
  mean /= static_cast<double>(times.size());
  double var = 0.0;
  for (double t : times) var += (t - mean) * (t - mean);
  var /= static_cast<double>(times.size() > 1 ? times.size() - 1 : 1);

  rec.runtime_mean_s = mean;
  rec.runtime_cv = mean > 0.0 ? std::sqrt(var) / mean : 0.0;
  rec.eps_max = eps_max(values, reference);
  rec.speedup = mean > 0.0 ? opts.baseline_mean_s.value_or(mean) / mean : 1.0;
  return rec;
}

MethodSpec baseline_method(Exec exec) {
  MethodSpec m;
  m.kind = MethodKind::MellinDE;
  m.rel_tol = 1e-3;
  m.exec = exec;
  return m;
}

std::vector<BenchRecord> table_sweep(StdRatioParams p, Interval interval,
                                     const ExperimentOptions& opts, bool include_broda_kan,
                                     bool include_parallel) {
  std::vector<MethodSpec> methods;
  std::vector<Exec> execs{Exec::Serial};
  if (include_parallel) execs.push_back(Exec::Parallel);
  for (Exec e : execs) {
    methods.push_back({MethodKind::Analytic, 0.0, 0, 0, e});
    for (double tol : {1e-3, 1e-10, 1e-15}) methods.push_back({MethodKind::MellinDE, tol, 0, 0, e});
    for (std::size_t n : {std::size_t{129}, std::size_t{257}}) {
      methods.push_back({MethodKind::MellinDECheb, 1e-15, n, 0, e});
    }
    if (include_broda_kan) methods.push_back({MethodKind::BrodaKan, 0.0, 0, 500, e});
  }

  ExperimentOptions base_opts = opts;
  base_opts.baseline_mean_s.reset();
  const BenchRecord baseline = run_experiment(baseline_method(), p, interval, base_opts);

  ExperimentOptions run_opts = opts;
  run_opts.baseline_mean_s = baseline.runtime_mean_s;
  std::vector<BenchRecord> out;
  for (const MethodSpec& m : methods) out.push_back(run_experiment(m, p, interval, run_opts));
  return out;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(std::span<const BenchRecord> records) {
  std::ostringstream os;
  os << "method_id,a,b,n_points,lo,hi,runs,reps,runtime_mean_s,runtime_cv,eps_max,speedup\n";
  for (const BenchRecord& r : records) {
    os << r.method_id << ',' << format_real(r.a) << ',' << format_real(r.b) << ',' << r.n_points
       << ',' << format_real(r.lo) << ',' << format_real(r.hi) << ',' << r.runs << ',' << r.reps
       << ',' << format_real(r.runtime_mean_s) << ',' << format_real(r.runtime_cv) << ','
       << format_real(r.eps_max) << ',' << format_real(r.speedup) << '\n';
  }
  return os.str();
}

std::string to_json(std::span<const BenchRecord> records) {
  // Reals go in as raw %.17g tokens so the text is round-trip exact.
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const BenchRecord& r = records[i];
    os << "  {\"method_id\": " << nlohmann::json(r.method_id).dump() << ", \"a\": " << format_real(r.a)
       << ", \"b\": " << format_real(r.b) << ", \"n_points\": " << r.n_points
       << ", \"lo\": " << format_real(r.lo) << ", \"hi\": " << format_real(r.hi)
       << ", \"runs\": " << r.runs << ", \"reps\": " << r.reps
       << ", \"runtime_mean_s\": " << format_real(r.runtime_mean_s)
       << ", \"runtime_cv\": " << format_real(r.runtime_cv)
       << ", \"eps_max\": " << format_real(r.eps_max) << ", \"speedup\": " << format_real(r.speedup)
       << ", \"threads\": " << r.threads << ", \"setup_s\": " << format_real(r.setup_s) << "}"
       << (i + 1 < records.size() ? ",\n" : "\n");
  }
  os << "]\n";
  return os.str();
}

std::vector<BenchRecord> records_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  std::vector<BenchRecord> out;
  for (const auto& j : doc) {
    BenchRecord r;
    r.method_id = j.at("method_id").get<std::string>();
    r.a = j.at("a").get<double>();
    r.b = j.at("b").get<double>();
    r.n_points = j.at("n_points").get<std::size_t>();
    r.lo = j.at("lo").get<double>();
    r.hi = j.at("hi").get<double>();
    r.runs = j.at("runs").get<int>();
    r.reps = j.at("reps").get<int>();
    r.runtime_mean_s = j.at("runtime_mean_s").get<double>();
    r.runtime_cv = j.at("runtime_cv").get<double>();
    r.eps_max = j.at("eps_max").get<double>();
    r.speedup = j.at("speedup").get<double>();
    r.threads = j.value("threads", 1);
    r.setup_s = j.value("setup_s", 0.0);
    out.push_back(r);
  }
  return out;
}

void export_records(std::span<const BenchRecord> records, ExportFormat format,
                    const std::string& path) {
  if (records.empty()) throw DomainError("export: no records");
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("export: cannot open " + path);
  f << (format == ExportFormat::CSV ? to_csv(records) : to_json(records));
  f.flush();
  if (!f) throw IoError("export: write failed for " + path);
}

}  // namespace ratiodist
