// Serial reference loops against the OpenMP kernels on the standard
// benchmark grid, followed by the tolerance sweep.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "ratiodist/bench.hpp"
#include "ratiodist/parallel.hpp"

using namespace ratiodist;

int main(int argc, char** argv) {
  CLI::App app{"ratiodist kernel benchmark"};
  double a = 1.5, b = 1.0, lo = -5.0, hi = 8.0;
  std::size_t n = 1000;
  int runs = 3, reps = 10, threads = 0;
  bool with_bk = false;
  std::string json_path;
  app.add_option("--a", a);
  app.add_option("--b", b);
  app.add_option("--lo", lo);
  app.add_option("--hi", hi);
  app.add_option("--n", n);
  app.add_option("--runs", runs);
  app.add_option("--reps", reps);
  app.add_option("--threads", threads);
  app.add_flag("--with-broda-kan", with_bk, "Include the (slow) Broda-Kan kernel");
  app.add_option("--json", json_path, "Also write the records as JSON");
  CLI11_PARSE(app, argc, argv);
  if (threads > 0) set_max_threads(threads);

  const StdRatioParams p{a, b};
  const Interval iv{lo, hi};
  const std::vector<double> grid = linspace(lo, hi, n);

  std::vector<MethodSpec> kernels = {
      {MethodKind::Analytic, 0.0, 0, 0, Exec::Serial},
      {MethodKind::MellinDE, 1e-10, 0, 0, Exec::Serial},
      {MethodKind::MellinDECheb, 1e-15, 257, 0, Exec::Serial},
  };
  if (with_bk) kernels.push_back({MethodKind::BrodaKan, 0.0, 0, 500, Exec::Serial});

  std::printf("threads available: %d\n", max_threads());
  std::printf("%-36s %14s\n", "kernel", "max|par-ser|");
  for (MethodSpec m : kernels) {
    const std::vector<double> ser = evaluate_method(m, p, grid);
    m.exec = Exec::Parallel;
    const std::vector<double> par = evaluate_method(m, p, grid);
    std::printf("%-36s %14.3g\n", m.id().c_str(), eps_max(par, ser));
  }

  ExperimentOptions opts;
  opts.n_points = n;
  opts.runs = runs;
  opts.reps = reps;
  const std::vector<BenchRecord> records = table_sweep(p, iv, opts, with_bk, true);
  std::cout << '\n' << to_csv(records);
  if (!json_path.empty()) export_records(records, ExportFormat::JSON, json_path);
  return 0;
}
