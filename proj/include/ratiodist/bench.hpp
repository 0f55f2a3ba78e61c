#pragma once

// Accuracy/runtime protocol: repeated full-grid evaluations per method,
// runtime mean and coefficient of variation, maximum absolute error against
// the closed form, and speedup over a baseline.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratiodist/normal_ratio.hpp"
#include "ratiodist/parallel.hpp"
#include "ratiodist/types.hpp"

namespace ratiodist {

struct BenchRecord {
  std::string method_id;
  double a = 0.0;
  double b = 0.0;
  std::size_t n_points = 0;
  double lo = 0.0;
  double hi = 0.0;
  int runs = 0;
  int reps = 0;
  double runtime_mean_s = 0.0;
  double runtime_cv = 0.0;
  double eps_max = 0.0;
  double speedup = 1.0;
  int threads = 1;
  /// Wall time of the warm-up realization, not part of the statistics.
  double setup_s = 0.0;
};

inline constexpr int kMinReps = 10;

/// max_i |values[i] - reference[i]|. Throws DomainError on a length
/// mismatch or empty input.
double eps_max(std::span<const double> values, std::span<const double> reference);

enum class MethodKind { Analytic, MellinDE, MellinDECheb, BrodaKan };

struct MethodSpec {
  MethodKind kind = MethodKind::MellinDE;
  double rel_tol = 1e-10;          // Mellin engines
  std::size_t cheb_nodes = 257;    // MellinDECheb
  int grid_N = 500;                // BrodaKan
  Exec exec = Exec::Serial;

  /// e.g. "mellin-de_eps1e-15_serial".
  std::string id() const;
};

/// Parses "analytic", "mellin-de", "mellin-de-cheb", "broda-kan".
MethodKind parse_method_kind(const std::string& name);
const char* to_string(MethodKind k);

/// Evaluates the density of T = (a + V1)/(b + V2) on `grid` with `method`.
std::vector<double> evaluate_method(const MethodSpec& method, StdRatioParams p,
                                    std::span<const double> grid);

struct ExperimentOptions {
  std::size_t n_points = 1000;
  int runs = 3;
  int reps = 10;
  /// Mean runtime of the baseline; speedup = baseline / runtime_mean.
  /// Unset means the record is its own baseline.
  std::optional<double> baseline_mean_s;
};

/// One warm-up realization, then runs x reps timed realizations on a uniform
/// grid over `interval`. Throws on any method failure; no partial record.
BenchRecord run_experiment(const MethodSpec& method, StdRatioParams p, Interval interval,
                           const ExperimentOptions& opts = {});

/// Default speedup baseline: Direct Mellin-DE at rel_tol 1e-3.
MethodSpec baseline_method(Exec exec = Exec::Serial);

/// Tolerance sweep and Chebyshev rows for one (a, b), plus Broda-Kan when
/// requested, all relative to baseline_method().
std::vector<BenchRecord> table_sweep(StdRatioParams p, Interval interval,
                                     const ExperimentOptions& opts, bool include_broda_kan,
                                     bool include_parallel);

enum class ExportFormat { CSV, JSON };

std::string to_csv(std::span<const BenchRecord> records);
std::string to_json(std::span<const BenchRecord> records);
std::vector<BenchRecord> records_from_json(const std::string& text);

/// Writes records to `path`. Throws DomainError on empty input, IoError
/// when the file cannot be written.
void export_records(std::span<const BenchRecord> records, ExportFormat format,
                    const std::string& path);

/// %.17g.
std::string format_real(double x);

}  // namespace ratiodist
