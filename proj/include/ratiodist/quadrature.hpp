#pragma once

// Double-exponential (DE) quadrature: trapezoidal rule in u after x = Psi(u),
// with level doubling of the step h and reuse of all earlier nodes.

#include <cstddef>
#include <vector>

#include "ratiodist/types.hpp"

namespace ratiodist {

class DETransform {
 public:
  enum class Kind { Finite, HalfLine, RealLine };

  /// x = (beta - alpha)/2 tanh((pi/2) sinh u) + (beta + alpha)/2
  static DETransform finite(double alpha, double beta);
  /// x = alpha + exp((pi/2) sinh u)
  static DETransform half_line(double alpha = 0.0);
  /// x = sinh((pi/2) sinh u)
  static DETransform real_line();

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  struct Node {
    double x;  // abscissa Psi(u)
    double w;  // weight Psi'(u)
  };
  /// Abscissa and weight at u. Near the ends of a finite interval x is
  /// formed from the nearer endpoint so it keeps relative accuracy.
  Node node(double u) const;

 private:
  DETransform(Kind kind, double alpha, double beta) : kind_(kind), alpha_(alpha), beta_(beta) {}
  Kind kind_;
  double alpha_;
  double beta_;
};

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_floor = 1e-300;
  double initial_h = 1.0;
  int max_levels = 12;
  std::size_t max_nodes_per_side = 1'000'000;

  /// Throws DomainError unless rel_tol lies in [1e-15, 1e-1] and the other
  /// fields are positive.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_est = 0.0;
  std::size_t n_evals = 0;
  int levels = 0;  // refinements performed after level 0
  /// Cumulative evaluation count after each level; entry L covers levels 0..L.
  std::vector<std::size_t> evals_by_level;
  /// |I_L - I_{L-1}| for L = 1..levels.
  std::vector<double> diffs_by_level;
  /// Truncation threshold in force when the last level finished.
  double tail_threshold = 0.0;
};

/// Integrates f over the image of `transform`. Level L uses step
/// initial_h / 2^L; the sum stops when |I_L - I_{L-1}| <= rel_tol |I_L| +
/// abs_floor. On each side of u = 0 terms are added outward until three in a
/// row fall below max(1e-2 rel_tol |partial sum|, abs_floor), or the
/// transform leaves the double range.
///
/// Throws ConvergenceError when max_levels or max_nodes_per_side is
/// exhausted, NumericalError when f returns NaN or infinity.
QuadratureResult de_integrate(const RealFn& f, const DETransform& transform,
                              const QuadratureConfig& cfg = {});

}  // namespace ratiodist
