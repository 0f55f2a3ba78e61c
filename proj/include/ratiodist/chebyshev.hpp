#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ratiodist/parallel.hpp"
#include "ratiodist/types.hpp"

namespace ratiodist {

/// Polynomial interpolant through Chebyshev-Lobatto points, evaluated with the
/// second (true) barycentric formula. Immutable once built.
class ChebInterpolant {
 public:
  /// Samples f at n_nodes = 2^k + 1 (k >= 2) points x_j = mid + half cos(j pi/(n-1)),
  /// j = 0..n-1, so nodes run from interval.hi down to interval.lo.
  /// Node evaluations run in parallel under Exec::Parallel.
  static ChebInterpolant build(const RealFn& f, Interval interval, std::size_t n_nodes,
                               Exec exec = Exec::Serial);

  /// Throws DomainError outside the interval. Returns the stored value when x
  /// coincides with a node.
  double operator()(double x) const;

  std::vector<double> eval(std::span<const double> xs, Exec exec = Exec::Serial) const;

  Interval interval() const { return interval_; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> values() const { return values_; }
  std::span<const double> weights() const { return weights_; }

 private:
  ChebInterpolant() = default;
  Interval interval_{};
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> weights_;
};

/// True when n = 2^k + 1 for some k >= 2.
bool is_cheb_size(std::size_t n);

}  // namespace ratiodist
