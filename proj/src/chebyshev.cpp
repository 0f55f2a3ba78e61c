#include "ratiodist/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ratiodist/error.hpp"

namespace ratiodist {

bool is_cheb_size(std::size_t n) {
  if (n < 5) return false;
  const std::size_t m = n - 1;
  return (m & (m - 1)) == 0;
}

ChebInterpolant ChebInterpolant::build(const RealFn& f, Interval interval, std::size_t n_nodes,
                                       Exec exec) {
  if (!is_cheb_size(n_nodes)) {
    throw DomainError("ChebInterpolant: node count must be 2^k + 1 with k >= 2, got " +
                      std::to_string(n_nodes));
  }
  if (!(interval.lo < interval.hi) || !std::isfinite(interval.lo) || !std::isfinite(interval.hi)) {
    throw DomainError("ChebInterpolant: need a finite interval with lo < hi");
  }
  ChebInterpolant ci;
  ci.interval_ = interval;
  ci.nodes_.resize(n_nodes);
  ci.values_.resize(n_nodes);
  ci.weights_.resize(n_nodes);

  const std::size_t m = n_nodes - 1;
  const double mid = interval.mid();
  const double half = 0.5 * interval.width();
  for (std::size_t j = 0; j <= m; ++j) {
    // cos(j pi/m) written as a sine of a centred angle: symmetric and exact at the middle.
    const double c = std::sin(std::numbers::pi * (static_cast<double>(m) - 2.0 * j) / (2.0 * m));
    ci.nodes_[j] = mid + half * c;
    ci.weights_[j] = (j % 2 == 0 ? 1.0 : -1.0) * ((j == 0 || j == m) ? 0.5 : 1.0);
  }
  ci.nodes_.front() = interval.hi;
  ci.nodes_.back() = interval.lo;

  parallel_for(n_nodes, exec, [&](std::size_t j) {
    const double v = f(ci.nodes_[j]);
    if (std::isnan(v)) {
      throw NumericalError("ChebInterpolant: NaN at node " + std::to_string(ci.nodes_[j]));
    }
    ci.values_[j] = v;
  });
  return ci;
}

double ChebInterpolant::operator()(double x) const {
  if (!(x >= interval_.lo && x <= interval_.hi)) {
    throw DomainError("ChebInterpolant: x = " + std::to_string(x) + " outside [" +
                      std::to_string(interval_.lo) + ", " + std::to_string(interval_.hi) + "]");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double d = x - nodes_[j];
    if (d == 0.0) return values_[j];
    const double c = weights_[j] / d;
    num += c * values_[j];
    den += c;
  }
  return num / den;
}

std::vector<double> ChebInterpolant::eval(std::span<const double> xs, Exec exec) const {
  std::vector<double> out(xs.size());
  parallel_for(xs.size(), exec, [&](std::size_t i) { out[i] = (*this)(xs[i]); });
  return out;
}

}  // namespace ratiodist
