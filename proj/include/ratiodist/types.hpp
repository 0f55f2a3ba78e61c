#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ratiodist {

using RealFn = std::function<double(double)>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

/// `n` equally spaced points from `lo` to `hi`, both endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace ratiodist
