#pragma once

// Densities of ratios and products of independent random variables from
// their densities, via the Mellin convolution integrals and DE quadrature.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ratiodist/parallel.hpp"
#include "ratiodist/quadrature.hpp"
#include "ratiodist/types.hpp"

namespace ratiodist {

/// Closed interval [lo, hi] outside of which a density vanishes; either end
/// may be infinite.
struct Support {
  double lo = -INFINITY;
  double hi = INFINITY;

  static Support real_line() { return {}; }
  static Support half_line(double alpha) { return {alpha, INFINITY}; }
  static Support finite(double alpha, double beta) { return {alpha, beta}; }

  bool contains(double x) const { return lo <= x && x <= hi; }
};

struct DensityFn {
  RealFn f;
  Support support;
  std::string label;
  /// Location and spread of the mass, NaN if unknown. The Mellin integrals
  /// are split at the matching abscissa when the peak there is narrow
  /// (width below kNarrowPeak * |center|) or far from unit scale (outside
  /// [1/kFarScale, kFarScale]).
  double center = NAN;
  double width = NAN;
};

inline constexpr double kNarrowPeak = 1e-2;
inline constexpr double kFarScale = 1e3;

/// Mellin-DE default: relative tolerance 1e-10.
QuadratureConfig mellin_default_config();

/// (f1 / f2)(t) = int f1(x t) f2(x) |x| dx, split at x = 0 into two half-line
/// integrals and clipped to the region allowed by both supports.
double ratio_pdf(const DensityFn& f1, const DensityFn& f2, double t,
                 const QuadratureConfig& cfg = mellin_default_config());

/// (f1 * f2)(t) = int f1(x) f2(t/x) / |x| dx. Throws SingularityError at
/// t = 0 when both supports contain 0.
double product_pdf(const DensityFn& f1, const DensityFn& f2, double t,
                   const QuadratureConfig& cfg = mellin_default_config());

struct Acceleration {
  enum class Kind { Direct, Chebyshev };
  Kind kind = Kind::Direct;
  std::size_t n_nodes = 0;

  static Acceleration direct() { return {}; }
  static Acceleration chebyshev(std::size_t n_nodes) { return {Kind::Chebyshev, n_nodes}; }
};

/// Ratio density on a sorted grid. Direct evaluates ratio_pdf at every point;
/// Chebyshev evaluates it at n_nodes Chebyshev-Lobatto points spanning
/// [grid.front(), grid.back()] and interpolates.
std::vector<double> ratio_pdf_grid(const DensityFn& f1, const DensityFn& f2,
                                   std::span<const double> grid,
                                   const QuadratureConfig& cfg = mellin_default_config(),
                                   Acceleration accel = Acceleration::direct(),
                                   Exec exec = Exec::Serial);

}  // namespace ratiodist
