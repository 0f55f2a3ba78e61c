#pragma once

// Independent checks: seeded Monte Carlo sampling of ratios, Kolmogorov-Smirnov
// distance, and closed-form reference values for the normal case.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ratiodist/distributions.hpp"
#include "ratiodist/normal_ratio.hpp"
#include "ratiodist/parallel.hpp"
#include "ratiodist/quadrature.hpp"
#include "ratiodist/types.hpp"

namespace ratiodist {

struct SampleSet {
  std::vector<double> values;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  /// Denominator draws rejected for |X2| < kDenominatorFloor.
  std::size_t redraws = 0;
};

inline constexpr double kDenominatorFloor = 1e-300;
inline constexpr std::size_t kSampleChunk = 65536;

/// n draws of X1/X2. Chunk c of kSampleChunk draws uses generators seeded by
/// substream_seed(seed, c, 0) for X1 and substream_seed(seed, c, 1) for X2,
/// so the values do not depend on exec or the thread count.
SampleSet mc_ratio_samples(const Sampler& num, const Sampler& den, std::size_t n,
                           std::uint64_t seed, Exec exec = Exec::Serial);

/// sup |F_n - F| by the sorted two-sided formula.
double ks_distance(const SampleSet& samples, const RealFn& cdf);
double ks_distance(std::span<const double> values, const RealFn& cdf);

std::vector<double> reference_pdf_grid(StdRatioParams p, std::span<const double> grid);

/// int_{-inf}^x pdf by exp-sinh quadrature over whichever side of x carries
/// less mass.
double cdf_by_quadrature(const RealFn& pdf, double x, const QuadratureConfig& cfg = {});

/// F_T(x) by exp-sinh quadrature of pdf_T over the shorter side of x.
double reference_cdf(StdRatioParams p, double x, const QuadratureConfig& cfg = {});

/// CDF of a density on the real line, tabulated at n points uniform in
/// u = atan(t) and interpolated by cubic Hermite pieces in u using the
/// density itself as the slope. Panel masses come from tanh-sinh.
class TabulatedCdf {
 public:
  static TabulatedCdf build(const RealFn& pdf, std::size_t n = 8193,
                            const QuadratureConfig& cfg = {});
  double operator()(double x) const;
  /// Total mass before normalization.
  double mass() const { return mass_; }

 private:
  TabulatedCdf() = default;
  std::vector<double> u_;
  std::vector<double> F_;
  std::vector<double> dF_;  // dF/du
  double mass_ = 1.0;
  double step_ = 0.0;
};

}  // namespace ratiodist
