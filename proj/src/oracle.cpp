#include "ratiodist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ratiodist/error.hpp"
#include "ratiodist/summation.hpp"

namespace ratiodist {

SampleSet mc_ratio_samples(const Sampler& num, const Sampler& den, std::size_t n,
                           std::uint64_t seed, Exec exec) {
  if (n < 1) throw DomainError("mc_ratio_samples: n must be >= 1");
  SampleSet out;
  out.values.resize(n);
  out.seed = seed;
  out.n = n;
  const std::size_t chunks = (n + kSampleChunk - 1) / kSampleChunk;
  std::vector<std::size_t> redraws(chunks, 0);
  parallel_for(chunks, exec, [&](std::size_t c) {
    Xoshiro256 g1(substream_seed(seed, c, 0));
    Xoshiro256 g2(substream_seed(seed, c, 1));
    const std::size_t end = std::min(n, (c + 1) * kSampleChunk);
    for (std::size_t i = c * kSampleChunk; i < end; ++i) {
      const double x1 = num(g1);
      double x2 = den(g2);
      while (std::abs(x2) < kDenominatorFloor) {
        ++redraws[c];
        x2 = den(g2);
      }
      out.values[i] = x1 / x2;
    }
  });
  for (std::size_t r : redraws) out.redraws += r;
  return out;
}

double ks_distance(std::span<const double> values, const RealFn& cdf) {
  if (values.empty()) throw DomainError("ks_distance: empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double F = cdf(sorted[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - F, F - static_cast<double>(i) / n});
  }
  return d;
}

double ks_distance(const SampleSet& samples, const RealFn& cdf) { return ks_distance(samples.values, cdf); }

std::vector<double> reference_pdf_grid(StdRatioParams p, std::span<const double> grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = pdf_T(p, grid[i]);
  return out;
}

double cdf_by_quadrature(const RealFn& pdf, double x, const QuadratureConfig& cfg) {
  const double lower = de_integrate([&](double y) { return pdf(x - y); },
                                    DETransform::half_line(0.0), cfg).value;
  if (lower <= 0.5) return lower;
  const double upper = de_integrate([&](double y) { return pdf(x + y); },
                                    DETransform::half_line(0.0), cfg).value;
  return 1.0 - upper;
}

double reference_cdf(StdRatioParams p, double x, const QuadratureConfig& cfg) {
  p.validate();
  return cdf_by_quadrature([p](double t) { return pdf_T(p, t); }, x, cfg);
}

TabulatedCdf TabulatedCdf::build(const RealFn& pdf, std::size_t n, const QuadratureConfig& cfg) {
  if (n < 3) throw DomainError("TabulatedCdf: need at least 3 points");
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  TabulatedCdf out;
  out.step_ = 2.0 * kHalfPi / static_cast<double>(n - 1);
  out.u_.resize(n);
  out.F_.resize(n);
  out.dF_.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.u_[j] = -kHalfPi + out.step_ * static_cast<double>(j);
  out.u_.back() = kHalfPi;

  // Slope in u is pdf(t)(1 + t^2); at the ends take its limit from far out.
  auto slope = [&](double u) {
    const double t = std::tan(std::clamp(u, -kHalfPi + 1e-9, kHalfPi - 1e-9));
    return pdf(t) * (1.0 + t * t);
  };
  CompensatedSum acc;
  out.F_[0] = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.dF_[j] = slope(out.u_[j]);
  for (std::size_t j = 1; j < n; ++j) {
    // Integrate in u so the infinite end panels stay finite.
    const double mass = de_integrate(slope, DETransform::finite(out.u_[j - 1], out.u_[j]), cfg).value;
    acc.add(mass);
    out.F_[j] = acc.value();
  }
  out.mass_ = out.F_.back();
  if (!(out.mass_ > 0.0)) throw NumericalError("TabulatedCdf: density has no mass");
  for (std::size_t j = 0; j < n; ++j) {
    out.F_[j] /= out.mass_;
    out.dF_[j] /= out.mass_;
  }
  return out;
}

double TabulatedCdf::operator()(double x) const {
  if (std::isnan(x)) throw DomainError("TabulatedCdf: NaN argument");
  const double u = std::atan(x);
  const double pos = (u - u_.front()) / step_;
  const auto j = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(u_.size() - 2)));
  const double h = u_[j + 1] - u_[j];
  const double s = (u - u_[j]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  const double v = h00 * F_[j] + h10 * h * dF_[j] + h01 * F_[j + 1] + h11 * h * dF_[j + 1];
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace ratiodist
