#include "ratiodist/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <initializer_list>
#include <optional>
#include <string>

#include "ratiodist/chebyshev.hpp"
#include "ratiodist/error.hpp"

namespace ratiodist {
namespace {

// {y > 0 : scale * y in [lo, hi]}, as a (possibly empty) interval.
Interval positive_preimage(double scale, Support s) {
  Interval out{0.0, INFINITY};
  if (scale == 0.0) {
    if (!s.contains(0.0)) out = {1.0, 0.0};
    return out;
  }
  double a = s.lo / scale;
  double b = s.hi / scale;
  if (scale < 0.0) std::swap(a, b);
  out.lo = std::max(out.lo, a);
  out.hi = std::min(out.hi, b);
  return out;
}

Interval intersect(Interval x, Interval y) { return {std::max(x.lo, y.lo), std::min(x.hi, y.hi)}; }

// Peak of the integrand at x = at, of extent spread.
struct Cut {
  double at;
  double spread;
};

// Peak of f(x * k) in x.
Cut cut_of(const DensityFn& f, double k) {
  return {f.center / k, f.width / std::abs(k)};
}

// Peak of f(k / x) in x, to first order.
Cut reciprocal_cut_of(const DensityFn& f, double k) {
  const double at = k / f.center;
  return {at, std::abs(at) * f.width / std::abs(f.center)};
}

// Sum of half-line integrals, each split at the peaks inside it. A
// piece that does not converge on its own is retried with an absolute floor
// of rel_tol times the pieces that did; deep tails of narrow peaks sit at the
// roundoff level of the integrand.
class PieceSum {
  static constexpr double kGeometricRatio = 4.0;

 public:
  explicit PieceSum(const QuadratureConfig& cfg) : cfg_(cfg) {}

  // int_{dom} g(y) dy over a subinterval of (0, inf).
  void add(const RealFn& g, Interval dom, std::initializer_list<Cut> cuts) {
    if (!(dom.lo < dom.hi)) return;
    // Once one peak forces a split, every peak inside dom becomes a breakpoint.
    std::vector<double> ends{dom.lo};
    bool split = false;
    for (Cut c : cuts) {
      if (!std::isfinite(c.at) || !(c.at > dom.lo && c.at < dom.hi)) continue;
      ends.push_back(c.at);
      const double at = std::abs(c.at);
      split = split || c.spread < kNarrowPeak * at || at > kFarScale || at < 1.0 / kFarScale;
    }
    if (!split) ends.resize(1);
    std::sort(ends.begin() + 1, ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    ends.push_back(dom.hi);
    for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
      if (split) {
        add_relative(g, ends[i], ends[i + 1]);
      } else {
        add_piece(g, std::isfinite(ends[i + 1]) ? DETransform::finite(ends[i], ends[i + 1])
                                                : DETransform::half_line(ends[i]));
      }
    }
  }

  // [lo, hi] in a variable relative to its ends, so that peaks at very
  // different scales are all resolved.
  void add_relative(const RealFn& g, double lo, double hi) {
    if (lo == 0.0) {
      // x = hi e^{-y}
      add_piece([g, hi](double y) {
        const double x = hi * std::exp(-y);
        return x > 0.0 ? g(x) * x : 0.0;
      }, DETransform::half_line(0.0));
    } else if (hi == INFINITY) {
      // x = lo e^{y}
      add_piece([g, lo](double y) {
        const double x = lo * std::exp(y);
        return std::isfinite(x) ? g(x) * x : 0.0;
      }, DETransform::half_line(0.0));
    } else if (hi > kGeometricRatio * lo) {
      // x = e^{v}
      add_piece([g](double v) { const double x = std::exp(v); return g(x) * x; },
                DETransform::finite(std::log(lo), std::log(hi)));
    } else {
      add_piece(g, DETransform::finite(lo, hi));
    }
  }

  void add_piece(const RealFn& g, const DETransform& tr) {
    try {
      sum_ += de_integrate(g, tr, cfg_).value;
    } catch (const ConvergenceError&) {
      deferred_.push_back({g, tr, std::current_exception()});
    }
  }

  double total() {
    if (deferred_.empty()) return sum_;
    if (sum_ == 0.0) std::rethrow_exception(deferred_.front().failure);
    QuadratureConfig floor_cfg = cfg_;
    floor_cfg.abs_floor = std::max(cfg_.abs_floor, cfg_.rel_tol * std::abs(sum_));
    double extra = 0.0;
    for (const Deferred& d : deferred_) extra += de_integrate(d.g, d.tr, floor_cfg).value;
    deferred_.clear();
    sum_ += extra;
    return sum_;
  }

 private:
  struct Deferred {
    RealFn g;
    DETransform tr;
    std::exception_ptr failure;
  };
  const QuadratureConfig& cfg_;
  double sum_ = 0.0;
  std::vector<Deferred> deferred_;
};

Support reflect(Support s) { return {-s.hi, -s.lo}; }

}  // namespace

QuadratureConfig mellin_default_config() {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-10;
  return cfg;
}

double ratio_pdf(const DensityFn& f1, const DensityFn& f2, double t, const QuadratureConfig& cfg) {
  PieceSum total(cfg);
  // x > 0: f1(x t) f2(x) x
  {
    const Interval dom = intersect(positive_preimage(t, f1.support),
                                   positive_preimage(1.0, f2.support));
    total.add([&](double x) { return f1.f(x * t) * f2.f(x) * x; }, dom,
                                {cut_of(f2, 1.0), cut_of(f1, t)});
  }
  // x = -y < 0: f1(-y t) f2(-y) y
  {
    const Interval dom = intersect(positive_preimage(-t, f1.support),
                                   positive_preimage(1.0, reflect(f2.support)));
    total.add([&](double y) { return f1.f(-y * t) * f2.f(-y) * y; }, dom,
                                {cut_of(f2, -1.0), cut_of(f1, -t)});
  }
  return total.total();
}

double product_pdf(const DensityFn& f1, const DensityFn& f2, double t,
                   const QuadratureConfig& cfg) {
  if (t == 0.0 && f1.support.contains(0.0) && f2.support.contains(0.0)) {
    throw SingularityError("product_pdf: density may diverge at t = 0 when both supports contain 0");
  }
  // {x > 0 : t/x in S} is the reciprocal of {y > 0 : t y in S}.
  auto reciprocal = [](Interval y) -> Interval {
    if (!(y.lo < y.hi)) return {1.0, 0.0};
    return {y.hi == INFINITY ? 0.0 : 1.0 / y.hi, y.lo == 0.0 ? INFINITY : 1.0 / y.lo};
  };
  PieceSum total(cfg);
  // x > 0: f1(x) f2(t/x) / x
  {
    const Interval dom = intersect(positive_preimage(1.0, f1.support),
                                   reciprocal(positive_preimage(t, f2.support)));
    total.add([&](double x) { return f1.f(x) * f2.f(t / x) / x; }, dom,
                                {cut_of(f1, 1.0), reciprocal_cut_of(f2, t)});
  }
  // x = -y < 0: f1(-y) f2(-t/y) / y
  {
    const Interval dom = intersect(positive_preimage(1.0, reflect(f1.support)),
                                   reciprocal(positive_preimage(-t, f2.support)));
    total.add([&](double y) { return f1.f(-y) * f2.f(-t / y) / y; }, dom,
                                {cut_of(f1, -1.0), reciprocal_cut_of(f2, -t)});
  }
  return total.total();
}

std::vector<double> ratio_pdf_grid(const DensityFn& f1, const DensityFn& f2,
                                   std::span<const double> grid, const QuadratureConfig& cfg,
                                   Acceleration accel, Exec exec) {
  if (grid.empty()) throw DomainError("ratio_pdf_grid: empty grid");
  if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("ratio_pdf_grid: grid must be sorted");

  if (accel.kind == Acceleration::Kind::Direct) {
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), exec, [&](std::size_t i) { out[i] = ratio_pdf(f1, f2, grid[i], cfg); });
    return out;
  }
  const Interval span{grid.front(), grid.back()};
  if (!(span.lo < span.hi)) {
    return std::vector<double>(grid.size(), ratio_pdf(f1, f2, span.lo, cfg));
  }
  const ChebInterpolant interp = ChebInterpolant::build(
      [&](double t) { return ratio_pdf(f1, f2, t, cfg); }, span, accel.n_nodes, exec);
  return interp.eval(grid, exec);
}

}  // namespace ratiodist
