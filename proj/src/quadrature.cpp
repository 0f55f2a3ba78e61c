#include "ratiodist/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "ratiodist/error.hpp"
#include "ratiodist/summation.hpp"

namespace ratiodist {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTailFactor = 1e-2;
constexpr int kSmallRun = 3;

}  // namespace

DETransform DETransform::finite(double alpha, double beta) {
  if (!(alpha < beta) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw DomainError("DETransform::finite: need finite alpha < beta");
  }
  return {Kind::Finite, alpha, beta};
}

DETransform DETransform::half_line(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("DETransform::half_line: alpha must be finite");
  return {Kind::HalfLine, alpha, INFINITY};
}

DETransform DETransform::real_line() { return {Kind::RealLine, -INFINITY, INFINITY}; }

DETransform::Node DETransform::node(double u) const {
  const double v = kHalfPi * std::sinh(u);
  const double dv = kHalfPi * std::cosh(u);
  switch (kind_) {
    case Kind::Finite: {
      const double len = beta_ - alpha_;
      const double ch = std::cosh(v);
      const double w = 0.5 * len * dv / (ch * ch);
      const double x = u >= 0.0 ? beta_ - len / (1.0 + std::exp(2.0 * v))
                                : alpha_ + len / (1.0 + std::exp(-2.0 * v));
      return {x, w};
    }
    case Kind::HalfLine: {
      const double e = std::exp(v);
      return {alpha_ + e, e * dv};
    }
    case Kind::RealLine:
      return {std::sinh(v), std::cosh(v) * dv};
  }
  return {NAN, NAN};
}

void QuadratureConfig::validate() const {
  if (!(rel_tol >= 1e-15 && rel_tol <= 1e-1)) {
    throw DomainError("QuadratureConfig: rel_tol must lie in [1e-15, 1e-1]");
  }
  if (!(abs_floor >= 0.0)) throw DomainError("QuadratureConfig: abs_floor must be >= 0");
  if (!(initial_h > 0.0)) throw DomainError("QuadratureConfig: initial_h must be > 0");
  if (max_levels < 1) throw DomainError("QuadratureConfig: max_levels must be >= 1");
  if (max_nodes_per_side < 1) throw DomainError("QuadratureConfig: max_nodes_per_side must be >= 1");
}

namespace {

class Integrator {
 public:
  Integrator(const RealFn& f, const DETransform& tr, const QuadratureConfig& cfg)
      : f_(f), tr_(tr), cfg_(cfg) {}

  QuadratureResult run() {
    QuadratureResult res;
    double h = cfg_.initial_h;

    // Level 0: centre node, then march outward on both sides.
    if (auto t = term(0.0)) sum_.add(*t);
    for (Side& side : sides_) march(side, h, 1, 1, false);
    double previous = h * sum_.value();
    res.evals_by_level.push_back(n_evals_);

    for (int level = 1; level <= cfg_.max_levels; ++level) {
      h *= 0.5;
      for (Side& side : sides_) march(side, h, 1, 2, true);
      const double current = h * sum_.value();
      const double diff = std::abs(current - previous);
      res.evals_by_level.push_back(n_evals_);
      res.levels = level;
      res.value = current;
      res.err_est = diff;
      res.diffs_by_level.push_back(diff);
      res.n_evals = n_evals_;
      res.tail_threshold = h * threshold();
      if (diff <= cfg_.rel_tol * std::abs(current) + cfg_.abs_floor) return res;
      previous = current;
    }
    throw ConvergenceError("de_integrate: no convergence after " +
                           std::to_string(cfg_.max_levels) + " levels (last difference " +
                           std::to_string(res.err_est) + ", value " +
                           std::to_string(res.value) + ")");
  }

 private:
  struct Side {
    double sign;
    double extent = 0.0;  // largest |u| evaluated so far
    std::size_t count = 0;
  };

  double threshold() const {
    return std::max(kTailFactor * cfg_.rel_tol * std::abs(sum_.value()), cfg_.abs_floor);
  }

  // f(Psi(u)) Psi'(u), or nothing when u maps outside the representable domain.
  std::optional<double> term(double u) {
    const DETransform::Node nd = tr_.node(u);
    if (!std::isfinite(nd.x) || !std::isfinite(nd.w) || nd.w == 0.0) return std::nullopt;
    if (tr_.kind() != DETransform::Kind::RealLine) {
      if (nd.x <= tr_.alpha() || nd.x >= tr_.beta()) return std::nullopt;
    }
    const double fx = f_(nd.x);
    ++n_evals_;
    if (!std::isfinite(fx)) {
      throw NumericalError("de_integrate: integrand returned " + std::to_string(fx) +
                           " at x = " + std::to_string(nd.x));
    }
    return fx * nd.w;
  }

  // Nodes u = sign * (first + stride * j) * h. Nodes inside the extent already
  // reached are always taken when `keep_inside`; beyond it the tail rule applies.
  void march(Side& side, double h, int first, int stride, bool keep_inside) {
    int small_run = 0;
    for (long long k = first;; k += stride) {
      const double au = static_cast<double>(k) * h;
      const bool inside = keep_inside && au <= side.extent;
      const auto t = term(side.sign * au);
      if (!t) break;
      sum_.add(*t);
      if (++side.count > cfg_.max_nodes_per_side) {
        throw ConvergenceError("de_integrate: more than " +
                               std::to_string(cfg_.max_nodes_per_side) + " nodes on one side");
      }
      if (au > side.extent) side.extent = au;
      if (inside) continue;
      // Nothing found yet: keep looking until the transform runs out.
      const bool small = sum_.value() != 0.0 && std::abs(*t) <= threshold();
      small_run = small ? small_run + 1 : 0;
      if (small_run >= kSmallRun) break;
    }
  }

  const RealFn& f_;
  const DETransform& tr_;
  const QuadratureConfig& cfg_;
  CompensatedSum sum_;
  Side sides_[2] = {{1.0}, {-1.0}};
  std::size_t n_evals_ = 0;
};

}  // namespace

QuadratureResult de_integrate(const RealFn& f, const DETransform& transform,
                              const QuadratureConfig& cfg) {
  cfg.validate();
  return Integrator(f, transform, cfg).run();
}

}  // namespace ratiodist
