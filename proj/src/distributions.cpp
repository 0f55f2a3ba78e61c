#include "ratiodist/distributions.hpp"

#include <cmath>
#include <numbers>

#include "ratiodist/error.hpp"
#include "ratiodist/special.hpp"

namespace ratiodist {

double normal_pdf(double x, double mu, double sigma) {
  return special::std_normal_pdf((x - mu) / sigma) / sigma;
}

double chi_square_pdf(double x, int k) {
  if (x < 0.0) return 0.0;
  if (x == 0.0) return k == 1 ? INFINITY : (k == 2 ? 0.5 : 0.0);
  const double hk = 0.5 * k;
  return std::exp((hk - 1.0) * std::log(x) - 0.5 * x - hk * std::numbers::ln2 - std::lgamma(hk));
}

Distribution normal_dist(double mu, double sigma) {
  if (!(sigma > 0.0)) throw DomainError("normal_dist: sigma must be > 0");
  Distribution d;
  d.cf = normal_cf(mu, sigma);
  d.label = d.cf.label;
  d.density = {[mu, sigma](double x) { return normal_pdf(x, mu, sigma); }, Support::real_line(), d.label, mu, sigma};
  d.sample = [mu, sigma](Xoshiro256& g) { return mu + sigma * g.normal(); };
  d.mean = mu;
  d.variance = sigma * sigma;
  return d;
}

Distribution chi_square_dist(int k) {
  if (k < 1) throw DomainError("chi_square_dist: k must be >= 1");
  Distribution d;
  d.cf = chi_square_cf(k);
  d.label = d.cf.label;
  d.density = {[k](double x) { return chi_square_pdf(x, k); }, Support::half_line(0.0), d.label, double(k), std::sqrt(2.0 * k)};
  d.sample = [k](Xoshiro256& g) {
    double s = 0.0;
    for (int i = 0; i < k; ++i) {
      const double z = g.normal();
      s += z * z;
    }
    return s;
  };
  d.mean = k;
  d.variance = 2.0 * k;
  return d;
}

Distribution cauchy_dist(double loc, double scale) {
  if (!(scale > 0.0)) throw DomainError("cauchy_dist: scale must be > 0");
  Distribution d;
  d.cf = cauchy_cf(loc, scale);
  d.label = d.cf.label;
  d.density = {[loc, scale](double x) {
                 const double z = (x - loc) / scale;
                 return 1.0 / (std::numbers::pi * scale * (1.0 + z * z));
               },
               Support::real_line(), d.label, loc, scale};
  d.sample = [loc, scale](Xoshiro256& g) {
    return loc + scale * std::tan(std::numbers::pi * (g.uniform() - 0.5));
  };
  d.mean = NAN;
  d.variance = NAN;
  return d;
}

Distribution uniform_dist(double lo, double hi) {
  if (!(lo < hi)) throw DomainError("uniform_dist: need lo < hi");
  Distribution d;
  d.cf = uniform_cf(lo, hi);
  d.label = d.cf.label;
  const double height = 1.0 / (hi - lo);
  d.density = {[lo, hi, height](double x) { return (x >= lo && x <= hi) ? height : 0.0; },
               Support::finite(lo, hi), d.label};
  d.sample = [lo, hi](Xoshiro256& g) { return lo + (hi - lo) * g.uniform(); };
  d.mean = 0.5 * (lo + hi);
  d.variance = (hi - lo) * (hi - lo) / 12.0;
  return d;
}

}  // namespace ratiodist
