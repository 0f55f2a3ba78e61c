#pragma once

// Built-in laws with density, characteristic function and sampler.

#include <functional>
#include <string>

#include "ratiodist/cf.hpp"
#include "ratiodist/mellin.hpp"
#include "ratiodist/random.hpp"

namespace ratiodist {

using Sampler = std::function<double(Xoshiro256&)>;

struct Distribution {
  std::string label;
  DensityFn density;
  CharFn cf;
  Sampler sample;
  /// NaN when the moment does not exist.
  double mean = 0.0;
  double variance = 0.0;
};

Distribution normal_dist(double mu, double sigma);
/// Sampled as a sum of k squared normals.
Distribution chi_square_dist(int k);
Distribution cauchy_dist(double loc = 0.0, double scale = 1.0);
Distribution uniform_dist(double lo, double hi);

double normal_pdf(double x, double mu, double sigma);
double chi_square_pdf(double x, int k);

}  // namespace ratiodist
