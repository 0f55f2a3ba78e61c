#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ratiodist/error.hpp"
#include "ratiodist/special.hpp"

namespace sp = ratiodist::special;

TEST_CASE("erf: trivial values") {
  CHECK(sp::erf(0.0) == 0.0);
  CHECK(std::abs(sp::erf(6.0) - 1.0) <= 1e-16);
  CHECK(sp::erf(-6.0) == -sp::erf(6.0));
}

TEST_CASE("erf at 1/sqrt(2) against the series") {
  const double x = 1.0 / std::sqrt(2.0);
  const double ref = static_cast<double>(oracle::erf_series(x));
  CHECK(ref == doctest::Approx(0.682689492137).epsilon(1e-12));
  CHECK(std::abs(sp::erf(x) - ref) <= 1e-15 * ref);
}

TEST_CASE("erf relative error <= 1e-15 on [-3, 3]") {
  double worst = 0.0;
  for (int i = -3000; i <= 3000; ++i) {
    const double x = i * 1e-3;
    if (x == 0.0) continue;
    const long double ref = oracle::erf_series(x);
    worst = std::max(worst, static_cast<double>(std::fabs((sp::erf(x) - ref) / ref)));
  }
  CHECK(worst <= 1e-15);
}

TEST_CASE("erfc tail against the continued fraction") {
  double worst = 0.0;
  for (double x = 2.0; x <= 26.0; x += 0.01) {
    const long double ref = oracle::erfc_cf(x);
    worst = std::max(worst, static_cast<double>(std::fabs((sp::erfc(x) - ref) / ref)));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("erf is odd bit-for-bit on random points") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-8.0, 8.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(gen);
    REQUIRE(sp::erf(-x) == -sp::erf(x));
  }
}

TEST_CASE("standard normal CDF") {
  CHECK(sp::std_normal_cdf(0.0) == 0.5);
  CHECK(sp::std_normal_cdf(1.7) + sp::std_normal_cdf(-1.7) == doctest::Approx(1.0).epsilon(1e-16));
  const double ref = static_cast<double>(0.5L * (1.0L + oracle::erf_series(1.0L / std::sqrt(2.0L))));
  CHECK(std::abs(sp::std_normal_cdf(1.0) - ref) <= 1e-15);
  CHECK(ref == doctest::Approx(0.841344746).epsilon(1e-9));

  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    double x1 = u(gen), x2 = u(gen);
    if (x1 > x2) std::swap(x1, x2);
    REQUIRE(sp::std_normal_cdf(x1) <= sp::std_normal_cdf(x2));
  }
}

TEST_CASE("lower normal tail keeps relative accuracy") {
  const double ref = static_cast<double>(0.5L * oracle::erfc_cf(10.0L / std::sqrt(2.0L)));
  CHECK(std::abs(sp::std_normal_cdf(-10.0) - ref) <= 1e-14 * ref);
}

TEST_CASE("kummer_1f1_half") {
  CHECK(sp::kummer_1f1_half(0.0) == 1.0);
  const double s = static_cast<double>(oracle::kummer_series(0.5L));
  CHECK(s == doctest::Approx(2.41068).epsilon(1e-5));
  CHECK(std::abs(sp::kummer_1f1_half(1.0) - s) <= 1e-14 * s);
  // q erf(q / sqrt 2) is even, so the signed closed form returns the same value.
  CHECK(std::abs(sp::kummer_1f1_half(-1.0) - s) <= 1e-14 * s);
}

TEST_CASE("kummer_1f1_half matches the series on [0, 8]") {
  double worst = 0.0;
  for (double q = 0.0; q <= 8.0; q += 0.01) {
    const long double ref = oracle::kummer_series(q * q / 2.0L);
    worst = std::max(worst, static_cast<double>(std::fabs((sp::kummer_1f1_half(q) - ref) / ref)));
  }
  CHECK(worst <= 1e-13);
}

TEST_CASE("kummer_1f1_half rejects overflow") {
  CHECK_NOTHROW(sp::kummer_1f1_half(std::sqrt(2.0 * 699.0)));
  CHECK_THROWS_AS(sp::kummer_1f1_half(40.0), ratiodist::OverflowError);
}
