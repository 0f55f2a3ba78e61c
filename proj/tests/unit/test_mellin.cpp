#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ratiodist/distributions.hpp"
#include "ratiodist/error.hpp"
#include "ratiodist/mellin.hpp"
#include "ratiodist/normal_ratio.hpp"
#include "ratiodist/oracle.hpp"

using namespace ratiodist;

namespace {
QuadratureConfig tol(double rel) {
  QuadratureConfig c = mellin_default_config();
  c.rel_tol = rel;
  return c;
}
}  // namespace

TEST_CASE("ratio of standard normals is Cauchy") {
  const Distribution z = normal_dist(0, 1);
  CHECK(std::abs(ratio_pdf(z.density, z.density, 0.0) - 1.0 / std::numbers::pi) <= 1e-10);
  for (double t : {-3.0, 0.5, 7.0}) {
    CHECK(ratio_pdf(z.density, z.density, t) ==
          doctest::Approx(1.0 / (std::numbers::pi * (1 + t * t))).epsilon(1e-10));
  }
}

TEST_CASE("ratio of normals equals the closed form") {
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  CHECK(std::abs(ratio_pdf(n1.density, n2.density, 0.0) - pdf_T({1.5, 1}, 0.0)) <= 1e-13);
  for (auto [a, b] : {std::pair{2.0, 0.25}, {1.5, 1.0}, {4.0, 7.0}, {5.0, 25.0}}) {
    const Distribution d1 = normal_dist(a, 1), d2 = normal_dist(b, 1);
    const double c = b > 0 ? a / b : 0.0;
    for (double t : linspace(c - 4, c + 4, 200)) {
      REQUIRE(std::abs(ratio_pdf(d1.density, d2.density, t) - pdf_T({a, b}, t)) <= 1e-12);
    }
  }
}

TEST_CASE("ratio density is scale free") {
  const Distribution a = normal_dist(1.5, 1), b = normal_dist(1, 1);
  const Distribution ca = normal_dist(4.5, 3), cb = normal_dist(3, 3);
  for (double t : linspace(-4, 6, 40)) {
    CHECK(ratio_pdf(ca.density, cb.density, t) == doctest::Approx(ratio_pdf(a.density, b.density, t)).epsilon(1e-9));
  }
}

TEST_CASE("supports restrict the integration domain") {
  // f2 must never be called at negative arguments.
  const Distribution z = normal_dist(0, 1);
  DensityFn chi = chi_square_dist(5).density;
  const RealFn raw = chi.f;
  chi.f = [raw](double x) {
    if (x < 0) throw std::logic_error("negative argument");
    return raw(x);
  };
  CHECK_NOTHROW(ratio_pdf(z.density, chi, 0.3));
  CHECK(ratio_pdf(chi, z.density, 0.0) == 0.0);
  CHECK(ratio_pdf(chi, z.density, -2.0) > 0.0);
}

TEST_CASE("product of uniforms is -log t") {
  const Distribution u = uniform_dist(0, 1);
  CHECK(std::abs(product_pdf(u.density, u.density, 0.5) - std::log(2.0)) <= 1e-10);
  CHECK(product_pdf(u.density, u.density, 1.5) == 0.0);
  CHECK(product_pdf(u.density, u.density, 0.1) == doctest::Approx(-std::log(0.1)).epsilon(1e-10));
}

TEST_CASE("product of standard normals is K0(|t|)/pi") {
  const Distribution z = normal_dist(0, 1);
  for (double t : {1.0, 0.3, -2.0}) {
    const double ref = std::cyl_bessel_k(0.0, std::abs(t)) / std::numbers::pi;
    CHECK(product_pdf(z.density, z.density, t) == doctest::Approx(ref).epsilon(1e-9));
  }
  CHECK(std::cyl_bessel_k(0.0, 1.0) / std::numbers::pi == doctest::Approx(0.134016).epsilon(1e-5));
  CHECK_THROWS_AS(product_pdf(z.density, z.density, 0.0), SingularityError);
}

TEST_CASE("product of narrow normals peaks near the product of means") {
  const Distribution a = normal_dist(2, 1e-6), b = normal_dist(3, 1e-6);
  const double at6 = product_pdf(a.density, b.density, 6.0);
  CHECK(at6 > 1e5);
  CHECK(product_pdf(a.density, b.density, 6.001) < 1e-6 * at6);
}

TEST_CASE("ratio of narrow normals peaks near the ratio of means") {
  const Distribution a = normal_dist(2, 1e-6), b = normal_dist(4, 1e-6);
  const double at = ratio_pdf(a.density, b.density, 0.5);
  // Near-normal with sd sqrt(1 + 1/4) * 1e-6 / 4.
  const double sd = std::sqrt(1.25) * 1e-6 / 4;
  CHECK(at == doctest::Approx(1 / (sd * std::sqrt(2 * std::numbers::pi))).epsilon(1e-6));
  CHECK(ratio_pdf(a.density, b.density, 0.5 + 20 * sd) < 1e-12 * at);
}

TEST_CASE("ratio density far out in t") {
  const StdRatioParams p{4.61245, 8};
  const Distribution a = normal_dist(p.a, 1), b = normal_dist(p.b, 1);
  for (double t : {1e-276, 1e-40, 1e-4, 3e3, 1e10, 1e131, -1e131, 1e200}) {
    const double ref = pdf_T(p, t);
    REQUIRE(std::abs(ratio_pdf(a.density, b.density, t) - ref) <= 1e-9 * ref);
  }
}

TEST_CASE("grid evaluation: direct and Chebyshev") {
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  const std::vector<double> grid = linspace(-5, 8, 1000);
  const std::vector<double> ref = reference_pdf_grid({1.5, 1}, grid);

  auto emax = [&](const std::vector<double>& v) {
    double m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i] - ref[i]));
    return m;
  };
  const std::vector<double> direct = ratio_pdf_grid(n1.density, n2.density, grid, tol(1e-15));
  CHECK(emax(direct) <= 1e-13);
  const std::vector<double> cheb =
      ratio_pdf_grid(n1.density, n2.density, grid, tol(1e-15), Acceleration::chebyshev(257));
  CHECK(emax(cheb) <= 1e-12);
  const std::vector<double> loose = ratio_pdf_grid(n1.density, n2.density, grid, tol(1e-3));
  CHECK(emax(loose) >= 1e-6);
  CHECK(emax(loose) <= 1e-3);
  const std::vector<double> par =
      ratio_pdf_grid(n1.density, n2.density, grid, tol(1e-10), Acceleration::direct(), Exec::Parallel);
  CHECK(par == ratio_pdf_grid(n1.density, n2.density, grid, tol(1e-10)));

  CHECK_THROWS_AS(ratio_pdf_grid(n1.density, n2.density, std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(ratio_pdf_grid(n1.density, n2.density, std::vector<double>{1, 0}), DomainError);
}

TEST_CASE("tolerance ordering") {
  const Distribution n1 = normal_dist(1.5, 1), n2 = normal_dist(1, 1);
  const std::vector<double> grid = linspace(-5, 8, 200);
  const std::vector<double> ref = reference_pdf_grid({1.5, 1}, grid);
  double prev = INFINITY;
  for (double eps : {1e-3, 1e-6, 1e-10, 1e-15}) {
    const std::vector<double> v = ratio_pdf_grid(n1.density, n2.density, grid, tol(eps));
    double m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i] - ref[i]));
    CHECK(m <= 10 * prev);
    CHECK(m >= -1e-14);
    prev = std::max(m, 1e-16);
  }
}
