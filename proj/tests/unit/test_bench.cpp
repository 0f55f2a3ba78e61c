#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ratiodist/bench.hpp"
#include "ratiodist/error.hpp"

using namespace ratiodist;

TEST_CASE("eps_max") {
  const std::vector<double> a{1, 2, 3}, b{1, 2.5, 2};
  CHECK(eps_max(a, b) == 1.0);
  CHECK(eps_max(a, a) == 0.0);
  CHECK_THROWS_AS(eps_max(a, std::vector<double>{1.0}), DomainError);
  CHECK_THROWS_AS(eps_max(std::vector<double>{}, std::vector<double>{}), DomainError);
}

TEST_CASE("method ids and parsing") {
  MethodSpec m;
  m.kind = MethodKind::MellinDE;
  m.rel_tol = 1e-15;
  CHECK(m.id() == "mellin-de_eps1e-15_serial");
  CHECK(parse_method_kind("broda-kan") == MethodKind::BrodaKan);
  CHECK(parse_method_kind("mellin-de-cheb") == MethodKind::MellinDECheb);
  CHECK_THROWS_AS(parse_method_kind("simpson"), DomainError);
  CHECK(baseline_method().rel_tol == 1e-3);
}

TEST_CASE("experiment record") {
  ExperimentOptions o;
  o.n_points = 50;
  o.runs = 2;
  o.reps = 10;
  const BenchRecord r = run_experiment(baseline_method(), {1.5, 1}, {-5, 8}, o);
  CHECK(r.n_points == 50);
  CHECK(r.runs == 2);
  CHECK(r.reps == 10);
  CHECK(r.lo == -5);
  CHECK(r.hi == 8);
  CHECK(r.runtime_mean_s > 0);
  CHECK(r.speedup == 1.0);
  CHECK(r.eps_max <= 1e-3);
  MethodSpec an;
  an.kind = MethodKind::Analytic;
  CHECK(run_experiment(an, {1.5, 1}, {-5, 8}, o).eps_max == 0.0);
  o.reps = 3;
  CHECK_THROWS_AS(run_experiment(an, {1.5, 1}, {-5, 8}, o), DomainError);
}

TEST_CASE("CSV and JSON export") {
  BenchRecord r;
  r.method_id = "mellin-de_eps1e-10_serial";
  r.a = 1.5;
  r.b = 1;
  r.n_points = 1000;
  r.lo = -5;
  r.hi = 8;
  r.runs = 3;
  r.reps = 10;
  r.runtime_mean_s = 0.1 + 1e-17;
  r.runtime_cv = 1.0 / 3.0;
  r.eps_max = 2.2e-16;
  r.speedup = 0.3;
  std::vector<BenchRecord> rs{r, r};
  rs[1].method_id = "broda-kan_N500_serial";
  rs[1].eps_max = std::nextafter(1e-3, 1.0);

  const std::string csv = to_csv(rs);
  std::istringstream is(csv);
  std::string line;
  int lines = 0;
  std::getline(is, line);
  CHECK(line.rfind("method_id,a,b,n_points,lo,hi,runs,reps,runtime_mean_s,runtime_cv,eps_max,speedup", 0) == 0);
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 2);

  const std::vector<BenchRecord> back = records_from_json(to_json(rs));
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(back[i].method_id == rs[i].method_id);
    CHECK(back[i].runtime_mean_s == rs[i].runtime_mean_s);
    CHECK(back[i].runtime_cv == rs[i].runtime_cv);
    CHECK(back[i].eps_max == rs[i].eps_max);
    CHECK(back[i].n_points == rs[i].n_points);
  }
  CHECK(format_real(0.1) == "0.10000000000000001");

  const std::filesystem::path dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "ratiodist_bench_test.csv").string();
  export_records(rs, ExportFormat::CSV, path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == csv);
  std::remove(path.c_str());
  CHECK_THROWS_AS(export_records(std::vector<BenchRecord>{}, ExportFormat::CSV, path), DomainError);
  CHECK_THROWS_AS(export_records(rs, ExportFormat::JSON, "/nonexistent-dir/x.json"), IoError);
}
