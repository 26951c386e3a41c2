#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "lue/errors.hpp"
#include "lue/exactprob.hpp"
#include "lue/mcsample.hpp"

using namespace lue::mc;

TEST_CASE("n = 1 draws are Gamma(gamma+1)") {
  const SamplerConfig cfg{{1, 0.0}, 40000, 7};
  const auto x = draw_largest(cfg, 2);
  REQUIRE(x.size() == 40000);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / x.size();
  CHECK(std::abs(mean - 1.0) <= 3.0 / std::sqrt(40000.0));

  SamplerConfig scaled = cfg;
  scaled.scaling = Scaling::scaled;
  const auto ecdf = sample_largest(scaled, 2);
  const double p = 1 - std::exp(-1.0);
  CHECK(std::abs(ecdf(0.25) - p) <= 3 * std::sqrt(p * (1 - p) / 40000.0));
}

TEST_CASE("KS distance against the exact CDF") {
  const lue::exact::EnsembleParams params{10, 0.5};
  const std::size_t N = 20000;
  const auto ecdf = sample_largest({params, N, 2024}, 4);
  const auto grid = quantile_grid(ecdf, 400);
  const double d = ks_distance(ecdf, [&](double t) { return lue::exact::phat_projection(params, t).probability(); }, grid);
  CHECK(d <= 1.63 / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("KS distance of a sample against its own CDF is zero") {
  const EmpiricalCDF e({3.0, 1.0, 2.0, 2.0});
  CHECK(e.size() == 4);
  CHECK(e(2.0) == 0.75);
  CHECK(e.left_limit(2.0) == 0.25);
  CHECK(ks_distance(e, [&](double x) { return e(x); }, {0.5, 1.0, 2.0, 3.0}) == 0.0);
  CHECK_THROWS_AS(ks_distance(e, [](double) { return 0.0; }, {}), lue::DomainError);
  CHECK_THROWS_AS(ks_distance(e, [](double) { return 0.0; }, {2.0, 1.0}), lue::DomainError);
}

TEST_CASE("seeded output is independent of the thread count") {
  const SamplerConfig cfg{{6, 1.5}, 3000, 99};
  const auto a = draw_largest(cfg, 1);
  const auto b = draw_largest(cfg, 4);
  CHECK(a == b);
  CHECK(draw_largest({{6, 1.5}, 3000, 100}, 1) != a);
}

TEST_CASE("scaled and unscaled samples differ by 4n") {
  SamplerConfig cfg{{5, 0.0}, 500, 3};
  const auto u = draw_largest(cfg);
  cfg.scaling = Scaling::scaled;
  const auto s = draw_largest(cfg);
  for (std::size_t i = 0; i < u.size(); ++i) CHECK(s[i] == doctest::Approx(u[i] / 20.0).epsilon(1e-15));
}

TEST_CASE("scaled largest eigenvalue concentrates near 1") {
  for (int n : {20, 40}) {
    const auto e = sample_largest({{n, 0.0}, 20000, 11, Scaling::scaled}, 4);
    const double q = e.quantile(0.999);
    CHECK(q > 0.9);
    CHECK(q < 1.25);
  }
}

TEST_CASE("sample dump") {
  const SamplerConfig cfg{{3, 0.5}, 4, 42};
  std::ostringstream os;
  write_samples_csv(os, cfg, draw_largest(cfg));
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line.rfind("# ", 0) == 0);
  CHECK(line.find("seed=42") != std::string::npos);
  CHECK(line.find("n=3") != std::string::npos);
  std::getline(is, line);
  CHECK(line == "lambda_max");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 4);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(draw_largest({{0, 0.0}, 10, 1}), lue::DomainError);
  CHECK_THROWS_AS(draw_largest({{3, -1.5}, 10, 1}), lue::DomainError);
}
