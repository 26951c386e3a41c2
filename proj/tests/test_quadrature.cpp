#include <doctest.h>

#include <cmath>

#include "lue/quadrature.hpp"
#include "lue/specfun.hpp"

using namespace lue::quad;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto r = gauss_legendre(12);
  for (int k = 0; k <= 23; ++k) {
    double s = 0;
    for (std::size_t i = 0; i < r->size(); ++i) s += r->weights[i] * std::pow(r->nodes[i], k);
    const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
    CHECK(std::abs(s - exact) <= 1e-14);
  }
}

TEST_CASE("Gauss-Jacobi moments") {
  // int_{-1}^{1} (1+y)^b y^k dy against a Beta-function expression for k = 0, 1
  for (double b : {-0.5, 0.0, 0.5, 2.5}) {
    const auto r = gauss_jacobi(30, 0.0, b);
    double m0 = 0, m1 = 0;
    for (std::size_t i = 0; i < r->size(); ++i) {
      m0 += r->weights[i];
      m1 += r->weights[i] * r->nodes[i];
    }
    const double mu0 = std::pow(2.0, b + 1) / (b + 1);
    CHECK(m0 == doctest::Approx(mu0).epsilon(1e-13));
    // int (1+y)^{b+1} - (1+y)^b = 2^{b+2}/(b+2) - mu0
    CHECK(m1 == doctest::Approx(std::pow(2.0, b + 2) / (b + 2) - mu0).epsilon(1e-12));
  }
}

TEST_CASE("rules are cached and shared") {
  const auto a = gauss_jacobi(17, 0.0, 1.25);
  const auto b = gauss_jacobi(17, 0.0, 1.25);
  CHECK(a.get() == b.get());
}

TEST_CASE("mapped rule reproduces an incomplete gamma") {
  const double g = 0.5, t = 3.0;
  const auto m = map_left_weighted(*gauss_jacobi(40, 0.0, g), 0.0, t);
  double s = 0;
  for (std::size_t i = 0; i < m.x.size(); ++i) s += m.w[i] * std::exp(-m.x[i]);
  CHECK(s == doctest::Approx(lue::specfun::lower_incomplete_gamma(g + 1, t)).epsilon(1e-14));
}
