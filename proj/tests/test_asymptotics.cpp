#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lue/asymptotics.hpp"
#include "lue/errors.hpp"
#include "lue/exactprob.hpp"
#include "lue/orthopoly.hpp"
#include "lue/quadrature.hpp"
#include "lue/specfun.hpp"

using namespace lue::asympt;

namespace {

double cubic(int n, double g, double a, double F) {
  const double c3 = 16.0 * n * n * a * (1 - a) + 8.0 * n * a * (1 + g) - g * g;
  const double c2 = -(16.0 * n * n * a * (1 + a) + 8.0 * n * a * (1 + g) - 3 * g * g);
  return ((c3 * F + c2) * F - 3 * g * g) * F + g * g;
}

double cubic_scale(int n, double g, double a, double F) {
  const double c3 = 16.0 * n * n * a * (1 - a) + 8.0 * n * a * (1 + g) + g * g;
  const double c2 = 16.0 * n * n * a * (1 + a) + 8.0 * n * a * (1 + g) + 3 * g * g;
  return ((c3 * F + c2) * F + 3 * g * g) * F + g * g;
}

double s_exact(int n, double g, double a) { return lue::orthopoly::build_monic_system(n, g, 4.0 * n * a).S(n); }

// five-point centered difference; the three-point stencil's h^2 error grows like n^2
double fd_lnp(int n, double g, double a, double h = 1e-3) {
  auto f = [&](double x) { return lue::exact::p_scaled({n, g}, x).log_value; };
  return (f(a - 2 * h) - 8 * f(a - h) + 8 * f(a + h) - f(a + 2 * h)) / (12 * h);
}

}  // namespace

TEST_CASE("cubic root") {
  for (int n : {3, 10, 100})
    for (double a : {0.1, 0.5, 0.9}) {
      const double root = cubic_root_f_tilde(n, 0.0, a);
      CHECK(root == doctest::Approx((2 * n * (1 + a) + 1) / (2 * n * (1 - a) + 1)).epsilon(1e-14));
    }
  // gamma = 1, alpha = 1/2: F = 3 - 4/n + O(1/n^2)
  const double e1 = std::abs(cubic_root_f_tilde(1000, 1.0, 0.5) - (3 - 4.0 / 1000));
  const double e2 = std::abs(cubic_root_f_tilde(2000, 1.0, 0.5) - (3 - 4.0 / 2000));
  CHECK(e1 <= 2e-5);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
  for (double g : {0.0, 0.5, 2.0})
    for (double a : {0.2, 0.5, 0.8}) {
      const double F = cubic_root_f_tilde(20, g, a);
      CHECK(std::abs(cubic(20, g, a, F)) <= 1e-12 * cubic_scale(20, g, a, F));
    }
  CHECK_THROWS_AS(cubic_root_f_tilde(10, 0.0, 1.0), lue::DomainError);
  CHECK_THROWS_AS(cubic_root_f_tilde(10, 0.0, 0.0), lue::DomainError);
}

TEST_CASE("cubic and series agree to O(1/n^2)") {
  for (double g : {0.0, 1.0, 2.0})
    for (double a : {0.2, 0.5, 0.8}) {
      auto d = [&](int n) {
        const auto e = fn_series(n, g, a);
        return std::abs(cubic_root_f_tilde(n, g, a) - (e.a0 + e.a1 / n));
      };
      const double d1 = d(100), d2 = d(200);
      if (d1 < 1e-13) continue;
      CHECK(d1 / d2 == doctest::Approx(4.0).epsilon(0.1));
    }
}

TEST_CASE("F_n series coefficients") {
  const auto e = fn_series(10, 0.0, 0.5);
  CHECK(e.a0 == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(e.a1 == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(e.a2 == doctest::Approx(0.6875 / 0.28125).epsilon(1e-14));
  CHECK(e.sum == doctest::Approx(3.0 - 0.2 + e.a2 / 100).epsilon(1e-15));
  for (double a : {0.1, 0.6, 0.95}) CHECK(fn_series(5, -1.0, a).a1 == 0.0);
  CHECK_THROWS_AS(fn_series(10, 0.0, 1.0), lue::DomainError);
}

TEST_CASE("F_n series against S_n(4 n alpha)") {
  const double g = 1.0, a = 0.4;
  const double e40 = std::abs(s_exact(40, g, a) - fn_series(40, g, a).sum);
  const double e80 = std::abs(s_exact(80, g, a) - fn_series(80, g, a).sum);
  CHECK(e40 / e80 == doctest::Approx(8.0).epsilon(0.25));
}

TEST_CASE("lemma expansion") {
  const auto r = dlnp_dalpha(10, 0.0, 0.5);
  CHECK(r.value == doctest::Approx(50.0 + 1.0 / 6).epsilon(1e-15));
  CHECK(r.remainder_order == "O(1/((1-alpha)^4 n^2))");
  CHECK_THROWS_AS(dlnp_dalpha(10, 0.0, 1.0), lue::DomainError);
  CHECK_THROWS_AS(dlnp_dalpha(10, 0.0, -0.1), lue::DomainError);
  // gamma = 0 reduces to (1-a)^2 n^2 / a + a / (4 (1 - a^2))
  for (double a : {0.2, 0.7})
    CHECK(dlnp_dalpha(30, 0.0, a).value ==
          doctest::Approx((1 - a) * (1 - a) * 900 / a + a / (4 * (1 - a * a))).epsilon(1e-15));
}

TEST_CASE("lemma against the exact derivative, n = 40 -> 80") {
  const double g = 1.0, a = 0.5;
  const double e40 = std::abs(dlnp_dalpha(40, g, a).value - fd_lnp(40, g, a));
  const double e80 = std::abs(dlnp_dalpha(80, g, a).value - fd_lnp(80, g, a));
  CHECK(e40 / e80 >= 2.5);
  CHECK(e40 / e80 <= 6.0);
}

TEST_CASE("Selberg constant") {
  CHECK(std::exp(selberg_log(2, 0.0)) == doctest::Approx(1.0 / 12).epsilon(1e-14));
  for (double g : {0.0, 0.5, 3.0}) CHECK(std::exp(selberg_log(1, g)) == doctest::Approx(1 / (g + 1)).epsilon(1e-13));
}

TEST_CASE("small-alpha formula") {
  CHECK(lnp_small_alpha(1, 0.0, 0.001) == doctest::Approx(std::log(0.004)).epsilon(1e-15));
  const double exact = std::log(-std::expm1(-0.004));
  CHECK(std::abs(lnp_small_alpha(1, 0.0, 0.001) - exact) <= 3e-3);
  // closes on the exact value as alpha -> 0 with O(alpha) error
  double prev = 1e300;
  for (double a : {1e-2, 1e-3, 1e-4}) {
    const double d = std::abs(lue::exact::p_scaled({3, 1.0}, a).log_value - lnp_small_alpha(3, 1.0, a));
    CHECK(d < prev / 5);
    prev = d;
  }
  // the same constant written as ln A_n - ln D^_n(inf)
  const double via_a = 12 * std::log(12 * 1e-3) + selberg_log(3, 1.0) - lue::exact::dn_infinity_log({3, 1.0});
  CHECK(lnp_small_alpha(3, 1.0, 1e-3) == doctest::Approx(via_a).epsilon(1e-13));
}

TEST_CASE("small-alpha expanded form approaches the Barnes form") {
  double prev = 1e300;
  for (int n : {4, 8, 16, 32}) {
    const double d = std::abs(lnp_small_alpha_expanded(n, 0.5, 0.1) - lnp_small_alpha(n, 0.5, 0.1));
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev <= 1e-3);
}

TEST_CASE("theorem expansion") {
  const double z = lue::specfun::zeta_prime_minus_one();
  for (int n : {10, 60})
    for (double a : {0.3, 0.6}) {
      const double closed = n * n * (1.5 + std::log(a) - 2 * a + a * a / 2) - std::log(static_cast<double>(n)) / 12 -
                            std::log(1 - a * a) / 8 + std::log(2.0) / 12 + z;
      CHECK(lnp_theorem(n, 0.0, a).value == doctest::Approx(closed).epsilon(1e-12));
    }
  const double d60 = std::abs(lnp_theorem(60, 0.0, 0.6).value - lue::exact::p_scaled({60, 0.0}, 0.6).log_value);
  const double d120 = std::abs(lnp_theorem(120, 0.0, 0.6).value - lue::exact::p_scaled({120, 0.0}, 0.6).log_value);
  CHECK(d120 < d60);
  CHECK_THROWS_AS(lnp_theorem(10, 0.0, 1.0), lue::DomainError);
}

TEST_CASE("theorem derivative reproduces the lemma") {
  for (double g : {0.0, 1.0, 2.5})
    for (double a : {0.3, 0.5, 0.8}) {
      const int n = 50;
      const double h = 1e-5;
      const double d = (lnp_theorem(n, g, a + h).value - lnp_theorem(n, g, a - h).value) / (2 * h);
      CHECK(d == doctest::Approx(dlnp_dalpha(n, g, a).value).epsilon(1e-8));
    }
}

TEST_CASE("Airy tail") {
  CHECK(airy_tail(10.0) == doctest::Approx(-83.757696).epsilon(1e-8));
  CHECK(airy_tail(1.0) == doctest::Approx(-0.2198734).epsilon(1e-6));
  CHECK(tracy_widom_constant() == doctest::Approx(-0.1365400).epsilon(1e-6));
  double prev = airy_tail(1.0);
  for (double s = 1.25; s <= 30; s += 0.25) {
    CHECK(airy_tail(s) < prev);
    prev = airy_tail(s);
  }
  CHECK_THROWS_AS(airy_tail(0.0), lue::DomainError);
}

TEST_CASE("soft edge substitution") {
  CHECK(soft_edge_alpha(4, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(soft_edge_alpha(500, 1.0) == doctest::Approx(0.99).epsilon(1e-14));
  CHECK_THROWS_AS(soft_edge_alpha(1, 2.0), lue::DomainError);
  CHECK_THROWS_AS(soft_edge_alpha(10, 0.0), lue::DomainError);
}

TEST_CASE("level density") {
  CHECK(level_density(5, 10.0) == doctest::Approx(1 / (2 * std::numbers::pi)).epsilon(1e-15));
  CHECK(level_density(5, 20.0) == 0.0);
  CHECK(level_density(5, 25.0) == 0.0);
  CHECK(level_density(5, -1.0) == 0.0);
  // x = 2n (1 + y) puts the endpoint behaviour into the Jacobi weight
  const int n = 7;
  const auto r = lue::quad::gauss_jacobi(20, 0.5, -0.5);
  double s = 0;
  for (std::size_t i = 0; i < r->size(); ++i) {
    const double x = 2.0 * n * (1 + r->nodes[i]);
    const double y = r->nodes[i];
    s += r->weights[i] * 2.0 * n * level_density(n, x) / std::sqrt((1 - y) / (1 + y));
  }
  CHECK(s == doctest::Approx(n).epsilon(1e-8));
}
