#include "lue/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lue/errors.hpp"
#include "lue/specfun.hpp"

namespace lue::asympt {

namespace {

void check_alpha_open(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0, 1)");
}

void check_n(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be at least 1");
}

}  // namespace

double cubic_root_f_tilde(int n, double gamma, double alpha) {
  check_n(n, "cubic_root_f_tilde");
  check_alpha_open(alpha, "cubic_root_f_tilde");
  const double nn = n;
  const double g2 = gamma * gamma;
  const double c3 = 16 * nn * nn * alpha * (1 - alpha) + 8 * nn * alpha * (1 + gamma) - g2;
  const double c2 = -(16 * nn * nn * alpha * (1 + alpha) + 8 * nn * alpha * (1 + gamma) - 3 * g2);
  const double c1 = -3 * g2;
  const double c0 = g2;
  if (c3 == 0.0) throw DomainError("cubic_root_f_tilde: degenerate leading coefficient");
  auto f = [&](double x) { return ((c3 * x + c2) * x + c1) * x + c0; };
  auto df = [&](double x) { return (3 * c3 * x + 2 * c2) * x + c1; };

  const double a0 = (1 + alpha) / (1 - alpha);
  double lo = 1.0, hi = 4.0 * a0;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw NumericalError("cubic_root_f_tilde: cubic not sign-changing on [1, 4(1+a)/(1-a)]");

  // safeguarded Newton: fall back to bisection when the step leaves the bracket
  double x = a0;
  for (int it = 0; it < 200; ++it) {
    const double fx = f(x);
    if (fx == 0.0) return x;
    if ((fx > 0) == (flo > 0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = df(x);
    double next = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::abs(x)) return next;
    x = next;
    if (hi - lo <= 1e-16 * x) return x;
  }
  return x;
}

FnExpansion fn_series(int n, double gamma, double alpha) {
  check_n(n, "fn_series");
  check_alpha_open(alpha, "fn_series");
  const double a = alpha;
  const double om = 1 - a;
  const double op = 1 + a;
  FnExpansion e{alpha, n, gamma, 0, 0, 0, 0};
  e.a0 = op / om;
  e.a1 = -a * (1 + gamma) / (om * om);
  e.a2 = (a + a * a - a * a * a * a + 2 * a * om * op * op * gamma + a * om * (1 + 3 * a) * gamma * gamma) /
         (2 * om * om * om * om * op * op);
  const double nn = n;
  e.sum = e.a0 + e.a1 / nn + e.a2 / (nn * nn);
  return e;
}

ExpansionReport dlnp_dalpha(int n, double gamma, double alpha) {
  check_n(n, "dlnp_dalpha");
  if (!(alpha > 0.0)) throw DomainError("dlnp_dalpha: alpha must be positive");
  if (alpha >= 1.0) throw DomainError("dlnp_dalpha: alpha must be below the soft edge 1");
  const double a = alpha;
  const double nn = n;
  const double g = gamma;
  const double om = 1 - a;
  const double oma2 = 1 - a * a;
  const double v = om * om / a * nn * nn + g * om / a * nn + (a + 2 * g * g * om) / (4 * oma2) -
                   g * (a + g * g * om * om) / (4 * nn * oma2 * oma2);
  return {v, "O(1/((1-alpha)^4 n^2))", n, gamma, alpha};
}

double selberg_log(int n, double gamma) {
  check_n(n, "selberg_log");
  const double nn = n;
  using specfun::barnes_ln_g;
  return 2 * barnes_ln_g(nn + 1) + 2 * barnes_ln_g(nn + gamma + 1) - barnes_ln_g(gamma + 1) -
         barnes_ln_g(2 * nn + gamma + 1);
}

double lnp_small_alpha(int n, double gamma, double alpha) {
  check_n(n, "lnp_small_alpha");
  if (!(alpha > 0.0)) throw DomainError("lnp_small_alpha: alpha must be positive");
  if (!(gamma > -1.0)) throw DomainError("lnp_small_alpha: gamma must exceed -1");
  const double nn = n;
  using specfun::barnes_ln_g;
  return nn * (nn + gamma) * std::log(4 * nn * alpha) + barnes_ln_g(nn + 1) + barnes_ln_g(nn + gamma + 1) -
         barnes_ln_g(2 * nn + gamma + 1);
}

double lnp_small_alpha_expanded(int n, double gamma, double alpha) {
  check_n(n, "lnp_small_alpha_expanded");
  if (!(alpha > 0.0)) throw DomainError("lnp_small_alpha_expanded: alpha must be positive");
  const double nn = n;
  const double g = gamma;
  const double np = nn + g;
  const double tn = 2 * nn + g;
  return (1.5 * nn * nn + nn * g - 1.0 / 12) * std::log(nn) + (np * np / 2 - 1.0 / 12) * std::log(np) -
         (tn * tn / 2 - 1.0 / 12) * std::log(tn) + nn * np * (1.5 + std::log(4 * alpha)) +
         specfun::zeta_prime_minus_one();
}

ExpansionReport lnp_theorem(int n, double gamma, double alpha) {
  check_n(n, "lnp_theorem");
  if (!(alpha > 0.0)) throw DomainError("lnp_theorem: alpha must be positive");
  if (alpha >= 1.0) throw DomainError("lnp_theorem: alpha must be below the soft edge 1");
  const double a = alpha;
  const double nn = n;
  const double g = gamma;
  const double l4a = std::log(4 * a);
  const double np = nn + g;
  const double tn = 2 * nn + g;
  double v = nn * nn * (1.5 - 2 * a + a * a / 2 + l4a) + nn * g * (1.5 - a + l4a);
  v += (1.5 * nn * nn + nn * g - 1.0 / 12) * std::log(nn);
  v += (np * np / 2 - 1.0 / 12) * std::log(np);
  v -= (tn * tn / 2 - 1.0 / 12) * std::log(tn);
  v += ((4 * g * g - 1) * std::log1p(a) - std::log1p(-a)) / 8;
  v += specfun::zeta_prime_minus_one();
  v += g * (2 * (1 - a) * g * g - 1) / (8 * nn * (1 - a * a));
  return {v, "O(1/(n^2 (1-alpha)^3)) + delta_n(gamma) = O(1/n)", n, gamma, alpha};
}

double tracy_widom_constant() { return std::log(2.0) / 24 + specfun::zeta_prime_minus_one(); }

double airy_tail(double s) {
  if (!(s > 0.0)) throw DomainError("airy_tail: s must be positive");
  return -s * s * s / 12 - std::log(s) / 8 + tracy_widom_constant();
}

double soft_edge_alpha(int n, double s) {
  check_n(n, "soft_edge_alpha");
  if (!(s > 0.0)) throw DomainError("soft_edge_alpha: s must be positive");
  const double a = 1.0 - s / std::pow(2.0 * n, 2.0 / 3.0);
  if (!(a > 0.0)) throw DomainError("soft_edge_alpha: s too large for this n (alpha <= 0)");
  return a;
}

double level_density(int n, double x) {
  check_n(n, "level_density");
  const double edge = 4.0 * n;
  if (!(x > 0.0) || x >= edge) return 0.0;
  return std::sqrt((edge - x) / x) / (2 * std::numbers::pi);
}

}  // namespace lue::asympt
