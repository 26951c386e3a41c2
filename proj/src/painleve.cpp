#include "lue/painleve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "lue/errors.hpp"
#include "lue/orthopoly.hpp"

namespace lue::painleve {

namespace {

void check_pole(double S, const char* who) {
  if (S == 0.0 || S == 1.0 || !std::isfinite(S)) throw DomainError(std::string(who) + ": S at a pole (0 or 1)");
}

double s_of_t(int n, double gamma, double t) { return orthopoly::build_monic_system(n, gamma, t, 0).S(n); }

using State2 = std::array<long double, 2>;

constexpr std::size_t kMaxSteps = 2000000;
// relative size of disc below which the two sigma'' roots are not told apart
constexpr long double kBranchGuard = 1e-10L;

}  // namespace

double pv_residual(const PainleveState& st, int n, double gamma) {
  check_pole(st.S, "pv_residual");
  if (!(st.t > 0.0)) throw DomainError("pv_residual: t must be positive");
  const double S = st.S;
  const double t = st.t;
  const double d1 = st.S_prime;
  return st.S_double_prime - (3 * S - 1) * d1 * d1 / (2 * S * (S - 1)) + d1 / t +
         gamma * gamma / 2 * (S - 1) * (S - 1) / (t * t * S) - (2.0 * n + 1 + gamma) * S / t +
         S * (S + 1) / (2 * (S - 1));
}

double fn_equation_residual(double alpha, double F, double Fp, double Fpp, int n, double gamma) {
  check_pole(F, "fn_equation_residual");
  if (!(alpha > 0.0)) throw DomainError("fn_equation_residual: alpha must be positive");
  const double nn = n;
  return Fpp - (3 * F - 1) * Fp * Fp / (2 * F * (F - 1)) + Fp / alpha - 4 * nn * (2 * nn + 1 + gamma) * F / alpha +
         gamma * gamma * (F - 1) * (F - 1) / (2 * alpha * alpha * F) + 8 * nn * nn * F * (F + 1) / (F - 1);
}

double sigma_form_residual(const SigmaState& st, int n, double gamma) {
  const double big_n = n * (n + gamma);
  const double m = 2.0 * n + gamma;
  const double a = st.t * st.sigma_double_prime;
  const double b = (m - st.t) * st.sigma_prime + st.sigma;
  return a * a - 4 * st.sigma_prime * st.sigma_prime * (st.sigma - big_n - st.t * st.sigma_prime) - b * b;
}

double sigma_from_s(double t, double S, double Sp, int n, double gamma) {
  check_pole(S, "sigma_from_s");
  const double s1 = S - 1;
  return -gamma * gamma / (4 * S) + t * (4.0 * n + 2 * gamma - t) / (4 * s1) - t * t / (4 * s1 * s1) +
         t * t * Sp * Sp / (4 * S * s1 * s1);
}

PainleveState s_state_numeric(int n, double gamma, double t) {
  if (!(t > 0.0)) throw DomainError("s_state_numeric: t must be positive");
  const double s0 = s_of_t(n, gamma, t);
  auto diffs = [&](double h) {
    const double fm2 = s_of_t(n, gamma, t - 2 * h);
    const double fm1 = s_of_t(n, gamma, t - h);
    const double fp1 = s_of_t(n, gamma, t + h);
    const double fp2 = s_of_t(n, gamma, t + 2 * h);
    const double d1 = (fm2 - 8 * fm1 + 8 * fp1 - fp2) / (12 * h);
    const double d2 = (-fm2 + 16 * fm1 - 30 * s0 + 16 * fp1 - fp2) / (12 * h * h);
    return std::array<double, 2>{d1, d2};
  };
  const double h = 1e-3 * t;
  const auto coarse = diffs(2 * h);
  const auto fine = diffs(h);
  // fourth-order stencils: Richardson factor 2^4
  const double d1 = fine[0] + (fine[0] - coarse[0]) / 15;
  const double d2 = fine[1] + (fine[1] - coarse[1]) / 15;
  return {t, s0, d1, d2};
}

SigmaPath integrate_sigma_form(int n, double gamma, double t0, double t1, double sigma0, double sigma0_prime,
                               int branch, const std::vector<double>& grid, double tolerance) {
  if (!(t0 > 0.0)) throw DomainError("integrate_sigma_form: t0 must be positive");
  const double big_n = n * (n + gamma);
  const double m = 2.0 * n + gamma;
  const double b = (m - t0) * sigma0_prime + sigma0;
  const double disc = 4 * sigma0_prime * sigma0_prime * (sigma0 - big_n - t0 * sigma0_prime) + b * b;
  const double scale = 4 * sigma0_prime * sigma0_prime * std::abs(sigma0 - big_n - t0 * sigma0_prime) + b * b;
  if (disc < -1e-10 * scale) throw IntegrationError("integrate_sigma_form: negative discriminant at t0", t0);
  const double root = std::sqrt(std::max(disc, 0.0)) / t0;
  return integrate_sigma_form(n, gamma, SigmaState{t0, sigma0, sigma0_prime, branch >= 0 ? root : -root}, t1, grid,
                              tolerance);
}

SigmaPath integrate_sigma_form(int n, double gamma, const SigmaState& init, double t1,
                               const std::vector<double>& grid, double tolerance) {
  namespace ode = boost::numeric::odeint;
  const double t0 = init.t;
  if (!(t0 > 0.0) || !(t1 > 0.0)) throw DomainError("integrate_sigma_form: t0 and t1 must be positive");
  const double lo = std::min(t0, t1);
  const double hi = std::max(t0, t1);
  for (double g : grid)
    if (g < lo || g > hi) throw DomainError("integrate_sigma_form: grid point outside [t0, t1]");

  const long double big_n = static_cast<long double>(n) * (n + gamma);
  const long double m = 2.0L * n + gamma;
  const int branch = init.sigma_double_prime >= 0 ? 1 : -1;

  SigmaPath path;
  path.initial_branch = branch;
  path.min_discriminant_ratio = 1.0;
  path.samples.resize(grid.size());
  path.steps = 0;

  // disc = (t s'')^2 on the solution; its ratio to the sum of the magnitudes
  // of its two parts measures how close the branches are to merging
  auto discriminant = [&](long double t, long double s, long double s1, long double& ratio) {
    const long double a = 4 * s1 * s1 * (s - big_n - t * s1);
    const long double b = (m - t) * s1 + s;
    const long double d = a + b * b;
    const long double scale = std::abs(a) + b * b;
    ratio = scale > 0 ? d / scale : 1;
    return d;
  };
  double fail_at = 0.0;
  bool failed = false;
  auto rhs = [&](const State2& y, State2& dy, long double t) {
    long double ratio;
    const long double d = discriminant(t, y[0], y[1], ratio);
    if (ratio < -kBranchGuard && !failed) {
      failed = true;
      fail_at = static_cast<double>(t);
    }
    dy[0] = y[1];
    dy[1] = branch * std::sqrt(std::max(d, 0.0L)) / t;
  };

  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  const bool forward = t1 >= t0;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return forward ? grid[a] < grid[b] : grid[a] > grid[b];
  });

  auto stepper = ode::make_dense_output(static_cast<long double>(tolerance), static_cast<long double>(tolerance),
                                        ode::runge_kutta_dopri5<State2, long double>());
  State2 y{init.sigma, init.sigma_prime};
  const long double end = t1;
  stepper.initialize(y, static_cast<long double>(t0), (forward ? 1 : -1) * 1e-3L * std::max(1.0, t0));

  std::size_t next = 0;
  auto emit = [&](long double t, const State2& st) {
    long double ratio;
    const long double d = discriminant(t, st[0], st[1], ratio);
    const long double s2 = branch * std::sqrt(std::max(d, 0.0L)) / t;
    path.samples[order[next]] = SigmaState{static_cast<double>(t), static_cast<double>(st[0]),
                                           static_cast<double>(st[1]), static_cast<double>(s2)};
    ++next;
  };
  while (next < order.size() && grid[order[next]] == t0) emit(t0, y);

  while (forward ? stepper.current_time() < end : stepper.current_time() > end) {
    const long double remaining = end - stepper.current_time();
    if (std::abs(stepper.current_time_step()) > std::abs(remaining))
      stepper.initialize(stepper.current_state(), stepper.current_time(), remaining);
    stepper.do_step(rhs);
    ++path.steps;
    const long double now = stepper.current_time();
    if (failed) throw IntegrationError("integrate_sigma_form: discriminant went negative", fail_at);
    if (path.steps > kMaxSteps) throw IntegrationError("integrate_sigma_form: step budget exhausted", static_cast<double>(now));
    const State2& cur = stepper.current_state();
    if (!std::isfinite(static_cast<double>(cur[0])) || !std::isfinite(static_cast<double>(cur[1])))
      throw IntegrationError("integrate_sigma_form: solution blew up", static_cast<double>(now));
    long double ratio;
    discriminant(now, cur[0], cur[1], ratio);
    path.min_discriminant_ratio = std::min(path.min_discriminant_ratio, static_cast<double>(ratio));
    if (ratio < kBranchGuard)
      throw IntegrationError("integrate_sigma_form: branches merge (t sigma'' near 0)", static_cast<double>(now));
    while (next < order.size()) {
      const long double g = grid[order[next]];
      if (forward ? g > now : g < now) break;
      State2 at;
      stepper.calc_state(g, at);
      emit(g, at);
    }
  }
  return path;
}

}  // namespace lue::painleve
