#include "lue/exactprob.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "lue/detail/mp.hpp"
#include "lue/errors.hpp"
#include "lue/orthopoly.hpp"
#include "lue/quadrature.hpp"
#include "lue/specfun.hpp"

namespace lue::exact {

namespace {

std::size_t default_nodes(int n, double t) {
  return static_cast<std::size_t>(4 * n + 50) + static_cast<std::size_t>(std::ceil(4.0 * std::sqrt(t)));
}

void check_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("t must be positive and finite");
}

}  // namespace

void validate(const EnsembleParams& params) {
  if (params.n < 1) throw DomainError("n must be at least 1, got " + std::to_string(params.n));
  if (!(params.gamma > -1.0)) throw DomainError("gamma must exceed -1, got " + std::to_string(params.gamma));
}

double LogProb::probability() const { return std::exp(log_value); }

double dn_infinity_log(const EnsembleParams& params) {
  validate(params);
  const double n = params.n;
  const double g = params.gamma;
  return specfun::barnes_ln_g(n + 1.0) + specfun::barnes_ln_g(n + g + 1.0) - specfun::barnes_ln_g(g + 1.0);
}

double dn_infinity_scaled_log(const EnsembleParams& params) {
  const double n = params.n;
  return dn_infinity_log(params) - n * (n + params.gamma) * std::log(4.0 * n);
}

double saturation_point(const EnsembleParams& params) {
  validate(params);
  const double n = params.n;
  // soft edge 4n + 2 gamma + 2 plus twelve edge-fluctuation widths 2^{4/3} n^{1/3}
  return 4.0 * n + 2.0 * params.gamma + 2.0 + 12.0 * std::cbrt(16.0 * n) + 10.0;
}

LogProb phat_projection(const EnsembleParams& params, double t, std::size_t node_count) {
  validate(params);
  check_t(t);
  const double t_eff = std::min(t, saturation_point(params));
  const auto sys = orthopoly::build_monic_system(params.n, params.gamma, t_eff,
                                                 node_count ? node_count : default_nodes(params.n, t_eff));
  double v = 0.0;
  for (int j = 0; j < params.n; ++j)
    v += sys.log_h(j) - boost::math::lgamma(j + 1.0) - boost::math::lgamma(j + params.gamma + 1.0);
  return {std::min(v, 0.0)};
}

std::vector<double> gram_matrix(const EnsembleParams& params, double t, std::size_t node_count) {
  validate(params);
  check_t(t);
  const int n = params.n;
  const std::size_t nodes = node_count ? node_count : default_nodes(n, t);
  const auto rule = quad::gauss_jacobi(nodes, 0.0, params.gamma);
  const auto mapped = quad::map_left_weighted(*rule, 0.0, t);
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> m(un * un, 0.0);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double x = mapped.x[k];
    const auto phi = orthopoly::laguerre_functions(n, params.gamma, x);
    // the rule already carries x^gamma
    const double w = mapped.w[k] * std::exp(-params.gamma * std::log(x));
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j <= i; ++j) m[i * un + j] += w * phi[i] * phi[j];
  }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < i; ++j) m[j * un + i] = m[i * un + j];
  return m;
}

LogProb phat_gram_direct(const EnsembleParams& params, double t, double min_pivot, std::size_t node_count) {
  auto m = gram_matrix(params, t, node_count);
  const auto n = static_cast<std::size_t>(params.n);
  double logdet = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double d = m[i * n + i];
    for (std::size_t k = 0; k < i; ++k) d -= m[i * n + k] * m[i * n + k];
    if (!(d > min_pivot * m[i * n + i]))
      throw ConditioningError("phat_gram_direct: Gram matrix lost positive definiteness at pivot " +
                              std::to_string(i) + " (t=" + std::to_string(t) + ")");
    const double l = std::sqrt(d);
    logdet += 2.0 * std::log(l);
    m[i * n + i] = l;
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = m[j * n + i];
      for (std::size_t k = 0; k < i; ++k) s -= m[j * n + k] * m[i * n + k];
      m[j * n + i] = s / l;
    }
  }
  return {std::min(logdet, 0.0)};
}

LogProb phat_hankel_oracle(const EnsembleParams& params, double t) {
  using detail::Extended;
  validate(params);
  check_t(t);
  if (params.n > 12) throw CapabilityError("phat_hankel_oracle: n must not exceed 12");
  const auto n = static_cast<std::size_t>(params.n);
  std::vector<Extended> mu(2 * n - 1);
  for (std::size_t k = 0; k < mu.size(); ++k)
    mu[k] = detail::lower_incomplete_gamma_series(Extended(params.gamma) + Extended(k + 1), Extended(t));
  std::vector<std::vector<Extended>> a(n, std::vector<Extended>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mu[i + j];

  // Gaussian elimination; the Hankel matrix is SPD so no pivoting is needed
  Extended logdet = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] <= 0) throw NumericalError("phat_hankel_oracle: nonpositive pivot, precision exhausted");
    logdet += log(a[i][i]);
    for (std::size_t r = i + 1; r < n; ++r) {
      const Extended f = a[r][i] / a[i][i];
      for (std::size_t c = i; c < n; ++c) a[r][c] -= f * a[i][c];
    }
  }
  return {std::min(static_cast<double>(logdet) - dn_infinity_log(params), 0.0)};
}

LogProb p_scaled(const EnsembleParams& params, double alpha) {
  validate(params);
  if (!(alpha > 0.0)) throw DomainError("p_scaled: alpha must be positive");
  return phat_projection(params, 4.0 * params.n * alpha);
}

SigmaValue sigma_exact(const EnsembleParams& params, double t, std::size_t node_count) {
  validate(params);
  check_t(t);
  const int n = params.n;
  const double g = params.gamma;
  const auto sys = orthopoly::build_monic_system(n, g, t, node_count ? node_count : default_nodes(n, t));

  // psi_j = E p_j with E = x^{g/2} e^{-x/2}; E'/E = e1, E''/E = e2
  std::vector<double> p, dp, ddp;
  sys.orthonormal(t, n, p, &dp, &ddp, 0.5 * g * std::log(t) - 0.5 * t);
  const double e1 = 0.5 * g / t - 0.5;
  const double e2 = e1 * e1 - 0.5 * g / (t * t);
  double G = 0.0, B = 0.0, C = 0.0, D = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double psi = p[j];
    const double psi1 = dp[j] + e1 * p[j];
    const double psi2 = ddp[j] + 2.0 * e1 * dp[j] + e2 * p[j];
    G += psi * psi;
    B += psi1 * psi;
    C += psi1 * psi1;
    D += psi2 * psi;
  }
  // g(t) = phi^T M^{-1} phi, M' = phi phi^T
  const double g1 = 2.0 * B - G * G;
  const double g2 = 2.0 * (D + C - B * G) - 2.0 * G * g1;
  return {t, t * G, G + t * g1, 2.0 * g1 + t * g2};
}

}  // namespace lue::exact
