#include "lue/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "lue/detail/mp.hpp"
#include "lue/errors.hpp"
#include "lue/quadrature.hpp"
#include "lue/specfun.hpp"

namespace lue::orthopoly {

namespace {

void check_gamma(double gamma) {
  if (!(gamma > -1.0)) throw DomainError("Laguerre exponent must exceed -1, got " + std::to_string(gamma));
}

double phi0(double gamma, double x) {
  const double norm = -0.5 * boost::math::lgamma(gamma + 1.0);
  if (x == 0.0) {
    if (gamma == 0.0) return std::exp(norm);
    if (gamma > 0.0) return 0.0;
    throw DomainError("Laguerre function is singular at x = 0 for gamma < 0");
  }
  return std::exp(0.5 * gamma * std::log(x) - 0.5 * x + norm);
}

}  // namespace

double laguerre_eval(int j, double gamma, double x) {
  check_gamma(gamma);
  if (j < 0) throw DomainError("laguerre_eval: negative degree");
  if (j == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + gamma - x;
  for (int k = 1; k < j; ++k) {
    const double next = ((2.0 * k + gamma + 1.0 - x) * cur - (k + gamma) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_functions(int count, double gamma, double x) {
  check_gamma(gamma);
  if (!(x >= 0.0)) throw DomainError("laguerre_functions: x must be nonnegative");
  std::vector<double> phi(static_cast<std::size_t>(std::max(count, 0)));
  if (count <= 0) return phi;
  phi[0] = phi0(gamma, x);
  for (int j = 0; j + 1 < count; ++j) {
    const double prev = j > 0 ? phi[static_cast<std::size_t>(j - 1)] : 0.0;
    phi[static_cast<std::size_t>(j + 1)] =
        ((2.0 * j + gamma + 1.0 - x) * phi[static_cast<std::size_t>(j)] - std::sqrt(j * (j + gamma)) * prev) /
        std::sqrt((j + 1.0) * (j + 1.0 + gamma));
  }
  return phi;
}

void laguerre_functions_with_derivative(int count, double gamma, double x, std::vector<double>& phi,
                                        std::vector<double>& dphi) {
  if (!(x > 0.0)) throw DomainError("laguerre_functions_with_derivative: x must be positive");
  phi = laguerre_functions(count, gamma, x);
  dphi.assign(phi.size(), 0.0);
  // x phi_j' = (gamma/2 - x/2 + j) phi_j - sqrt(j (j+gamma)) phi_{j-1}
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const double jj = static_cast<double>(j);
    const double prev = j > 0 ? phi[j - 1] : 0.0;
    dphi[j] = ((0.5 * gamma - 0.5 * x + jj) * phi[j] - std::sqrt(jj * (jj + gamma)) * prev) / x;
  }
}

double cd_kernel(int n, double gamma, double x, double y) {
  if (n < 1) throw DomainError("cd_kernel: n must be positive");
  const double scale = std::sqrt(n * (n + gamma));
  const double eps_diag = 1e-6 * std::max(1.0, x);
  if (std::abs(x - y) < eps_diag) {
    const double m = 0.5 * (x + y);
    std::vector<double> phi, dphi;
    laguerre_functions_with_derivative(n + 1, gamma, m, phi, dphi);
    const auto a = static_cast<std::size_t>(n - 1);
    const auto b = static_cast<std::size_t>(n);
    return scale * (dphi[a] * phi[b] - phi[a] * dphi[b]);
  }
  const auto px = laguerre_functions(n + 1, gamma, x);
  const auto py = laguerre_functions(n + 1, gamma, y);
  const auto a = static_cast<std::size_t>(n - 1);
  const auto b = static_cast<std::size_t>(n);
  return scale * (px[a] * py[b] - py[a] * px[b]) / (x - y);
}

double MonicOPSystem::h(int j) const { return std::exp(log_h(j)); }

double MonicOPSystem::boundary_value(int j) const {
  return boundary_orthonormal(j) * std::exp(0.5 * (log_h(j) - gamma_ * std::log(t_) + t_));
}

void MonicOPSystem::orthonormal(double x, int count, std::vector<double>& p, std::vector<double>* dp,
                                std::vector<double>* ddp, double log_scale) const {
  if (count < 1 || count > n_max_ + 1) throw DomainError("orthonormal: count outside 1..n_max+1");
  const auto n = static_cast<std::size_t>(count);
  p.assign(n, 0.0);
  if (dp) dp->assign(n, 0.0);
  if (ddp) ddp->assign(n, 0.0);
  p[0] = std::exp(log_scale - 0.5 * log_h_[0]);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double b_next = std::sqrt(beta_[j + 1]);
    const double b_cur = j > 0 ? std::sqrt(beta_[j]) : 0.0;
    const double shift = x - alpha_[j];
    const double pm = j > 0 ? p[j - 1] : 0.0;
    p[j + 1] = (shift * p[j] - b_cur * pm) / b_next;
    if (dp) {
      auto& d = *dp;
      const double dm = j > 0 ? d[j - 1] : 0.0;
      d[j + 1] = (shift * d[j] + p[j] - b_cur * dm) / b_next;
      if (ddp) {
        auto& dd = *ddp;
        const double ddm = j > 0 ? dd[j - 1] : 0.0;
        dd[j + 1] = (shift * dd[j] + 2.0 * d[j] - b_cur * ddm) / b_next;
      }
    }
  }
}

void MonicOPSystem::finish_boundary() {
  const auto n = static_cast<std::size_t>(n_max_ + 1);
  p_sub_.assign(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) p_sub_[j] = p_sub_[j - 1] - alpha_[j - 1];

  psi_t_.assign(n, 0.0);
  R_.assign(n, 0.0);
  r_.assign(n, 0.0);
  psi_t_[0] = std::exp(0.5 * (gamma_ * std::log(t_) - t_ - log_h_[0]));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double b_cur = j > 0 ? std::sqrt(beta_[j]) : 0.0;
    const double prev = j > 0 ? psi_t_[j - 1] : 0.0;
    psi_t_[j + 1] = ((t_ - alpha_[j]) * psi_t_[j] - b_cur * prev) / std::sqrt(beta_[j + 1]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    R_[j] = -psi_t_[j] * psi_t_[j];
    r_[j] = j > 0 ? -psi_t_[j] * psi_t_[j - 1] * std::sqrt(beta_[j]) : 0.0;
  }
}

MonicOPSystem build_monic_system(int n_max, double gamma, double t, std::size_t node_count) {
  check_gamma(gamma);
  if (n_max < 1) throw DomainError("build_monic_system: n_max must be at least 1");
  if (!(t > 0.0)) throw DomainError("build_monic_system: t must be positive");
  const std::size_t nodes = node_count ? node_count : static_cast<std::size_t>(4 * n_max + 50);
  if (nodes < static_cast<std::size_t>(n_max + 2))
    throw DomainError("build_monic_system: node count too small for n_max");

  const auto rule = quad::gauss_jacobi(nodes, 0.0, gamma);
  const auto mapped = quad::map_left_weighted(*rule, 0.0, t);

  // sqrt of the discrete weights w_k x_k^gamma e^{-x_k}, rescaled to avoid underflow
  std::vector<double> q(nodes), q_prev(nodes, 0.0), r(nodes);
  double shift = -INFINITY;
  for (std::size_t k = 0; k < nodes; ++k) {
    q[k] = std::log(mapped.w[k]) - mapped.x[k];
    shift = std::max(shift, q[k]);
  }
  double norm = 0.0;
  for (std::size_t k = 0; k < nodes; ++k) {
    q[k] = std::exp(0.5 * (q[k] - shift));
    norm += q[k] * q[k];
  }
  norm = std::sqrt(norm);
  for (auto& v : q) v /= norm;

  MonicOPSystem sys;
  sys.t_ = t;
  sys.gamma_ = gamma;
  sys.n_max_ = n_max;
  sys.node_count_ = nodes;
  const auto n = static_cast<std::size_t>(n_max + 1);
  sys.alpha_.assign(n, 0.0);
  sys.beta_.assign(n + 1, 0.0);
  sys.log_h_.assign(n, 0.0);

  std::vector<std::vector<double>> basis;
  basis.reserve(n);
  double b = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    basis.push_back(q);
    double a = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) a += mapped.x[k] * q[k] * q[k];
    for (std::size_t k = 0; k < nodes; ++k) r[k] = (mapped.x[k] - a) * q[k] - b * q_prev[k];
    // full reorthogonalization keeps the discrete polynomials orthogonal
    for (const auto& v : basis) {
      double c = 0.0;
      for (std::size_t k = 0; k < nodes; ++k) c += v[k] * r[k];
      for (std::size_t k = 0; k < nodes; ++k) r[k] -= c * v[k];
    }
    double b_next = 0.0;
    for (double v : r) b_next += v * v;
    b_next = std::sqrt(b_next);
    if (!(b_next > 0.0) || !std::isfinite(b_next))
      throw ConditioningError("build_monic_system: non-positive norm at degree " + std::to_string(j + 1) +
                              " (t=" + std::to_string(t) + ", nodes=" + std::to_string(nodes) + ")");
    sys.alpha_[j] = a;
    sys.beta_[j + 1] = b_next * b_next;
    q_prev.swap(q);
    for (std::size_t k = 0; k < nodes; ++k) q[k] = r[k] / b_next;
    b = b_next;
  }
  sys.beta_.resize(n);

  sys.log_h_[0] = specfun::log_lower_incomplete_gamma(gamma + 1.0, t);
  for (std::size_t j = 1; j < n; ++j) sys.log_h_[j] = sys.log_h_[j - 1] + std::log(sys.beta_[j]);
  sys.finish_boundary();
  return sys;
}

MonicOPSystem monic_system_from_moments(int n_max, double gamma, double t) {
  using detail::Extended;
  check_gamma(gamma);
  if (n_max < 1 || n_max > 12) throw CapabilityError("monic_system_from_moments: n_max must be in 1..12");
  if (!(t > 0.0)) throw DomainError("monic_system_from_moments: t must be positive");
  const auto size = static_cast<std::size_t>(n_max + 2);
  std::vector<Extended> mu(2 * size - 1);
  for (std::size_t k = 0; k < mu.size(); ++k)
    mu[k] = detail::lower_incomplete_gamma_series(Extended(gamma) + Extended(k + 1), Extended(t));

  // Cholesky H = R^T R of the Hankel moment matrix, R upper triangular
  std::vector<std::vector<Extended>> R(size, std::vector<Extended>(size, Extended(0)));
  for (std::size_t i = 0; i < size; ++i) {
    Extended d = mu[2 * i];
    for (std::size_t k = 0; k < i; ++k) d -= R[k][i] * R[k][i];
    if (d <= 0) throw NumericalError("monic_system_from_moments: moment matrix not positive definite");
    R[i][i] = sqrt(d);
    for (std::size_t j = i + 1; j < size; ++j) {
      Extended s = mu[i + j];
      for (std::size_t k = 0; k < i; ++k) s -= R[k][i] * R[k][j];
      R[i][j] = s / R[i][i];
    }
  }

  MonicOPSystem sys;
  sys.t_ = t;
  sys.gamma_ = gamma;
  sys.n_max_ = n_max;
  const auto n = static_cast<std::size_t>(n_max + 1);
  sys.alpha_.assign(n, 0.0);
  sys.beta_.assign(n, 0.0);
  sys.log_h_.assign(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    Extended a = R[k][k + 1] / R[k][k];
    if (k > 0) a -= R[k - 1][k] / R[k - 1][k - 1];
    sys.alpha_[k] = static_cast<double>(a);
    if (k > 0) {
      const Extended ratio = R[k][k] / R[k - 1][k - 1];
      sys.beta_[k] = static_cast<double>(ratio * ratio);
    }
    sys.log_h_[k] = static_cast<double>(2 * log(R[k][k]));
  }
  sys.finish_boundary();
  return sys;
}

LadderCoefficients ladder_coefficients(const MonicOPSystem& sys, int n, double z) {
  const double t = sys.t();
  if (z == 0.0 || z == t) throw DomainError("ladder_coefficients: z is a pole (0 or t)");
  if (n < 0 || n > sys.n_max()) throw DomainError("ladder_coefficients: n outside system range");
  const double Rn = sys.R(n);
  const double rn = sys.r(n);
  return {z, Rn / (z - t) + (1.0 - Rn) / z, rn / (z - t) - (n + rn) / z};
}

LadderCoefficients ladder_coefficients_integral(const MonicOPSystem& sys, int n, double z,
                                                std::size_t node_count) {
  const double t = sys.t();
  const double gamma = sys.gamma();
  if (z == 0.0 || z == t) throw DomainError("ladder_coefficients_integral: z is a pole (0 or t)");
  if (n < 1 || n > sys.n_max()) throw DomainError("ladder_coefficients_integral: n outside 1..n_max");
  if (gamma < 0.0) throw DomainError("ladder_coefficients_integral: defining integral diverges for gamma < 0");
  LadderCoefficients out{z, sys.R(n) / (z - t), sys.r(n) / (z - t)};
  if (gamma == 0.0) return out;  // (v'(z) - v'(y)) / (z - y) = gamma / (z y) vanishes

  const std::size_t nodes = node_count ? node_count : static_cast<std::size_t>(4 * sys.n_max() + 50);
  const auto rule = quad::gauss_jacobi(nodes, 0.0, gamma - 1.0);
  const auto mapped = quad::map_left_weighted(*rule, 0.0, t);
  double int_a = 0.0, int_b = 0.0;
  std::vector<double> p;
  for (std::size_t k = 0; k < nodes; ++k) {
    sys.orthonormal(mapped.x[k], n + 1, p);
    const double w = mapped.w[k] * std::exp(-mapped.x[k]);
    const auto nn = static_cast<std::size_t>(n);
    int_a += w * p[nn] * p[nn];
    int_b += w * p[nn] * p[nn - 1];
  }
  out.A += gamma / z * int_a;
  out.B += gamma / z * std::sqrt(sys.beta(n)) * int_b;
  return out;
}

}  // namespace lue::orthopoly
