#include "lue/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

#include <Eigen/Eigenvalues>
#include <boost/math/special_functions/gamma.hpp>

#include "lue/errors.hpp"

namespace lue::quad {

namespace {

// Jacobi-matrix entries of the monic Jacobi polynomials.
void jacobi_recurrence(std::size_t n, double a, double b, std::vector<double>& diag, std::vector<double>& off) {
  diag.assign(n, 0.0);
  off.assign(n, 0.0);  // off[k] = sqrt(beta_{k+1})
  const double ab = a + b;
  diag[0] = (b - a) / (ab + 2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    diag[k] = (b * b - a * a) / (s * (s + 2.0));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double s = 2.0 * kk + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
    } else {
      beta = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    off[k - 1] = std::sqrt(beta);
  }
}

std::shared_ptr<const GaussRule> build(std::size_t n, double a, double b) {
  if (n == 0) throw DomainError("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("gauss_jacobi: exponents must exceed -1");
  std::vector<double> diag, off;
  jacobi_recurrence(n, a, b, diag, off);

  Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(diag.data(), static_cast<Eigen::Index>(n));
  Eigen::VectorXd e = Eigen::Map<Eigen::VectorXd>(off.data(), static_cast<Eigen::Index>(n - 1));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  if (n > 1) {
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("gauss_jacobi: tridiagonal eigensolver failed");
  }

  const double mu0 = std::exp((a + b + 1.0) * std::log(2.0) + boost::math::lgamma(a + 1.0) +
                              boost::math::lgamma(b + 1.0) - boost::math::lgamma(a + b + 2.0));
  auto rule = std::make_shared<GaussRule>();
  rule->a = a;
  rule->b = b;
  rule->nodes.resize(n);
  rule->weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double y = n > 1 ? solver.eigenvalues()[static_cast<Eigen::Index>(k)] : diag[0];
    // One Newton step on the orthonormal p_n, then the Christoffel number.
    for (int pass = 0; pass < 2; ++pass) {
      double p_prev = 0.0, p = 1.0, dp_prev = 0.0, dp = 0.0, sum = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double prev_off = j > 0 ? off[j - 1] : 0.0;
        const double p_next = ((y - diag[j]) * p - prev_off * p_prev) / off[j];
        const double dp_next = ((y - diag[j]) * dp + p - prev_off * dp_prev) / off[j];
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        if (j + 1 < n) sum += p * p;
      }
      if (pass == 0) {
        if (dp != 0.0 && std::isfinite(p / dp)) {
          const double step = p / dp;
          if (std::abs(step) < 1e-8) y -= step;
        }
      } else {
        rule->nodes[k] = y;
        rule->weights[k] = mu0 / sum;
      }
    }
  }
  return rule;
}

}  // namespace

std::shared_ptr<const GaussRule> gauss_jacobi(std::size_t n, double a, double b) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, double, double>, std::shared_ptr<const GaussRule>> cache;
  const auto key = std::make_tuple(n, a, b);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = build(n, a, b);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(rule));
  return it->second;
}

MappedRule map_left_weighted(const GaussRule& rule, double lo, double hi) {
  if (rule.a != 0.0) throw DomainError("map_left_weighted: rule must have a = 0");
  const double half = 0.5 * (hi - lo);
  const double scale = std::pow(half, 1.0 + rule.b);
  MappedRule out;
  out.x.resize(rule.size());
  out.w.resize(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    out.x[k] = lo + half * (1.0 + rule.nodes[k]);
    out.w[k] = rule.weights[k] * scale;
  }
  return out;
}

}  // namespace lue::quad
