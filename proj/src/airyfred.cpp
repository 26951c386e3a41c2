#include "lue/airyfred.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "lue/detail/mp.hpp"
#include "lue/errors.hpp"
#include "lue/quadrature.hpp"
#include "lue/specfun.hpp"

namespace lue::airy {

namespace {

using detail::Extended;
// Airy values are summed from their Maclaurin series, which cancels ~15
// digits at |x| ~ 13; the extra width keeps the result at full Extended.
using Wide = boost::multiprecision::cpp_bin_float_100;

constexpr double kMinS = 0.5;
constexpr double kMaxS = 12.0;
constexpr std::size_t kMinPiece = 16;
// length scale of x = -L ln(1 - v (1 - e^{-T/L})) on (0, T)
constexpr double kTailScale = 4.0;

struct ExtendedRule {
  std::vector<Extended> x;
  std::vector<Extended> w;
};

// Gauss-Legendre on [-1, 1] polished to Extended by Newton steps from the
// double rule.
std::shared_ptr<const ExtendedRule> legendre_extended(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const ExtendedRule>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  const auto seed = quad::gauss_legendre(m);
  auto rule = std::make_shared<ExtendedRule>();
  rule->x.resize(m);
  rule->w.resize(m);
  const Extended eps = std::numeric_limits<Extended>::epsilon();
  for (std::size_t i = 0; i < m; ++i) {
    Extended x = seed->nodes[i];
    Extended dp = 1;
    for (int it = 0; it < 20; ++it) {
      Extended p0 = 1, p1 = x;
      for (std::size_t k = 2; k <= m; ++k) {
        const Extended p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      const Extended dx = p1 / dp;
      x -= dx;
      if (abs(dx) <= 4 * eps) break;
    }
    // recompute P'_m at the polished node
    Extended p0 = 1, p1 = x;
    for (std::size_t k = 2; k <= m; ++k) {
      const Extended p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1);
    rule->x[i] = x;
    rule->w[i] = 2 / ((1 - x * x) * dp * dp);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(rule)).first->second;
}

struct Discretization {
  std::vector<Extended> x;
  std::vector<Extended> sqrt_w;
  std::vector<Extended> ai;
  std::vector<Extended> aip;
};

Discretization discretize(double s, std::size_t node_count) {
  // (-s, 0) carries the oscillations, about 2 nodes per unit of s on top of a base
  auto m_left = static_cast<std::size_t>(std::lround(static_cast<double>(node_count) * s / (s + 6.0)));
  m_left = std::clamp<std::size_t>(m_left, kMinPiece, node_count - kMinPiece);
  const std::size_t m_right = node_count - m_left;
  Discretization d;
  d.x.reserve(node_count);
  d.sqrt_w.reserve(node_count);

  const Extended half_s = Extended(s) / 2;
  const auto left = legendre_extended(m_left);
  for (std::size_t i = 0; i < m_left; ++i) {
    d.x.push_back(half_s * (left->x[i] - 1));
    d.sqrt_w.push_back(sqrt(half_s * left->w[i]));
  }
  const Extended big_t = truncation_point();
  const Extended scale = kTailScale;
  const Extended c = 1 - exp(-big_t / scale);
  const auto right = legendre_extended(m_right);
  for (std::size_t i = 0; i < m_right; ++i) {
    const Extended v = (right->x[i] + 1) / 2;
    const Extended q = 1 - v * c;
    d.x.push_back(-scale * log(q));
    d.sqrt_w.push_back(sqrt(scale * right->w[i] / 2 * c / q));
  }

  d.ai.resize(node_count);
  d.aip.resize(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    Wide a, ap;
    specfun::airy_series<Wide>(Wide(d.x[i]), a, ap);
    d.ai[i] = Extended(a);
    d.aip[i] = Extended(ap);
  }
  return d;
}

// Row-major triangle of W^{1/2} K W^{1/2}.
std::vector<Extended> weighted_kernel(const Discretization& d) {
  const std::size_t m = d.x.size();
  std::vector<Extended> k(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    k[i * m + i] = d.sqrt_w[i] * d.sqrt_w[i] * (d.aip[i] * d.aip[i] - d.x[i] * d.ai[i] * d.ai[i]);
    for (std::size_t j = 0; j < i; ++j) {
      const Extended kij = (d.ai[i] * d.aip[j] - d.ai[j] * d.aip[i]) / (d.x[i] - d.x[j]);
      k[i * m + j] = d.sqrt_w[i] * kij * d.sqrt_w[j];
      k[j * m + i] = k[i * m + j];
    }
  }
  return k;
}

void check_s(double s) {
  if (!(s >= kMinS && s <= kMaxS))
    throw DomainError("airy_fredholm_logdet: s must lie in [0.5, 12], got " + std::to_string(s));
}

}  // namespace

double airy_kernel(double u, double v) {
  const auto a = specfun::airy(u);
  if (std::abs(u - v) < 1e-6) return a.ai_prime * a.ai_prime - u * a.ai * a.ai;
  const auto b = specfun::airy(v);
  return (a.ai * b.ai_prime - b.ai * a.ai_prime) / (u - v);
}

double truncation_point() {
  static const double value = [] {
    double x = 1.0;
    while (true) {
      const double ai = specfun::airy(x).ai;
      if (ai * ai <= 1e-30) return x;
      x += 0.125;
    }
  }();
  return value;
}

double airy_logdet_fixed(double s, std::size_t node_count) {
  check_s(s);
  if (node_count < 40) throw DomainError("airy_fredholm_logdet: node_count must be at least 40");
  const auto d = discretize(s, node_count);
  auto a = weighted_kernel(d);
  const std::size_t m = node_count;
  for (std::size_t i = 0; i < m * m; ++i) a[i] = -a[i];
  for (std::size_t i = 0; i < m; ++i) a[i * m + i] += 1;

  Extended log_det = 0;
  for (std::size_t j = 0; j < m; ++j) {
    Extended diag = a[j * m + j];
    for (std::size_t k = 0; k < j; ++k) diag -= a[j * m + k] * a[j * m + k];
    if (!(diag > 0))
      throw ConditioningError("airy_fredholm_logdet: I - K lost positivity at pivot " + std::to_string(j));
    const Extended l = sqrt(diag);
    a[j * m + j] = l;
    log_det += log(diag);
    for (std::size_t i = j + 1; i < m; ++i) {
      Extended v = a[i * m + j];
      for (std::size_t k = 0; k < j; ++k) v -= a[i * m + k] * a[j * m + k];
      a[i * m + j] = v / l;
    }
  }
  return static_cast<double>(log_det);
}

AiryDetResult airy_fredholm_logdet(double s, std::size_t node_count, double tolerance) {
  double coarse = 0.0;
  try {
    coarse = airy_logdet_fixed(s, node_count);
  } catch (const ConditioningError&) {
    // too few nodes to resolve (-s, 0); the finer rule decides
    coarse = std::numeric_limits<double>::quiet_NaN();
  }
  const double fine = airy_logdet_fixed(s, 2 * node_count);
  AiryDetResult r{s, fine, 2 * node_count, truncation_point(), coarse, std::abs(fine - coarse) <= tolerance};
  if (!r.converged)
    throw AccuracyError("airy_fredholm_logdet: node doubling changed ln det by " +
                            std::to_string(std::abs(fine - coarse)) + " at s = " + std::to_string(s),
                        coarse, fine);
  return r;
}

std::vector<double> airy_operator_spectrum(double s, std::size_t node_count) {
  check_s(s);
  const auto d = discretize(s, node_count);
  const auto k = weighted_kernel(d);
  const auto m = static_cast<Eigen::Index>(node_count);
  Eigen::MatrixXd a(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) a(i, j) = static_cast<double>(k[static_cast<std::size_t>(i * m + j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

TwFit extract_tw_constant(const std::vector<double>& s_values, std::size_t node_count) {
  if (s_values.empty()) throw DomainError("extract_tw_constant: no s values");
  TwFit fit{0, 0, 0, s_values, {}};
  for (double s : s_values) {
    const double ld = airy_fredholm_logdet(s, node_count).log_det;
    fit.c_values.push_back(ld + s * s * s / 12 + std::log(s) / 8);
  }
  if (s_values.size() == 1) {
    fit.c0 = fit.c_values[0];
    return fit;
  }
  // normal equations for c = c0 + b u, u = s^{-3}
  double su = 0, suu = 0, sc = 0, suc = 0;
  const double cnt = static_cast<double>(s_values.size());
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double u = std::pow(s_values[i], -3.0);
    su += u;
    suu += u * u;
    sc += fit.c_values[i];
    suc += u * fit.c_values[i];
  }
  const double det = cnt * suu - su * su;
  if (det == 0.0) throw DomainError("extract_tw_constant: s values must be distinct");
  fit.b = (cnt * suc - su * sc) / det;
  fit.c0 = (sc - fit.b * su) / cnt;
  double ss = 0;
  for (std::size_t i = 0; i < s_values.size(); ++i) {
    const double r = fit.c_values[i] - fit.c0 - fit.b * std::pow(s_values[i], -3.0);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / cnt);
  return fit;
}

}  // namespace lue::airy
