#include "lue/mcsample.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>

#include "lue/errors.hpp"

namespace lue::mc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double chi(std::mt19937_64& rng, double dof) {
  std::chi_squared_distribution<double> dist(dof);
  return std::sqrt(dist(rng));
}

// Bidiagonal beta = 2 Laguerre model with a = n + gamma: diagonal
// chi_{2(a - i)}, subdiagonal chi_{2(n - 1 - i)}; eigenvalues of B B^T / 2
// have joint density proportional to Vandermonde^2 prod x^gamma e^{-x}.
double one_draw(int n, double gamma, std::uint64_t seed, std::size_t index) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
  Eigen::VectorXd d(n);
  Eigen::VectorXd e(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) d(i) = chi(rng, 2.0 * (n + gamma - i));
  for (int i = 0; i + 1 < n; ++i) e(i) = chi(rng, 2.0 * (n - 1 - i));
  if (n == 1) return d(0) * d(0) / 2;
  // T = B^T B for lower-bidiagonal B
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(n - 1);
  for (int i = 0; i < n; ++i) diag(i) = d(i) * d(i) + (i + 1 < n ? e(i) * e(i) : 0.0);
  for (int i = 0; i + 1 < n; ++i) off(i) = e(i) * d(i + 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(n - 1) / 2;
}

}  // namespace

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw DomainError("EmpiricalCDF: no samples");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCDF::left_limit(double x) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double EmpiricalCDF::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("EmpiricalCDF::quantile: p outside [0, 1]");
  const auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted_.size())));
  return sorted_[k == 0 ? 0 : std::min(k, sorted_.size()) - 1];
}

std::vector<double> draw_largest(const SamplerConfig& config, unsigned threads) {
  exact::validate(config.params);
  if (config.sample_count < 1) throw DomainError("sample_largest: sample_count must be at least 1");
  const int n = config.params.n;
  const double gamma = config.params.gamma;
  const double scale = config.scaling == Scaling::scaled ? 1.0 / (4.0 * n) : 1.0;
  std::vector<double> out(config.sample_count);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) out[i] = one_draw(n, gamma, config.seed, i) * scale;
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(config.sample_count)));
  if (threads == 1) {
    work(0, out.size());
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (out.size() + threads - 1) / threads;
  for (unsigned k = 0; k < threads; ++k) {
    const std::size_t b = k * chunk;
    const std::size_t e = std::min(out.size(), b + chunk);
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto& t : pool) t.join();
  return out;
}

EmpiricalCDF sample_largest(const SamplerConfig& config, unsigned threads) {
  return EmpiricalCDF(draw_largest(config, threads));
}

double ks_distance(const EmpiricalCDF& ecdf, const std::function<double(double)>& exact_cdf,
                   const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("ks_distance: empty grid");
  if (!std::is_sorted(grid.begin(), grid.end())) throw DomainError("ks_distance: grid must be sorted");
  double d = 0.0;
  for (double x : grid) {
    const double f = exact_cdf(x);
    const double f_left = exact_cdf(std::nextafter(x, -INFINITY));
    d = std::max({d, std::abs(ecdf(x) - f), std::abs(ecdf.left_limit(x) - f_left)});
  }
  return d;
}

std::vector<double> quantile_grid(const EmpiricalCDF& ecdf, std::size_t points) {
  const auto& s = ecdf.sorted();
  std::vector<double> g;
  points = std::max<std::size_t>(points, 2);
  g.reserve(points + 1);
  for (std::size_t k = 0; k < points; ++k) g.push_back(s[k * (s.size() - 1) / (points - 1)]);
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

void write_samples_csv(std::ostream& out, const SamplerConfig& config, const std::vector<double>& samples) {
  out << "# n=" << config.params.n << ",gamma=" << std::setprecision(17) << config.params.gamma
      << ",seed=" << config.seed << ",samples=" << samples.size()
      << ",scaling=" << (config.scaling == Scaling::scaled ? "scaled" : "unscaled") << '\n';
  out << "lambda_max\n";
  for (double v : samples) out << std::setprecision(17) << v << '\n';
}

}  // namespace lue::mc
