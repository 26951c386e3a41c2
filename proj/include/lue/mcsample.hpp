#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "lue/exactprob.hpp"

namespace lue::mc {

enum class Scaling { unscaled, scaled };

struct SamplerConfig {
  exact::EnsembleParams params;
  std::size_t sample_count;
  std::uint64_t seed;
  Scaling scaling = Scaling::unscaled;
};

class EmpiricalCDF {
 public:
  explicit EmpiricalCDF(std::vector<double> samples);

  // fraction of samples <= x
  double operator()(double x) const;
  // fraction of samples < x
  double left_limit(double x) const;
  double quantile(double p) const;
  const std::vector<double>& sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

// Largest eigenvalue per draw, in draw order.  Draw i uses its own generator
// keyed by (seed, i), so the output does not depend on `threads`.
std::vector<double> draw_largest(const SamplerConfig& config, unsigned threads = 1);

EmpiricalCDF sample_largest(const SamplerConfig& config, unsigned threads = 1);

// max over the grid of |F_emp - F| taken on both sides of every grid point;
// the left side compares F_emp(x-) with F just below x.
double ks_distance(const EmpiricalCDF& ecdf, const std::function<double(double)>& exact_cdf,
                   const std::vector<double>& grid);

// Grid of `points` empirical quantiles (plus the extreme samples).
std::vector<double> quantile_grid(const EmpiricalCDF& ecdf, std::size_t points);

// One value per line under a one-line comment header with the configuration.
void write_samples_csv(std::ostream& out, const SamplerConfig& config, const std::vector<double>& samples);

}  // namespace lue::mc
