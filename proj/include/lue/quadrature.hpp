#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace lue::quad {

// Gauss rule on [-1, 1] for the weight (1 - y)^a (1 + y)^b.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 0.0;
  std::size_t size() const { return nodes.size(); }
};

// Cached; rules are immutable once built, and concurrent callers requesting
// the same rule share one instance.
std::shared_ptr<const GaussRule> gauss_jacobi(std::size_t n, double a, double b);

inline std::shared_ptr<const GaussRule> gauss_legendre(std::size_t n) { return gauss_jacobi(n, 0.0, 0.0); }

// Rule for  int_lo^hi f(x) (x - lo)^b dx  obtained from gauss_jacobi(n, 0, b).
struct MappedRule {
  std::vector<double> x;
  std::vector<double> w;
};
MappedRule map_left_weighted(const GaussRule& rule, double lo, double hi);

}  // namespace lue::quad
