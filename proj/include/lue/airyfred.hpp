#pragma once

#include <cstddef>
#include <vector>

namespace lue::airy {

struct AiryDetResult {
  double s;
  double log_det;
  std::size_t node_count;    // nodes of the reported (finer) discretization
  double truncation_point;   // T
  double coarse_log_det;     // value with half the nodes
  bool converged;
};

// (Ai(u) Ai'(v) - Ai(v) Ai'(u)) / (u - v); Ai'(u)^2 - u Ai(u)^2 on the diagonal.
double airy_kernel(double u, double v);

// Smallest T with Ai(T)^2 <= 1e-30.
double truncation_point();

// ln det(I - K_Airy) on L^2(-s, inf) by Nystrom discretization.  (-s, 0) gets
// a linear Gauss-Legendre map and (0, T) the map x = -L ln(1 - v (1 - e^{-T/L}));
// the nodes are shared between the pieces in proportion s : 6.  The result is compared with the same
// rule at 2 * node_count and AccuracyError is thrown if they differ by more
// than `tolerance`.  The matrix, the rule and the factorization are carried in
// 50-digit arithmetic: det(I - K) reaches e^{-150} on [0.5, 12] and the
// smallest eigenvalue of I - K goes with it.
AiryDetResult airy_fredholm_logdet(double s, std::size_t node_count = 80, double tolerance = 1e-9);

// ln det at exactly `node_count` nodes, no convergence check.
double airy_logdet_fixed(double s, std::size_t node_count);

// Eigenvalues (ascending) of the symmetrized discretized operator in double.
std::vector<double> airy_operator_spectrum(double s, std::size_t node_count = 80);

struct TwFit {
  double c0;
  double b;                  // coefficient of s^{-3}
  double residual_rms;
  std::vector<double> s_values;
  std::vector<double> c_values;  // log_det + s^3/12 + (1/8) ln s
};

// Least-squares fit of c(s) = c0 + b s^{-3}.  A single s returns c(s) as c0.
TwFit extract_tw_constant(const std::vector<double>& s_values, std::size_t node_count = 80);

}  // namespace lue::airy
