#pragma once

#include <cstddef>
#include <vector>

namespace lue::exact {

struct EnsembleParams {
  int n;
  double gamma;
};
void validate(const EnsembleParams& params);

// ln of a probability; log_value <= 0.
struct LogProb {
  double log_value;
  double probability() const;
};

struct SigmaValue {
  double t;
  double sigma;
  double sigma_prime;
  double sigma_double_prime;
};

// ln D^_n(inf) = ln G(n+1) + ln G(n+gamma+1) - ln G(gamma+1).
double dn_infinity_log(const EnsembleParams& params);
// ln D_n(inf) for the weight x^gamma e^{-4nx}: adds -n(n+gamma) ln(4n).
double dn_infinity_scaled_log(const EnsembleParams& params);

// ln P^(n, gamma, t) = ln det M(t),  M_ij = int_0^t phi_i phi_j.
//
// The Cholesky factor of M in the Laguerre-function basis has diagonal
// L_jj^2 = h_j(t) / h_j(inf), and the h_j(t) come from Lanczos on the
// discretized measure, so det M is never formed from ill-conditioned entries.
LogProb phat_projection(const EnsembleParams& params, double t, std::size_t node_count = 0);

// M(t) assembled entry by entry from the Laguerre functions (row-major n x n).
std::vector<double> gram_matrix(const EnsembleParams& params, double t, std::size_t node_count = 0);

// ln det of gram_matrix by a plain Cholesky factorization.  Only meaningful
// while M is well conditioned; throws ConditioningError when a pivot falls
// below `min_pivot` (relative to the leading one).
LogProb phat_gram_direct(const EnsembleParams& params, double t, double min_pivot = 1e-10,
                         std::size_t node_count = 0);

// ln det of the incomplete-gamma Hankel matrix in 50-digit arithmetic minus
// ln D^_n(inf).  n <= 12.
LogProb phat_hankel_oracle(const EnsembleParams& params, double t);

// P(n, gamma, alpha) = P^(n, gamma, 4 n alpha).
LogProb p_scaled(const EnsembleParams& params, double alpha);

// Support edge: for larger t, ln P^ is taken at this point, where it is
// already within 1e-12 of 0.
double saturation_point(const EnsembleParams& params);

// sigma_n(t) = t d/dt ln P^ and its first two derivatives, from the
// reproducing kernel of the truncated system evaluated at x = t.
SigmaValue sigma_exact(const EnsembleParams& params, double t, std::size_t node_count = 0);

}  // namespace lue::exact
