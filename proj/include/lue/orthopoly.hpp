#pragma once

#include <cstddef>
#include <vector>

namespace lue::orthopoly {

// Classical Laguerre polynomial L_j^{(gamma)}(x) by forward recurrence.
double laguerre_eval(int j, double gamma, double x);

// Orthonormal Laguerre functions
//   phi_j(x) = sqrt(j!/Gamma(j+gamma+1)) x^{gamma/2} e^{-x/2} L_j^{(gamma)}(x)
// for j = 0..count-1.  x > 0 (x = 0 is allowed when gamma >= 0).
std::vector<double> laguerre_functions(int count, double gamma, double x);

// Values and first derivatives of phi_0..phi_{count-1}; x > 0.
void laguerre_functions_with_derivative(int count, double gamma, double x, std::vector<double>& phi,
                                        std::vector<double>& dphi);

// Christoffel-Darboux kernel K_n(x, y) = sum_{j<n} phi_j(x) phi_j(y).
double cd_kernel(int n, double gamma, double x, double y);

// Monic polynomials orthogonal for x^gamma e^{-x} on [0, t], indices 0..n_max.
//
// Built by Lanczos on a discretized measure (Gauss-Jacobi nodes with the
// x^gamma factor in the rule).  Entries that can overflow in double
// (h_j, P_j(t,t)) are held in log / orthonormal form.
class MonicOPSystem {
 public:
  double t() const { return t_; }
  double gamma() const { return gamma_; }
  int n_max() const { return n_max_; }
  std::size_t node_count() const { return node_count_; }

  double alpha(int j) const { return alpha_.at(idx(j)); }
  // beta_0 = 0 by convention; beta_j = h_j / h_{j-1}.
  double beta(int j) const { return beta_.at(idx(j)); }
  double log_h(int j) const { return log_h_.at(idx(j)); }
  double h(int j) const;
  // Sub-leading coefficient p(j, t) of P_j.
  double p_sub(int j) const { return p_sub_.at(idx(j)); }
  // sqrt(t^gamma e^{-t} / h_j) P_j(t, t): the orthonormal boundary value.
  double boundary_orthonormal(int j) const { return psi_t_.at(idx(j)); }
  // P_j(t, t); may overflow for large j and t.
  double boundary_value(int j) const;
  double R(int j) const { return R_.at(idx(j)); }
  double r(int j) const { return r_.at(idx(j)); }
  double S(int j) const { return 1.0 - 1.0 / R(j); }

  // Orthonormal polynomials p_j = P_j / sqrt(h_j), j = 0..count-1, at x, with
  // up to two derivatives (pass nullptr to skip).  All outputs are multiplied
  // by exp(log_scale), which keeps weighted evaluations in range.
  void orthonormal(double x, int count, std::vector<double>& p, std::vector<double>* dp = nullptr,
                   std::vector<double>* ddp = nullptr, double log_scale = 0.0) const;

  friend MonicOPSystem build_monic_system(int n_max, double gamma, double t, std::size_t node_count);
  friend MonicOPSystem monic_system_from_moments(int n_max, double gamma, double t);

 private:
  std::size_t idx(int j) const { return static_cast<std::size_t>(j); }
  void finish_boundary();

  double t_ = 0.0;
  double gamma_ = 0.0;
  int n_max_ = 0;
  std::size_t node_count_ = 0;
  std::vector<double> alpha_, beta_, log_h_, p_sub_, psi_t_, R_, r_;
};

// node_count = 0 selects 4 n_max + 50.
MonicOPSystem build_monic_system(int n_max, double gamma, double t, std::size_t node_count = 0);

// Same quantities from the Cholesky factor of the incomplete-gamma moment
// matrix in 50-digit arithmetic.  n_max <= 12.
MonicOPSystem monic_system_from_moments(int n_max, double gamma, double t);

struct LadderCoefficients {
  double z;
  double A;
  double B;
};

// v(z) = z - gamma ln z.
inline double potential_derivative(double gamma, double z) { return 1.0 - gamma / z; }

// Partial-fraction form  A_n = R_n/(z-t) + (1-R_n)/z,  B_n = r_n/(z-t) - (n+r_n)/z.
LadderCoefficients ladder_coefficients(const MonicOPSystem& sys, int n, double z);

// Same, from the defining integrals (quadrature over [0, t]); gamma >= 0.
LadderCoefficients ladder_coefficients_integral(const MonicOPSystem& sys, int n, double z,
                                                std::size_t node_count = 0);

}  // namespace lue::orthopoly
