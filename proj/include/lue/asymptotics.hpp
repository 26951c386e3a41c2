#pragma once

#include <string>

namespace lue::asympt {

struct FnExpansion {
  double alpha;
  int n;
  double gamma;
  double a0;
  double a1;
  double a2;
  double sum;  // a0 + a1/n + a2/n^2
};

// Value of an expansion together with the order of its neglected remainder.
struct ExpansionReport {
  double value;
  std::string remainder_order;
  int n;
  double gamma;
  double alpha;
};

// Unique real root (in [1, 4 (1+alpha)/(1-alpha)]) of the cubic obtained by
// dropping the derivative terms from the rescaled Painleve V equation.
double cubic_root_f_tilde(int n, double gamma, double alpha);

// Coefficients of F_n(alpha) = sum a_i(alpha) n^{-i}, i <= 2.
FnExpansion fn_series(int n, double gamma, double alpha);

// Large-n expansion of d/d alpha ln P(n, gamma, alpha).
ExpansionReport dlnp_dalpha(int n, double gamma, double alpha);

// Small-alpha behavior n(n+gamma) ln(4 n alpha) + ln G(n+1) + ln G(n+gamma+1)
// - ln G(2n+gamma+1), with exact Barnes G values.
double lnp_small_alpha(int n, double gamma, double alpha);
// The same with every Barnes G replaced by its large-argument expansion.
double lnp_small_alpha_expanded(int n, double gamma, double alpha);
// ln A_n(gamma) = 2 ln G(n+1) + 2 ln G(n+gamma+1) - ln G(gamma+1) - ln G(2n+gamma+1).
double selberg_log(int n, double gamma);

// Large-n expansion of ln P(n, gamma, alpha) for alpha up to the soft edge,
// without the unknown n-dependent o(1) constant.
ExpansionReport lnp_theorem(int n, double gamma, double alpha);

// Left tail of ln det(I - K_Airy) on (-s, inf).
double airy_tail(double s);
// (1/24) ln 2 + zeta'(-1)
double tracy_widom_constant();

// alpha = 1 - s / (2n)^{2/3}
double soft_edge_alpha(int n, double s);

// Marchenko-Pastur density (1/2pi) sqrt((4n - x)/x) on (0, 4n), zero outside.
double level_density(int n, double x);

}  // namespace lue::asympt
