#pragma once

#include <cstddef>
#include <vector>

#include "lue/exactprob.hpp"

namespace lue::painleve {

struct PainleveState {
  double t;
  double S;
  double S_prime;
  double S_double_prime;
};

using SigmaState = exact::SigmaValue;

// Residual of the Painleve V equation satisfied by S_n(t).
double pv_residual(const PainleveState& state, int n, double gamma);

// Residual of the same equation after t = 4 n alpha; equals 16 n^2 pv_residual.
double fn_equation_residual(double alpha, double F, double F_prime, double F_double_prime, int n, double gamma);

// (t s'')^2 - 4 s'^2 (s - n(n+gamma) - t s') - ((2n+gamma-t) s' + s)^2
double sigma_form_residual(const SigmaState& state, int n, double gamma);

// sigma_n(t) expressed through S_n(t) and S_n'(t).
double sigma_from_s(double t, double S, double S_prime, int n, double gamma);

// S_n(t) = 1 - 1/R_n(t) from the orthogonal-polynomial system, with
// derivatives by five-point differences (step 1e-3 t), Richardson-extrapolated once.
PainleveState s_state_numeric(int n, double gamma, double t);

struct SigmaPath {
  std::vector<SigmaState> samples;  // one per requested grid point, in grid order
  int initial_branch;               // sign of t sigma'' at t0
  double min_discriminant_ratio;    // smallest disc / (|4 s'^2 (...)| + (...)^2) seen
  std::size_t steps;
};

// Integrates the sigma-form solved for sigma'' = branch * sqrt(disc) / t from
// t0 to t1 (either direction), dopri5 with dense output in long double.  If
// the discriminant collapses the branch can no longer be followed and
// IntegrationError carries the location.  The grid must lie between t0 and t1.
//
// Integrating toward larger t amplifies errors roughly like e^t; paths are
// accurate when run from the saturated end down.
SigmaPath integrate_sigma_form(int n, double gamma, double t0, double t1, double sigma0, double sigma0_prime,
                               int branch, const std::vector<double>& grid, double tolerance = 1e-14);

// Same, with the branch taken from the sign of initial.sigma_double_prime.
SigmaPath integrate_sigma_form(int n, double gamma, const SigmaState& initial, double t1,
                               const std::vector<double>& grid, double tolerance = 1e-14);

}  // namespace lue::painleve
