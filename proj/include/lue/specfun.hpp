#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace lue::specfun {

struct AiryPair {
  double ai;
  double ai_prime;
};

// ln Gamma(x), x > 0.
double log_gamma(double x);

// Lower incomplete gamma  int_0^t x^{a-1} e^{-x} dx  (a > 0, t >= 0).
double lower_incomplete_gamma(double a, double t);

// Natural log of the lower incomplete gamma; finite for every t > 0 even
// when the value itself under- or overflows.
double log_lower_incomplete_gamma(double a, double t);

// ln G(z) for the Barnes G-function, z > 0.
double barnes_ln_g(double z);

// Large-argument expansion of ln G(w + 1) evaluated at w = z - 1.
// `extra_terms` (0..3) adds the z^{-2}, z^{-4}, z^{-6} Bernoulli corrections
// beyond the leading ln / constant terms.
double barnes_ln_g_asymptotic(double z, int extra_terms = 2);

// zeta'(-1), computed once from the Glaisher-Kinkelin constant.
double zeta_prime_minus_one();

inline constexpr double kAiryMin = -40.0;
inline constexpr double kAiryMax = 200.0;

// Ai and Ai' on [kAiryMin, kAiryMax].
AiryPair airy(double x);

// Maclaurin-series Airy pair in an arbitrary floating type.  Intended for
// extended-precision use on moderate |x| (|x| <= 16 loses at most ~17
// decimal digits to cancellation); not range-checked.
template <class Real>
void airy_series(const Real& x, Real& ai, Real& ai_prime) {
  using std::abs;
  using std::pow;
  const Real one(1);
  const Real third = one / 3;
  const Real c1 = one / (pow(Real(3), 2 * third) * boost::math::tgamma(2 * third));
  const Real c2 = one / (pow(Real(3), third) * boost::math::tgamma(third));
  const Real x3 = x * x * x;
  const Real eps = std::numeric_limits<Real>::epsilon();

  // f = sum x^{3k}/prod (3i-1)(3i),  g = sum x^{3k+1}/prod (3i)(3i+1)
  Real f = one, g = x, fp = x * x / 2, gp = one;
  Real ft = one, gt = x, fpt = fp, gpt = one;
  for (int k = 1; k < 4000; ++k) {
    const Real kk(k);
    ft *= x3 / ((3 * kk - 1) * (3 * kk));
    gt *= x3 / ((3 * kk) * (3 * kk + 1));
    if (k >= 2) {
      fpt *= x3 / ((3 * kk - 3) * (3 * kk - 1));
      fp += fpt;
    }
    gpt *= x3 / ((3 * kk) * (3 * kk - 2));
    f += ft;
    g += gt;
    gp += gpt;
    const Real mag = abs(ft) + abs(gt) + abs(fpt) + abs(gpt);
    if (k > 3 && mag <= eps * (abs(f) + abs(g) + abs(fp) + abs(gp))) break;
  }
  ai = c1 * f - c2 * g;
  ai_prime = c1 * fp - c2 * gp;
}

}  // namespace lue::specfun
