#include "lue/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "lue/errors.hpp"

namespace lue::specfun {

namespace {

// Below this argument ln G is obtained by shifting up to the expansion.
constexpr double kBarnesShift = 20.0;
// Integers up to here use the exact ln-factorial ladder.
constexpr double kBarnesLadderMax = 400.0;

double glaisher_log() {
  // Euler-Maclaurin for sum_{k<=N} k ln k; the j-th correction is
  // B_{2j} / (2j (2j-1) (2j-2) N^{2j-2}).
  constexpr int N = 40;
  long double sum = 0.0L;
  for (int k = 2; k <= N; ++k) sum += static_cast<long double>(k) * std::log(static_cast<long double>(k));
  const long double n = N;
  const long double ln_n = std::log(n);
  long double ln_a = sum - (n * n / 2 + n / 2 + 1.0L / 12) * ln_n + n * n / 4;
  constexpr std::array<long double, 4> bernoulli{-1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66};
  long double npow = n * n;
  for (int j = 2; j <= 5; ++j) {
    const long double b = bernoulli[static_cast<std::size_t>(j - 2)];
    ln_a += b / ((2.0L * j) * (2.0L * j - 1) * (2.0L * j - 2) * npow);
    npow *= n * n;
  }
  return static_cast<double>(ln_a);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  return boost::math::lgamma(x);
}

double lower_incomplete_gamma(double a, double t) {
  if (!(a > 0.0)) throw DomainError("lower_incomplete_gamma: a must be positive");
  if (!(t >= 0.0)) throw DomainError("lower_incomplete_gamma: t must be nonnegative");
  if (t == 0.0) return 0.0;
  return boost::math::tgamma_lower(a, t);
}

double log_lower_incomplete_gamma(double a, double t) {
  if (!(a > 0.0)) throw DomainError("log_lower_incomplete_gamma: a must be positive");
  if (!(t > 0.0)) throw DomainError("log_lower_incomplete_gamma: t must be positive");
  const double q = boost::math::gamma_q(a, t);
  if (q < 0.5) return boost::math::lgamma(a) + std::log1p(-q);
  const double p = boost::math::gamma_p(a, t);
  if (p > 1e-280 || t >= a) return boost::math::lgamma(a) + std::log(p);
  // P underflows: a ln t - t + ln sum_k t^k / (a (a+1) ... (a+k)), all terms positive
  double term = 1.0 / a, sum = term;
  for (int k = 1; k < 100000 && term > 1e-17 * sum; ++k) {
    term *= t / (a + k);
    sum += term;
  }
  return a * std::log(t) - t + std::log(sum);
}

double barnes_ln_g_asymptotic(double z, int extra_terms) {
  const double w = z - 1.0;
  if (!(w > 0.0)) throw DomainError("barnes_ln_g_asymptotic: needs z > 1");
  const double lw = std::log(w);
  double v = w * w * (lw / 2 - 0.75) + w / 2 * std::log(2 * std::numbers::pi) - lw / 12 +
             zeta_prime_minus_one();
  const double w2 = w * w;
  if (extra_terms >= 1) v -= 1.0 / (240.0 * w2);
  if (extra_terms >= 2) v += 1.0 / (1008.0 * w2 * w2);
  if (extra_terms >= 3) v -= 1.0 / (1440.0 * w2 * w2 * w2);
  return v;
}

double barnes_ln_g(double z) {
  if (!(z > 0.0)) throw DomainError("barnes_ln_g: argument must be positive, got " + std::to_string(z));
  if (z == std::floor(z) && z <= kBarnesLadderMax) {
    // G(k+1) = prod_{j<k} j!  =>  ln G(z) = sum_{m=1}^{z-2} ln m!
    double v = 0.0;
    double ln_fact = 0.0;
    const int k = static_cast<int>(z);
    for (int m = 1; m <= k - 2; ++m) {
      ln_fact += std::log(static_cast<double>(m));
      v += ln_fact;
    }
    return v;
  }
  if (z >= kBarnesShift) return barnes_ln_g_asymptotic(z, 2);
  const int shift = static_cast<int>(std::ceil(kBarnesShift - z));
  double v = barnes_ln_g_asymptotic(z + shift, 2);
  for (int k = 0; k < shift; ++k) v -= boost::math::lgamma(z + k);
  return v;
}

double zeta_prime_minus_one() {
  static const double value = 1.0 / 12.0 - glaisher_log();
  return value;
}

AiryPair airy(double x) {
  if (!(x >= kAiryMin && x <= kAiryMax))
    throw DomainError("airy: argument outside [-40, 200]: " + std::to_string(x));
  return {boost::math::airy_ai(x), boost::math::airy_ai_prime(x)};
}

}  // namespace lue::specfun
