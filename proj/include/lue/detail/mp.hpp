#pragma once

#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lue::detail {

// 50 decimal digits (166-bit significand): a bit over 3x double.
using Extended = boost::multiprecision::cpp_bin_float_50;

// gamma_lower(a, t) = t^a e^{-t} sum_k t^k / (a (a+1) ... (a+k)); the series
// has only positive terms so it is accurate for any t at this precision as
// long as enough terms are taken.
template <class Real>
Real lower_incomplete_gamma_series(const Real& a, const Real& t) {
  using std::exp;
  using std::log;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real term = 1 / a;
  Real sum = term;
  for (int k = 1; k < 100000; ++k) {
    term *= t / (a + k);
    sum += term;
    if (term < eps * sum) break;
  }
  return exp(a * log(t) - t) * sum;
}

}  // namespace lue::detail
