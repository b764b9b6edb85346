#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>

namespace cme {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) without leaving the log domain.
inline double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

/// log of a sum of exponentials of the given log-domain terms.
inline double log_sum_exp(std::span<const double> terms) {
  double hi = kNegInf;
  for (double v : terms) hi = std::max(hi, v);
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double v : terms) acc += std::exp(v - hi);
  return hi + std::log(acc);
}

/// log(n choose k) via log-gamma; exact-ish for n in the thousands where the
/// linear-domain coefficient overflows.
inline double log_choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return kNegInf;
  if (k == 0 || k == n) return 0.0;
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

/// Expected number of distinct individuals after k uniform draws with
/// replacement from a population of size N: N*(1 - (1 - 1/N)^k).
/// Evaluated as -N*expm1(k*log1p(-1/N)) so large k does not underflow to
/// a rounded power.
inline double expected_distinct(std::int64_t population, std::int64_t draws) {
  if (population < 1) throw std::invalid_argument("expected_distinct: population < 1");
  if (draws < 0) throw std::invalid_argument("expected_distinct: draws < 0");
  if (draws == 0) return 0.0;
  if (population == 1) return 1.0;
  const double n = static_cast<double>(population);
  return -n * std::expm1(static_cast<double>(draws) * std::log1p(-1.0 / n));
}

}  // namespace cme
