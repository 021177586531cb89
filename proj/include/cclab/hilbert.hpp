#pragma once

#include <string>
#include <vector>

#include "cclab/rational.hpp"

namespace cclab {

/// 2(n-1)(4(n-1)-2), defined for n >= 2. Throws InputError otherwise.
BigInt claimed_H(const BigInt& n);

/// 4(2^k-2)(2^{k+1}-5), the same formula written at degree 2^k - 1.
BigInt claimed_H_at_power(unsigned k);

/// 4^{k-1}(k - 13/6) + 2^k - 1/3, evaluated exactly. Throws InputError for
/// k < 2 and InternalError if the value is not an integer.
BigInt S(unsigned k);

struct GrowthComparison {
  unsigned k = 0;
  BigInt degree;   // 2^k - 1
  BigInt S_k;
  BigInt claimed;  // claimed_H(2^k - 1)
  bool contradiction = false;  // S_k > claimed
};

GrowthComparison compare_growth(unsigned k);
std::vector<GrowthComparison> comparison_table(unsigned k_max);

struct ThresholdResult {
  unsigned threshold = 0;    // minimal k with S(k) > claimed
  unsigned verified_up_to = 0;  // contradiction re-checked for every k in [threshold, verified_up_to]
};

/// Ascending exact scan from k = 2.
ThresholdResult contradiction_threshold();
/// Exponential bracketing then bisection; must agree with the ascending scan.
unsigned contradiction_threshold_bisect();

/// Precision in bits for the logarithmic comparison; CCLAB_PRECISION_BITS
/// overrides the default of 80.
unsigned default_precision_bits();

struct Crossover {
  BigInt n;  // smallest n with bound(m) > q(m) for every m >= n
  unsigned precision_bits = 0;
  bool stable = false;  // same n at twice the precision
  std::string bound_at_n;
  std::string q_at_n;
  std::string bound_before;  // at n - 1, empty when n = 0
  std::string q_before;
};

/// Growth bound (n+2)^2 ln(n+2) / (2 ln 2) against q(n) = a n^2 + b n + c.
/// Throws InputError when a < 0.
Crossover hanli_crossover(const Rational& a, const Rational& b, const Rational& c, unsigned precision_bits = 0);

}  // namespace cclab
