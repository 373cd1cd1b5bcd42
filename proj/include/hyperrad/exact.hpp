#pragma once

#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperrad {

using BigInt = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient extended by zero: C(n,k) = 0 when n < k or k < 0.
BigInt binom(std::int64_t n, std::int64_t k);

/// C(n-2, k-2) / (k-1). Requires k >= 2.
Rational a1(std::int64_t n, std::int64_t k);

/// sum_{r=0}^{k-2} (r+1)/(k-1) C(s-1, r+1) C(n-s, k-r-2). Requires k >= 2 and
/// 1 <= s <= n.
Rational a2(std::int64_t n, std::int64_t k, std::int64_t s);

/// Exact square root when x is the square of a rational, otherwise nullopt.
std::optional<Rational> exact_sqrt(const Rational& x);

/// The three members of the binomial identity
///   sum_r C(s-3, k-r-2) C(n-s+1, r) = sum_p C(s-2, p-1) C(n-p, k-p-1) = C(n-2, k-2).
/// Both equalities are reported; neither is asserted.
struct IdentityReport {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t k = 0;
  BigInt first;
  BigInt middle;
  BigInt third;
  bool first_equals_third = false;
  bool middle_equals_third = false;
};

/// Requires n > s >= 3 and k >= 2.
IdentityReport check_identity_eq2(std::int64_t n, std::int64_t s, std::int64_t k);

/// sum_r (r+1) C(s-1,r+1) C(n-s,k-r-2) against
/// sum_r (k-1-r) C(s-2,k-r-1) C(n-s+1,r) + C(n-2,k-2).
struct DerivativeIdentityReport {
  std::int64_t n = 0;
  std::int64_t s = 0;
  std::int64_t k = 0;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

/// Requires n >= s >= 3 and k >= 2.
DerivativeIdentityReport check_identity_eq3(std::int64_t n, std::int64_t s, std::int64_t k);

}  // namespace hyperrad
