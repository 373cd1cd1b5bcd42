#include "hyperrad/exact.hpp"

#include <stdexcept>
#include <string>

namespace hyperrad {

BigInt binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  const std::int64_t j = std::min(k, n - k);
  BigInt result = 1;
  // After step i the running value is C(n-j+i, i), so each division is exact.
  for (std::int64_t i = 1; i <= j; ++i) {
    result *= n - j + i;
    result /= i;
  }
  return result;
}

Rational a1(std::int64_t n, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("a1 requires k >= 2");
  return Rational(binom(n - 2, k - 2), BigInt(k - 1));
}

Rational a2(std::int64_t n, std::int64_t k, std::int64_t s) {
  if (k < 2) throw std::invalid_argument("a2 requires k >= 2");
  if (s < 1 || s > n) {
    throw std::invalid_argument("a2 requires 1 <= s <= n, got s = " + std::to_string(s));
  }
  BigInt sum = 0;
  for (std::int64_t r = 0; r <= k - 2; ++r) sum += (r + 1) * binom(s - 1, r + 1) * binom(n - s, k - r - 2);
  return Rational(sum, BigInt(k - 1));
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  const BigInt num_root = boost::multiprecision::sqrt(num);
  const BigInt den_root = boost::multiprecision::sqrt(den);
  if (num_root * num_root != num || den_root * den_root != den) return std::nullopt;
  return Rational(num_root, den_root);
}

IdentityReport check_identity_eq2(std::int64_t n, std::int64_t s, std::int64_t k) {
  if (!(n > s && s >= 3) || k < 2) {
    throw std::invalid_argument("identity (2) requires n > s >= 3 and k >= 2");
  }
  IdentityReport report{n, s, k, 0, 0, 0, false, false};
  for (std::int64_t r = 0; r <= k - 2; ++r) report.first += binom(s - 3, k - r - 2) * binom(n - s + 1, r);
  for (std::int64_t p = 1; p <= k - 1; ++p) report.middle += binom(s - 2, p - 1) * binom(n - p, k - p - 1);
  report.third = binom(n - 2, k - 2);
  report.first_equals_third = report.first == report.third;
  report.middle_equals_third = report.middle == report.third;
  return report;
}

DerivativeIdentityReport check_identity_eq3(std::int64_t n, std::int64_t s, std::int64_t k) {
  if (!(n >= s && s >= 3) || k < 2) {
    throw std::invalid_argument("identity (3) requires n >= s >= 3 and k >= 2");
  }
  DerivativeIdentityReport report{n, s, k, 0, 0, false};
  for (std::int64_t r = 0; r <= k - 2; ++r) {
    report.lhs += (r + 1) * binom(s - 1, r + 1) * binom(n - s, k - r - 2);
    report.rhs += (k - 1 - r) * binom(s - 2, k - r - 1) * binom(n - s + 1, r);
  }
  report.rhs += binom(n - 2, k - 2);
  report.holds = report.lhs == report.rhs;
  return report;
}

}  // namespace hyperrad
