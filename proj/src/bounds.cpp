#include "hyperrad/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperrad {

namespace {

int multiplier(TensorKind kind) { return kind == TensorKind::adjacency ? 1 : 2; }

void check_shape(std::size_t n, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (n < static_cast<std::size_t>(k)) throw std::invalid_argument("degree bounds need n >= k");
}

void check_sorted(std::span<const std::int64_t> degrees) {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) throw std::invalid_argument("degrees must be nonnegative");
    if (i > 0 && degrees[i] > degrees[i - 1]) {
      throw std::invalid_argument("degree sequence must be sorted non-increasing");
    }
  }
}

BoundQuadratic quadratic_from(const Rational& degree, const Rational& spread, const Rational& A1, const Rational& A2,
                              std::int64_t s, int c) {
  const Rational cd = c * degree;
  BoundQuadratic q;
  q.linear = cd - A2 + (s - 2) * A1;
  q.constant = A1 * (cd - A2 + (s - 1) * A1 + c * spread);
  const Rational base = cd + s * A1 - A2;
  q.discriminant = base * base + 4 * c * A1 * spread;
  return q;
}

// Positive root of x^2 - L x - C.
double positive_root(const BoundQuadratic& q) {
  if (auto root = exact_sqrt(q.discriminant)) {
    return static_cast<double>(Rational((q.linear + *root) / 2));
  }
  const double root = std::sqrt(static_cast<double>(q.discriminant));
  const double linear = static_cast<double>(q.linear);
  if (linear >= 0) return (linear + root) / 2;
  // L < 0: the textbook form cancels, use the conjugate.
  return 2 * static_cast<double>(q.constant) / (root - linear);
}

BoundQuadratic quadratic_at(std::span<const std::int64_t> degrees, int k, int s, TensorKind kind,
                            const Rational& A1, const BigInt& prefix_sum) {
  const std::int64_t n = static_cast<std::int64_t>(degrees.size());
  const std::int64_t ds = degrees[static_cast<std::size_t>(s - 1)];
  const BigInt spread = prefix_sum - BigInt(s - 1) * ds;
  return quadratic_from(Rational(ds), Rational(spread), A1, a2(n, k, s), s, multiplier(kind));
}

}  // namespace

BoundQuadratic bound_quadratic(std::span<const std::int64_t> degrees, int k, int s, TensorKind kind) {
  check_shape(degrees.size(), k);
  check_sorted(degrees);
  if (s < 1 || static_cast<std::size_t>(s) > degrees.size()) {
    throw std::invalid_argument("s = " + std::to_string(s) + " outside 1.." + std::to_string(degrees.size()));
  }
  BigInt prefix = 0;
  for (int t = 0; t < s - 1; ++t) prefix += degrees[static_cast<std::size_t>(t)];
  return quadratic_at(degrees, k, s, kind, a1(static_cast<std::int64_t>(degrees.size()), k), prefix);
}

double quadratic_residual(const BoundQuadratic& q, double x) {
  const long double lx = x;
  const long double linear = static_cast<long double>(static_cast<double>(q.linear));
  const long double constant = static_cast<long double>(static_cast<double>(q.constant));
  const long double value = lx * lx - linear * lx - constant;
  const long double scale = lx * lx + std::fabs(linear * lx) + std::fabs(constant);
  if (scale == 0) return 0.0;
  return static_cast<double>(std::fabs(value) / scale);
}

double phi(std::span<const std::int64_t> degrees, int k, int s) {
  return positive_root(bound_quadratic(degrees, k, s, TensorKind::adjacency));
}

double psi(std::span<const std::int64_t> degrees, int k, int s) {
  return positive_root(bound_quadratic(degrees, k, s, TensorKind::signless));
}

BoundReport degree_bound(std::span<const std::int64_t> degrees, int k, TensorKind kind) {
  check_shape(degrees.size(), k);
  check_sorted(degrees);
  const int n = static_cast<int>(degrees.size());
  const Rational A1 = a1(n, k);

  BoundReport report;
  report.kind = kind;
  report.n = n;
  report.k = k;
  report.per_s.reserve(degrees.size());
  BigInt prefix = 0;
  for (int s = 1; s <= n; ++s) {
    const BoundQuadratic q = quadratic_at(degrees, k, s, kind, A1, prefix);
    const double value = positive_root(q);
    report.per_s.push_back({s, value});
    report.exact_quadratic_residual = std::max(report.exact_quadratic_residual, quadratic_residual(q, value));
    if (s == 1 || value < report.min_value) {
      report.min_value = value;
      report.argmin_s = s;
    }
    prefix += degrees[static_cast<std::size_t>(s - 1)];
  }
  return report;
}

BoundReport adjacency_bound(std::span<const std::int64_t> degrees, int k) {
  return degree_bound(degrees, k, TensorKind::adjacency);
}

BoundReport signless_bound(std::span<const std::int64_t> degrees, int k) {
  return degree_bound(degrees, k, TensorKind::signless);
}

CorollaryMode corollary_mode_from_string(std::string_view name) {
  if (name == "theorem-consistent") return CorollaryMode::theorem_consistent;
  if (name == "as-printed") return CorollaryMode::as_printed;
  throw std::invalid_argument("unknown corollary mode '" + std::string(name) + "'");
}

namespace {

double corollary(int n, int k, std::int64_t delta, std::int64_t m, CorollaryMode mode, TensorKind kind) {
  check_shape(static_cast<std::size_t>(std::max(n, 0)), k);
  if (delta < 0 || m < 0) throw std::invalid_argument("delta and m must be nonnegative");
  const BigInt spread = BigInt(k) * m - BigInt(n) * delta;
  if (spread < 0) throw std::invalid_argument("inconsistent inputs: k*m < n*delta");
  const Rational A2 = mode == CorollaryMode::theorem_consistent ? a2(n, k, n) : Rational(binom(n - 1, k - 2));
  return positive_root(quadratic_from(Rational(delta), Rational(spread), a1(n, k), A2, n, multiplier(kind)));
}

}  // namespace

double corollary_rho(int n, int k, std::int64_t delta, std::int64_t m, CorollaryMode mode) {
  return corollary(n, k, delta, m, mode, TensorKind::adjacency);
}

double corollary_q(int n, int k, std::int64_t delta, std::int64_t m, CorollaryMode mode) {
  return corollary(n, k, delta, m, mode, TensorKind::signless);
}

}  // namespace hyperrad
