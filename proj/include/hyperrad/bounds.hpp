#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hyperrad/exact.hpp"
#include "hyperrad/hypergraph.hpp"

namespace hyperrad {

/// Upper bounds on the adjacency spectral radius rho(H) and the signless
/// Laplacian spectral radius q(H) of a k-uniform hypergraph from its sorted
/// degree sequence d_1 >= ... >= d_n.
///
/// For s = 1..n, with A1 = C(n-2,k-2)/(k-1), A2 = A2(n,k,s),
/// S = sum_{t<s} (d_t - d_s) and c = 1 (adjacency) or c = 2 (signless):
///
///   bound_s = ( c d_s - A2 + (s-2) A1 + sqrt((c d_s + s A1 - A2)^2 + 4 c A1 S) ) / 2
///
/// c = 1 gives phi_s, c = 2 gives psi_s. bound_s is the nonnegative root of
///   x^2 - L x - C = 0,  L = c d_s - A2 + (s-2) A1,  C = A1 (c d_s - A2 + (s-1) A1 + c S).
/// Everything up to the final square root is exact; when the discriminant is
/// a rational square the root is exact too.

/// Exact coefficients of the quadratic whose positive root is bound_s.
struct BoundQuadratic {
  Rational linear;        // L
  Rational constant;      // C
  Rational discriminant;  // L^2 + 4C, equal to the closed-form Delta / Theta
};

BoundQuadratic bound_quadratic(std::span<const std::int64_t> degrees, int k, int s, TensorKind kind);

/// |x^2 - L x - C| relative to the magnitude of its terms.
double quadratic_residual(const BoundQuadratic& q, double x);

/// phi_s. Throws std::invalid_argument for s outside 1..n, unsorted degrees,
/// k < 2 or n < k.
double phi(std::span<const std::int64_t> degrees, int k, int s);
/// psi_s, with the same preconditions as phi.
double psi(std::span<const std::int64_t> degrees, int k, int s);

struct BoundValue {
  int s = 0;
  double value = 0.0;
};

struct BoundReport {
  TensorKind kind = TensorKind::adjacency;
  int n = 0;
  int k = 0;
  std::vector<BoundValue> per_s;
  int argmin_s = 0;  // ties go to the smallest s
  double min_value = 0.0;
  double exact_quadratic_residual = 0.0;  // max over s
};

BoundReport adjacency_bound(std::span<const std::int64_t> degrees, int k);
BoundReport signless_bound(std::span<const std::int64_t> degrees, int k);
BoundReport degree_bound(std::span<const std::int64_t> degrees, int k, TensorKind kind);
inline BoundReport degree_bound(const DegreeSequence& d, TensorKind kind) { return degree_bound(d.degrees, d.k, kind); }

enum class CorollaryMode {
  /// bound_n with d_n = delta and S = k m - n delta; uses A2(s=n) = C(n-1,k-1).
  theorem_consistent,
  /// The closed form with C(n-1,k-2) in place of A2(s=n).
  as_printed,
};

CorollaryMode corollary_mode_from_string(std::string_view name);

/// Bounds from minimum degree delta and edge count m alone. Throws
/// std::invalid_argument when k m < n delta, delta < 0, k < 2 or n < k.
double corollary_rho(int n, int k, std::int64_t delta, std::int64_t m,
                     CorollaryMode mode = CorollaryMode::theorem_consistent);
double corollary_q(int n, int k, std::int64_t delta, std::int64_t m,
                   CorollaryMode mode = CorollaryMode::theorem_consistent);

}  // namespace hyperrad
