#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "hyperrad/hypergraph.hpp"

namespace hyperrad {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct SpectralConfig {
  double tolerance = 1e-10;       // stop once the bracket is narrower than this
  long max_iterations = 1'000'000;
  double shift = 1.0;             // diagonal shift that makes the iteration primitive

  void validate() const {
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (!(shift > 0)) throw std::invalid_argument("shift must be positive");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be positive");
  }
};

/// Result of a bracketed power iteration. lower/upper are Collatz-Wielandt
/// bounds, each certified by a positive iterate; value is their midpoint.
template <typename Scalar = double>
struct SpectralEstimate {
  Scalar lower = 0;
  Scalar upper = 0;
  Scalar value = 0;
  long iterations = 0;
  bool converged = false;
  Vector<Scalar> eigenvector;  // max-norm 1 per component, zero on isolated vertices
  int component_count = 1;
};

/// Called once per iterate with (iteration, lower, upper).
template <typename Scalar>
using BracketObserver = std::function<void(long, Scalar, Scalar)>;

namespace detail {

template <typename Scalar>
void check_operand(const Hypergraph& h, const Eigen::Ref<const Vector<Scalar>>& x, const char* name) {
  if (x.size() != h.num_vertices()) {
    throw std::invalid_argument(std::string(name) + " has length " + std::to_string(x.size()) + ", expected " +
                                std::to_string(h.num_vertices()));
  }
  if (!(x.array() > Scalar(0)).all()) throw std::invalid_argument(std::string(name) + " must be strictly positive");
}

template <typename Scalar>
Vector<Scalar> power_entries(const Eigen::Ref<const Vector<Scalar>>& x, int exponent) {
  Vector<Scalar> out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Scalar p = 1;
    for (int e = 0; e < exponent; ++e) p *= x[i];
    out[i] = p;
  }
  return out;
}

// Factors below this make full-product division unreliable.
template <typename Scalar>
constexpr Scalar kDivisionFloor = Scalar(1e-150);

template <typename Scalar>
Vector<Scalar> adjacency_product(const Hypergraph& h, const Eigen::Ref<const Vector<Scalar>>& x) {
  const int k = h.uniformity();
  Vector<Scalar> y = Vector<Scalar>::Zero(h.num_vertices());
  Scalar prefix[64];
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    const auto members = h.edge(e);
    Scalar full = 1;
    bool safe = true;
    for (int v : members) {
      full *= x[v];
      safe = safe && x[v] >= kDivisionFloor<Scalar>;
    }
    if (safe || k > 64) {
      for (int v : members) y[v] += full / x[v];
      continue;
    }
    // Leave-one-out products from prefix and suffix runs.
    prefix[0] = 1;
    for (int i = 1; i < k; ++i) prefix[i] = prefix[i - 1] * x[members[i - 1]];
    Scalar suffix = 1;
    for (int i = k - 1; i >= 0; --i) {
      y[members[i]] += prefix[i] * suffix;
      suffix *= x[members[i]];
    }
  }
  return y;
}

}  // namespace detail

/// y_i = sum over edges e containing i of prod_{j in e, j != i} x_j, which is
/// (A x^{k-1})_i for the adjacency tensor with entries 1/(k-1)! on edges.
template <typename Scalar>
Vector<Scalar> apply_adjacency(const Hypergraph& h, const Eigen::Ref<const Vector<Scalar>>& x) {
  detail::check_operand<Scalar>(h, x, "x");
  return detail::adjacency_product<Scalar>(h, x);
}

/// (Q x^{k-1})_i = d_i x_i^{k-1} + (A x^{k-1})_i.
template <typename Scalar>
Vector<Scalar> apply_signless(const Hypergraph& h, const Eigen::Ref<const Vector<Scalar>>& x) {
  detail::check_operand<Scalar>(h, x, "x");
  Vector<Scalar> y = detail::adjacency_product<Scalar>(h, x);
  const Vector<Scalar> powered = detail::power_entries<Scalar>(x, h.uniformity() - 1);
  const auto& degrees = h.vertex_degrees();
  for (Eigen::Index i = 0; i < y.size(); ++i) y[i] += static_cast<Scalar>(degrees[i]) * powered[i];
  return y;
}

template <typename Scalar>
Vector<Scalar> apply_tensor(const Hypergraph& h, TensorKind kind, const Eigen::Ref<const Vector<Scalar>>& x) {
  return kind == TensorKind::adjacency ? apply_adjacency<Scalar>(h, x) : apply_signless<Scalar>(h, x);
}

/// The tensor conjugated by diag(z), applied to x:
///   y_i = [T (z .* x)^{k-1}]_i / z_i^{k-1}.
/// Conjugation preserves the spectrum.
template <typename Scalar>
Vector<Scalar> scaled_apply(const Hypergraph& h, TensorKind kind, const Eigen::Ref<const Vector<Scalar>>& z,
                            const Eigen::Ref<const Vector<Scalar>>& x) {
  detail::check_operand<Scalar>(h, z, "z");
  detail::check_operand<Scalar>(h, x, "x");
  const Vector<Scalar> zx = z.cwiseProduct(x);
  Vector<Scalar> y = apply_tensor<Scalar>(h, kind, zx);
  return y.cwiseQuotient(detail::power_entries<Scalar>(z, h.uniformity() - 1));
}

/// Collatz-Wielandt bracket min_i / max_i of (T x^{k-1})_i / x_i^{k-1}. For
/// any positive x the spectral radius lies inside it.
template <typename Scalar>
std::pair<Scalar, Scalar> cw_bracket(const Hypergraph& h, TensorKind kind, const Eigen::Ref<const Vector<Scalar>>& x) {
  const Vector<Scalar> y = apply_tensor<Scalar>(h, kind, x);
  const Vector<Scalar> ratios = y.cwiseQuotient(detail::power_entries<Scalar>(x, h.uniformity() - 1));
  return {ratios.minCoeff(), ratios.maxCoeff()};
}

/// Shifted power iteration on any operator x -> T x^{k-1} of a weakly
/// irreducible nonnegative tensor:
///   x <- normalize((T x^{k-1} + shift x^{k-1})^{[1/(k-1)]}).
/// Each iterate contributes a Collatz-Wielandt bracket; the running
/// intersection is reported and iteration stops when it is below tolerance.
template <typename Scalar, typename Apply>
SpectralEstimate<Scalar> bracketed_power_iteration(Apply&& apply, Eigen::Index n, int k, const SpectralConfig& config,
                                                   const BracketObserver<Scalar>& observer = {}) {
  config.validate();
  const Scalar shift = static_cast<Scalar>(config.shift);
  const Scalar tolerance = static_cast<Scalar>(config.tolerance);
  const Scalar floor = std::numeric_limits<Scalar>::min();

  SpectralEstimate<Scalar> est;
  Vector<Scalar> x = Vector<Scalar>::Ones(n);
  Scalar lower = -std::numeric_limits<Scalar>::infinity();
  Scalar upper = std::numeric_limits<Scalar>::infinity();

  for (long it = 0; it < config.max_iterations; ++it) {
    const Vector<Scalar> y = apply(x);
    const Vector<Scalar> powered = detail::power_entries<Scalar>(x, k - 1);
    const Vector<Scalar> ratios = y.cwiseQuotient(powered);
    const Scalar lo = ratios.minCoeff();
    const Scalar hi = ratios.maxCoeff();
    if (observer) observer(it, lo, hi);
    lower = std::max(lower, lo);
    upper = std::min(upper, hi);
    est.iterations = it + 1;
    est.eigenvector = x;
    if (upper - lower < tolerance) {
      est.converged = true;
      break;
    }

    Vector<Scalar> next = y + shift * powered;
    if (k == 3) {
      next = next.cwiseSqrt();
    } else if (k > 3) {
      const Scalar inv = Scalar(1) / Scalar(k - 1);
      next = next.unaryExpr([inv](Scalar v) { return std::pow(v, inv); });
    }
    next /= next.maxCoeff();
    x = next.cwiseMax(floor);
  }

  // Rounding can cross the bounds over by an ulp once they meet.
  if (lower > upper) std::swap(lower, upper);
  est.lower = lower;
  est.upper = upper;
  est.value = lower + (upper - lower) / 2;
  return est;
}

/// Power iteration on a connected hypergraph. An edgeless hypergraph gives 0
/// without iterating; a disconnected one with edges is rejected (use
/// spectral_radius).
template <typename Scalar = double>
SpectralEstimate<Scalar> power_iteration(const Hypergraph& h, TensorKind kind, const SpectralConfig& config = {},
                                         const BracketObserver<Scalar>& observer = {}) {
  config.validate();
  if (h.num_edges() == 0) {
    SpectralEstimate<Scalar> est;
    est.converged = true;
    est.eigenvector = Vector<Scalar>::Zero(h.num_vertices());
    est.component_count = h.num_vertices();
    return est;
  }
  if (components(h).count != 1) throw std::invalid_argument("power_iteration requires a connected hypergraph");
  auto apply = [&](const Vector<Scalar>& x) { return apply_tensor<Scalar>(h, kind, x); };
  return bracketed_power_iteration<Scalar>(apply, h.num_vertices(), h.uniformity(), config, observer);
}

/// Power iteration through the operator conjugated by diag(z).
template <typename Scalar = double>
SpectralEstimate<Scalar> power_iteration_scaled(const Hypergraph& h, TensorKind kind,
                                                const Eigen::Ref<const Vector<Scalar>>& z,
                                                const SpectralConfig& config = {}) {
  if (h.num_edges() == 0 || components(h).count != 1) {
    throw std::invalid_argument("power_iteration_scaled requires a connected hypergraph with edges");
  }
  const Vector<Scalar> scale = z;
  auto apply = [&](const Vector<Scalar>& x) { return scaled_apply<Scalar>(h, kind, scale, x); };
  return bracketed_power_iteration<Scalar>(apply, h.num_vertices(), h.uniformity(), config);
}

/// Spectral radius of the adjacency or signless Laplacian tensor of any
/// hypergraph: the maximum over connected components. Isolated vertices
/// contribute 0.
template <typename Scalar = double>
SpectralEstimate<Scalar> spectral_radius(const Hypergraph& h, TensorKind kind, const SpectralConfig& config = {}) {
  config.validate();
  const ComponentPartition parts = components(h);

  SpectralEstimate<Scalar> total;
  total.converged = true;
  total.component_count = parts.count;
  total.eigenvector = Vector<Scalar>::Zero(h.num_vertices());

  std::vector<int> vertices;
  for (int root = 0; root < h.num_vertices(); ++root) {
    if (parts.component_of[root] != root) continue;
    const Hypergraph sub = component_subgraph(h, parts, root, vertices);
    if (sub.num_edges() == 0) continue;
    const SpectralEstimate<Scalar> est = power_iteration<Scalar>(sub, kind, config);
    for (std::size_t i = 0; i < vertices.size(); ++i) total.eigenvector[vertices[i]] = est.eigenvector[i];
    total.lower = std::max(total.lower, est.lower);
    total.upper = std::max(total.upper, est.upper);
    total.value = std::max(total.value, est.value);
    total.iterations += est.iterations;
    total.converged = total.converged && est.converged;
  }
  return total;
}

/// Dominant eigenvalue of the adjacency or signless Laplacian matrix of a
/// graph (k = 2) by repeated squaring of the shifted matrix followed by a
/// Rayleigh quotient. Shares no code with the tensor power iteration.
double matrix_oracle(const Hypergraph& h, TensorKind kind);

/// The dense n x n matrix of a 2-uniform hypergraph.
Eigen::MatrixXd graph_matrix(const Hypergraph& h, TensorKind kind);

}  // namespace hyperrad
