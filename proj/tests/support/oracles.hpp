#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "hyperrad/exact.hpp"
#include "hyperrad/hypergraph.hpp"
#include "hyperrad/random.hpp"

namespace oracle {

/// Pascal's triangle with the zero extension outside 0 <= k <= n.
class PascalTable {
public:
  explicit PascalTable(int rows) : rows_(static_cast<std::size_t>(rows) + 1) {
    for (int n = 0; n <= rows; ++n) {
      rows_[n].assign(static_cast<std::size_t>(n) + 1, 1);
      for (int k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }

  hyperrad::BigInt operator()(std::int64_t n, std::int64_t k) const {
    if (k < 0 || n < k || n < 0) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

private:
  std::vector<std::vector<hyperrad::BigInt>> rows_;
};

/// (T x^{k-1})_i by enumerating every index tuple (i_2, ..., i_k) in [n]^{k-1}
/// of the dense tensor: 1/(k-1)! on orderings of edges, plus d_i on the
/// diagonal for the signless tensor.
inline Eigen::VectorXd dense_tensor_apply(const hyperrad::Hypergraph& h, hyperrad::TensorKind kind,
                                          const Eigen::VectorXd& x) {
  const int n = h.num_vertices();
  const int k = h.uniformity();
  std::set<std::vector<int>> edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto m = h.edge(e);
    edges.insert(std::vector<int>(m.begin(), m.end()));
  }
  double factorial = 1;
  for (int i = 2; i < k; ++i) factorial *= i;

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const auto& e : edges) {
    for (int v : e) ++degree[v];
  }

  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  std::vector<int> tuple(static_cast<std::size_t>(k - 1), 0);
  for (int i = 0; i < n; ++i) {
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      std::vector<int> all(tuple);
      all.push_back(i);
      double product = 1;
      for (int v : tuple) product *= x[v];
      std::sort(all.begin(), all.end());
      const bool distinct = std::adjacent_find(all.begin(), all.end()) == all.end();
      if (distinct && edges.count(all)) y[i] += product / factorial;
      if (kind == hyperrad::TensorKind::signless &&
          std::all_of(tuple.begin(), tuple.end(), [i](int v) { return v == i; })) {
        y[i] += degree[i] * product;
      }
      int pos = k - 2;
      while (pos >= 0 && tuple[pos] == n - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  }
  return y;
}

/// Random sorted non-increasing degree sequence of length n with entries in [0, max_degree].
inline std::vector<std::int64_t> random_degrees(hyperrad::Rng& rng, int n, std::int64_t max_degree) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  for (auto& v : d) v = hyperrad::uniform_between(rng, 0, max_degree);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

/// Random connected hypergraph drawn through the library generator.
inline hyperrad::Hypergraph random_connected(hyperrad::Rng& rng, int n_max, int k) {
  const int n = static_cast<int>(hyperrad::uniform_between(rng, k, n_max));
  const std::uint64_t total = hyperrad::subset_count(n, k);
  const std::uint64_t lo = std::max<std::uint64_t>(1, (n - 1 + k - 2) / (k - 1));
  const std::uint64_t hi = std::max(lo, std::min<std::uint64_t>(total, std::max<std::uint64_t>(total / 2, lo)));
  hyperrad::GenerateOptions gen;
  gen.kind = hyperrad::GenerateKind::random_m;
  gen.n = n;
  gen.k = k;
  gen.connected = true;
  for (;;) {
    gen.m = static_cast<std::uint64_t>(hyperrad::uniform_between(rng, static_cast<std::int64_t>(lo),
                                                                 static_cast<std::int64_t>(hi)));
    gen.seed = rng();
    try {
      return hyperrad::generate(gen);
    } catch (const hyperrad::HypergraphError&) {
    }
  }
}

}  // namespace oracle
