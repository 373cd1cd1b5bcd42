#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "json.hpp"

#include "hyperrad/hypergraph.hpp"
#include "hyperrad/spectral.hpp"

namespace hyperrad {

/// Randomized check of min_s bound_s >= spectral radius.
///
/// Trial t draws from an RNG seeded with seed + t: a uniformity k from
/// k_values, n in [max(n_min, k), n_max], then m in the feasible window
/// [max(m_min, ceil((n-1)/(k-1))), min(m_max, C(n,k))] with m_max defaulting
/// to half of C(n,k), and a connected random-m hypergraph.
struct CampaignConfig {
  TensorKind kind = TensorKind::adjacency;
  int n_min = 2;
  int n_max = 12;
  std::vector<int> k_values{3};
  std::optional<std::uint64_t> m_min;
  std::optional<std::uint64_t> m_max;
  long trials = 100;
  std::uint64_t seed = 1;
  SpectralConfig spectral;
  double violation_threshold = 1e-6;
};

struct TrialRecord {
  long trial = 0;
  std::uint64_t seed = 0;  // generator seed: gen random-m --n n --k k --m m --seed seed --connected
  int n = 0;
  int k = 0;
  std::uint64_t m = 0;
  double bound = 0;
  double computed = 0;
  double margin = 0;  // bound - computed
  double lower = 0;   // certified lower bracket of the radius
  bool converged = false;
  /// The computed radius sits in [c d_n, c d_1] (c = 1 adjacency, 2 signless)
  /// up to the violation threshold.
  bool within_degree_bracket = true;
};

struct MarginStats {
  double min = 0;
  double median = 0;
  double max = 0;
};

struct CampaignResult {
  long trials = 0;
  /// Trials where bound < computed - threshold. For a trial that did not
  /// converge the certified lower bracket stands in for computed.
  std::vector<TrialRecord> violations;
  MarginStats margin_stats;  // over converged trials only
  long non_converged = 0;
  long skipped = 0;  // generation failures
  long degree_bracket_violations = 0;
  std::vector<TrialRecord> records;
};

/// Checks one fixed hypergraph.
TrialRecord validate_instance(const Hypergraph& h, TensorKind kind, const SpectralConfig& spectral,
                              double violation_threshold = 1e-6);

CampaignResult run_campaign(const CampaignConfig& config);

/// Wraps a single fixed-instance check in a one-trial result.
CampaignResult single_instance_campaign(const Hypergraph& h, TensorKind kind, const SpectralConfig& spectral,
                                        double violation_threshold = 1e-6);

/// {kind, trials, violations:[...], margin_stats:{...}, non_converged, skipped,
///  degree_bracket_violations}; reals rounded for printing.
nlohmann::ordered_json to_json(const CampaignResult& result, TensorKind kind);

}  // namespace hyperrad
