#include "hyperrad/campaign.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperrad/bounds.hpp"
#include "hyperrad/format.hpp"
#include "hyperrad/random.hpp"

namespace hyperrad {

TrialRecord validate_instance(const Hypergraph& h, TensorKind kind, const SpectralConfig& spectral,
                              double violation_threshold) {
  const DegreeSequence degrees = degree_sequence(h);
  const BoundReport bound = degree_bound(degrees, kind);
  const SpectralEstimate<double> est = spectral_radius<double>(h, kind, spectral);

  TrialRecord record;
  record.n = h.num_vertices();
  record.k = h.uniformity();
  record.m = h.num_edges();
  record.bound = bound.min_value;
  record.computed = est.value;
  record.margin = bound.min_value - est.value;
  record.converged = est.converged;
  record.lower = est.lower;

  const double c = kind == TensorKind::adjacency ? 1.0 : 2.0;
  const double low = c * static_cast<double>(degrees.degrees.back());
  const double high = c * static_cast<double>(degrees.degrees.front());
  record.within_degree_bracket =
      est.value >= low - violation_threshold && est.value <= high + violation_threshold;
  return record;
}

namespace {

bool is_violation(const TrialRecord& r, double threshold) {
  const double reference = r.converged ? r.computed : r.lower;
  return r.bound < reference - threshold;
}

void accumulate(CampaignResult& result, const TrialRecord& record, double threshold) {
  result.records.push_back(record);
  if (!record.converged) ++result.non_converged;
  if (!record.within_degree_bracket) ++result.degree_bracket_violations;
  if (is_violation(record, threshold)) result.violations.push_back(record);
}

void finish(CampaignResult& result) {
  std::vector<double> margins;
  for (const auto& r : result.records) {
    if (r.converged) margins.push_back(r.margin);
  }
  if (margins.empty()) return;
  std::sort(margins.begin(), margins.end());
  const std::size_t mid = margins.size() / 2;
  result.margin_stats.min = margins.front();
  result.margin_stats.max = margins.back();
  result.margin_stats.median = margins.size() % 2 == 1 ? margins[mid] : (margins[mid - 1] + margins[mid]) / 2;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (config.k_values.empty()) throw std::invalid_argument("no uniformity values given");
  for (int k : config.k_values) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (std::max(config.n_min, k) > config.n_max) {
      throw std::invalid_argument("n range [" + std::to_string(config.n_min) + ", " + std::to_string(config.n_max) +
                                  "] admits no n >= k = " + std::to_string(k));
    }
  }
  config.spectral.validate();

  CampaignResult result;
  result.trials = config.trials;
  for (long t = 0; t < config.trials; ++t) {
    const std::uint64_t trial_seed = config.seed + static_cast<std::uint64_t>(t);
    Rng rng(trial_seed);
    const int k = config.k_values[uniform_below(rng, config.k_values.size())];
    const int n = static_cast<int>(uniform_between(rng, std::max(config.n_min, k), config.n_max));
    const std::uint64_t total = subset_count(n, k);
    const std::uint64_t connect = (static_cast<std::uint64_t>(n) - 1 + (k - 2)) / static_cast<std::uint64_t>(k - 1);
    const std::uint64_t lo = std::max(config.m_min.value_or(connect), std::max<std::uint64_t>(connect, 1));
    const std::uint64_t hi = std::min(config.m_max.value_or(std::max(total / 2, lo)), total);
    if (lo > hi) {
      ++result.skipped;
      continue;
    }

    GenerateOptions gen;
    gen.kind = GenerateKind::random_m;
    gen.n = n;
    gen.k = k;
    gen.m = static_cast<std::uint64_t>(uniform_between(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    gen.seed = rng();
    gen.connected = true;

    std::optional<Hypergraph> h;
    try {
      h.emplace(generate(gen));
    } catch (const HypergraphError&) {
      ++result.skipped;
      continue;
    }

    TrialRecord record = validate_instance(*h, config.kind, config.spectral, config.violation_threshold);
    record.trial = t;
    record.seed = gen.seed;
    accumulate(result, record, config.violation_threshold);
  }
  finish(result);
  return result;
}

CampaignResult single_instance_campaign(const Hypergraph& h, TensorKind kind, const SpectralConfig& spectral,
                                        double violation_threshold) {
  CampaignResult result;
  result.trials = 1;
  const TrialRecord record = validate_instance(h, kind, spectral, violation_threshold);
  accumulate(result, record, violation_threshold);
  finish(result);
  return result;
}

nlohmann::ordered_json to_json(const CampaignResult& result, TensorKind kind) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const auto& v : result.violations) {
    violations.push_back({{"trial", v.trial},
                          {"seed", v.seed},
                          {"n", v.n},
                          {"k", v.k},
                          {"m", v.m},
                          {"bound", round_for_print(v.bound)},
                          {"computed", round_for_print(v.computed)},
                          {"margin", round_for_print(v.margin)},
                          {"converged", v.converged}});
  }
  nlohmann::ordered_json out;
  out["kind"] = std::string(to_string(kind));
  out["trials"] = result.trials;
  out["violations"] = std::move(violations);
  out["margin_stats"] = {{"min", round_for_print(result.margin_stats.min)},
                         {"median", round_for_print(result.margin_stats.median)},
                         {"max", round_for_print(result.margin_stats.max)}};
  out["non_converged"] = result.non_converged;
  out["skipped"] = result.skipped;
  out["degree_bracket_violations"] = result.degree_bracket_violations;
  return out;
}

}  // namespace hyperrad
