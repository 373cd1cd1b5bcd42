#include <cmath>

#include "doctest.h"
#include "hyperrad/campaign.hpp"

using namespace hyperrad;

TEST_CASE("validate_instance flags the signless discrepancy on P3") {
  const Hypergraph p3 = parse("3 2 2\n1 2\n2 3");
  const CampaignResult result = single_instance_campaign(p3, TensorKind::signless, {});
  REQUIRE(result.violations.size() == 1);
  const TrialRecord& v = result.violations.front();
  CHECK(v.bound == doctest::Approx((1 + std::sqrt(17.0)) / 2).epsilon(1e-12));
  CHECK(std::fabs(v.computed - 3.0) < 1e-6);
  CHECK(v.margin < 0);

  const CampaignResult adjacency = single_instance_campaign(p3, TensorKind::adjacency, {});
  CHECK(adjacency.violations.empty());
  CHECK(adjacency.margin_stats.min == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("campaign bookkeeping") {
  CampaignConfig config;
  config.kind = TensorKind::adjacency;
  config.n_max = 8;
  config.k_values = {2, 3};
  config.trials = 30;
  config.seed = 42;
  const CampaignResult result = run_campaign(config);
  CHECK(result.trials == 30);
  CHECK(result.records.size() + static_cast<std::size_t>(result.skipped) == 30);
  CHECK(result.violations.empty());
  CHECK(result.non_converged == 0);
  CHECK(result.degree_bracket_violations == 0);
  CHECK(result.margin_stats.min >= -1e-6);
  CHECK(result.margin_stats.min <= result.margin_stats.median);
  CHECK(result.margin_stats.median <= result.margin_stats.max);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& r = result.records[i];
    GenerateOptions gen;
    gen.kind = GenerateKind::random_m;
    gen.n = r.n;
    gen.k = r.k;
    gen.m = r.m;
    gen.seed = r.seed;
    gen.connected = true;
    const TrialRecord again = validate_instance(generate(gen), config.kind, config.spectral);
    CHECK(again.computed == r.computed);
    CHECK(again.bound == r.bound);
    CHECK(r.n >= r.k);
    CHECK(r.n <= 8);
    if (i > 0) CHECK(r.trial > result.records[i - 1].trial);
  }

  // Same config, same output.
  CHECK(to_json(run_campaign(config), config.kind).dump() == to_json(result, config.kind).dump());
}

TEST_CASE("signless campaigns surface violations rather than hiding them") {
  CampaignConfig config;
  config.kind = TensorKind::signless;
  config.n_max = 6;
  config.k_values = {2};
  config.trials = 40;
  const CampaignResult result = run_campaign(config);
  const auto j = to_json(result, config.kind);
  CHECK(j["violations"].size() == result.violations.size());
  for (const auto& v : result.violations) CHECK(v.bound < v.computed - 1e-6);
}

TEST_CASE("campaign config errors") {
  CampaignConfig config;
  config.trials = 0;
  CHECK_THROWS_AS(run_campaign(config), std::invalid_argument);
  config.trials = 1;
  config.k_values = {5};
  config.n_max = 4;
  CHECK_THROWS_AS(run_campaign(config), std::invalid_argument);
  config.k_values = {};
  CHECK_THROWS_AS(run_campaign(config), std::invalid_argument);
}

TEST_CASE("infeasible edge windows are skipped and counted") {
  CampaignConfig config;
  config.n_min = 6;
  config.n_max = 6;
  config.k_values = {2};
  config.m_max = 3;  // 6 vertices need 5 edges
  config.trials = 5;
  const CampaignResult result = run_campaign(config);
  CHECK(result.skipped == 5);
  CHECK(result.records.empty());
}
