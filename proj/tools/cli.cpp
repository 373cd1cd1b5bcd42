#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperrad/bounds.hpp"
#include "hyperrad/campaign.hpp"
#include "hyperrad/exact.hpp"
#include "hyperrad/format.hpp"
#include "hyperrad/hypergraph.hpp"
#include "hyperrad/spectral.hpp"

namespace hyperrad::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string format = "json";
  std::string out;
  std::string kind = "adjacency";
  double tol = 1e-10;
  long max_iter = 1'000'000;
  double shift = 1.0;
  std::uint64_t seed = 1;

  // validate
  int n_min = 2;
  int n_max = 12;
  std::vector<int> k_values{3};
  std::int64_t m_min = -1;
  std::int64_t m_max = -1;
  long trials = 100;
  double threshold = 1e-6;
  std::string input;

  // identities
  int identities_n_max = 25;
  int identities_k_max = 8;

  // gen
  std::string gen_kind;
  int n = 0;
  int k = 2;
  std::uint64_t m = 0;
  bool connected = false;
};

/// Writes the whole report at once; with --out it goes through a temporary
/// file so a failure never leaves a partial file behind.
void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(opt.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + tmp.string());
    file << text;
    if (!file.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return Json(static_cast<std::uint64_t>(value));
  }
  return Json(value.str());
}

SpectralConfig spectral_config(const Options& opt) {
  SpectralConfig config;
  config.tolerance = opt.tol;
  config.max_iterations = opt.max_iter;
  config.shift = opt.shift;
  return config;
}

int cmd_bounds(const Options& opt, std::ostream& out) {
  const Hypergraph h = read_hypergraph(opt.file);
  const BoundReport report = degree_bound(degree_sequence(h), tensor_kind_from_string(opt.kind));

  std::string text;
  if (opt.format == "csv") {
    text = "s,value\n";
    for (const auto& v : report.per_s) text += std::to_string(v.s) + ',' + format_real(v.value) + '\n';
    text += "argmin=" + std::to_string(report.argmin_s) + ',' + format_real(report.min_value) + '\n';
  } else {
    Json per_s = Json::array();
    for (const auto& v : report.per_s) per_s.push_back({{"s", v.s}, {"value", round_for_print(v.value)}});
    Json j;
    j["kind"] = std::string(to_string(report.kind));
    j["n"] = report.n;
    j["k"] = report.k;
    j["per_s"] = std::move(per_s);
    j["argmin_s"] = report.argmin_s;
    j["min_value"] = round_for_print(report.min_value);
    text = j.dump(2) + '\n';
  }
  emit(opt, text, out);
  return kExitOk;
}

int cmd_spectral(const Options& opt, TensorKind kind, std::ostream& out) {
  const Hypergraph h = read_hypergraph(opt.file);
  const SpectralEstimate<double> est = spectral_radius<double>(h, kind, spectral_config(opt));

  std::string text;
  if (opt.format == "csv") {
    text = "operator,n,k,m,value,lower,upper,iterations,converged,component_count\n";
    text += std::string(to_string(kind)) + ',' + std::to_string(h.num_vertices()) + ',' +
            std::to_string(h.uniformity()) + ',' + std::to_string(h.num_edges()) + ',' + format_real(est.value) +
            ',' + format_real(est.lower) + ',' + format_real(est.upper) + ',' + std::to_string(est.iterations) +
            ',' + (est.converged ? "true" : "false") + ',' + std::to_string(est.component_count) + '\n';
  } else {
    Json j;
    j["operator"] = std::string(to_string(kind));
    j["n"] = h.num_vertices();
    j["k"] = h.uniformity();
    j["m"] = h.num_edges();
    j["value"] = round_for_print(est.value);
    j["lower"] = round_for_print(est.lower);
    j["upper"] = round_for_print(est.upper);
    j["iterations"] = est.iterations;
    j["converged"] = est.converged;
    j["component_count"] = est.component_count;
    text = j.dump(2) + '\n';
  }
  emit(opt, text, out);
  return est.converged ? kExitOk : kExitNotConverged;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  const TensorKind kind = tensor_kind_from_string(opt.kind);
  CampaignResult result;
  if (!opt.input.empty()) {
    result = single_instance_campaign(read_hypergraph(opt.input), kind, spectral_config(opt), opt.threshold);
  } else {
    CampaignConfig config;
    config.kind = kind;
    config.n_min = opt.n_min;
    config.n_max = opt.n_max;
    config.k_values = opt.k_values;
    if (opt.m_min >= 0) config.m_min = static_cast<std::uint64_t>(opt.m_min);
    if (opt.m_max >= 0) config.m_max = static_cast<std::uint64_t>(opt.m_max);
    config.trials = opt.trials;
    config.seed = opt.seed;
    config.spectral = spectral_config(opt);
    config.violation_threshold = opt.threshold;
    result = run_campaign(config);
  }

  std::string text;
  if (opt.format == "csv") {
    text = "trial,seed,n,k,m,bound,computed,margin,converged\n";
    for (const auto& v : result.violations) {
      text += std::to_string(v.trial) + ',' + std::to_string(v.seed) + ',' + std::to_string(v.n) + ',' +
              std::to_string(v.k) + ',' + std::to_string(v.m) + ',' + format_real(v.bound) + ',' +
              format_real(v.computed) + ',' + format_real(v.margin) + ',' + (v.converged ? "true" : "false") + '\n';
    }
  } else {
    text = to_json(result, kind).dump(2) + '\n';
  }
  emit(opt, text, out);
  return result.violations.empty() ? kExitOk : kExitViolations;
}

int cmd_identities(const Options& opt, std::ostream& out) {
  if (opt.identities_n_max < 4) throw std::invalid_argument("--n-max must be at least 4");
  if (opt.identities_k_max < 2) throw std::invalid_argument("--k-max must be at least 2");

  bool all_hold = true;
  long middle_mismatches = 0;
  std::string csv = "n,s,k,first,middle,third,first_eq_third,middle_eq_third,eq3\n";
  Json rows = Json::array();
  for (int n = 4; n <= opt.identities_n_max; ++n) {
    for (int s = 3; s < n; ++s) {
      for (int k = 2; k <= opt.identities_k_max; ++k) {
        const IdentityReport eq2 = check_identity_eq2(n, s, k);
        const DerivativeIdentityReport eq3 = check_identity_eq3(n, s, k);
        all_hold = all_hold && eq2.first_equals_third && eq3.holds;
        if (!eq2.middle_equals_third) ++middle_mismatches;
        if (opt.format == "csv") {
          csv += std::to_string(n) + ',' + std::to_string(s) + ',' + std::to_string(k) + ',' + eq2.first.str() + ',' +
                 eq2.middle.str() + ',' + eq2.third.str() + ',' + (eq2.first_equals_third ? "true" : "false") + ',' +
                 (eq2.middle_equals_third ? "true" : "false") + ',' + (eq3.holds ? "true" : "false") + '\n';
        } else {
          rows.push_back({{"n", n},
                          {"s", s},
                          {"k", k},
                          {"first", big_to_json(eq2.first)},
                          {"middle", big_to_json(eq2.middle)},
                          {"third", big_to_json(eq2.third)},
                          {"first_eq_third", eq2.first_equals_third},
                          {"middle_eq_third", eq2.middle_equals_third},
                          {"eq3", eq3.holds}});
        }
      }
    }
  }

  if (opt.format == "csv") {
    emit(opt, csv, out);
  } else {
    Json j;
    j["rows"] = std::move(rows);
    j["all_hold"] = all_hold;
    j["middle_mismatches"] = middle_mismatches;
    emit(opt, j.dump(2) + '\n', out);
  }
  return all_hold ? kExitOk : kExitCheckFailed;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  GenerateOptions gen;
  gen.kind = generate_kind_from_string(opt.gen_kind);
  gen.n = opt.n;
  gen.k = opt.k;
  gen.m = opt.m;
  gen.seed = opt.seed;
  gen.connected = opt.connected;
  emit(opt, serialize(generate(gen)), out);
  return kExitOk;
}

void add_format(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opt.out, "Write the report to this path instead of stdout");
}

void add_spectral(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tol", opt.tol, "Bracket-gap tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", opt.max_iter, "Iteration cap per component")->check(CLI::PositiveNumber);
  cmd->add_option("--shift", opt.shift, "Diagonal shift of the iteration")->check(CLI::PositiveNumber);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Degree-sequence spectral bounds for uniform hypergraphs", "hyperrad"};
  app.require_subcommand(1);

  auto* bounds = app.add_subcommand("bounds", "Degree-sequence upper bounds for a hypergraph file");
  bounds->add_option("file", opt.file, "Hypergraph file")->required();
  bounds->add_option("--kind", opt.kind, "Tensor")->check(CLI::IsMember({"adjacency", "signless"}));
  add_format(bounds, opt);

  auto* rho = app.add_subcommand("rho", "Adjacency spectral radius");
  auto* q = app.add_subcommand("q", "Signless Laplacian spectral radius");
  for (auto* cmd : {rho, q}) {
    cmd->add_option("file", opt.file, "Hypergraph file")->required();
    add_spectral(cmd, opt);
    add_format(cmd, opt);
  }

  auto* validate = app.add_subcommand("validate", "Randomized check of the degree bound against the spectral radius");
  validate->add_option("--kind", opt.kind, "Tensor")->check(CLI::IsMember({"adjacency", "signless"}));
  validate->add_option("--n", opt.n_max, "Largest vertex count");
  validate->add_option("--n-min", opt.n_min, "Smallest vertex count");
  validate->add_option("--k", opt.k_values, "Uniformities to draw from, comma separated")->delimiter(',');
  validate->add_option("--m-min", opt.m_min, "Smallest edge count");
  validate->add_option("--m-max", opt.m_max, "Largest edge count (default: half of C(n,k))");
  validate->add_option("--trials", opt.trials, "Number of trials")->check(CLI::PositiveNumber);
  validate->add_option("--seed", opt.seed, "Base seed; trial t uses seed + t");
  validate->add_option("--threshold", opt.threshold, "Violation threshold");
  validate->add_option("--input", opt.input, "Check this fixed hypergraph instead of random ones");
  add_spectral(validate, opt);
  add_format(validate, opt);

  auto* identities = app.add_subcommand("identities", "Exact sweep of the binomial identities");
  identities->add_option("--n-max", opt.identities_n_max, "Largest n");
  identities->add_option("--k-max", opt.identities_k_max, "Largest k");
  identities->add_option("--format", opt.format, "Output format (default csv)")
      ->check(CLI::IsMember({"json", "csv"}));
  identities->add_option("--out", opt.out, "Write the report to this path instead of stdout");

  auto* gen = app.add_subcommand("gen", "Generate a hypergraph file");
  gen->add_option("kind", opt.gen_kind, "complete | single-edge | random-m")
      ->required()
      ->check(CLI::IsMember({"complete", "single-edge", "random-m"}));
  gen->add_option("--n", opt.n, "Vertex count")->required();
  gen->add_option("--k", opt.k, "Uniformity")->required();
  gen->add_option("--m", opt.m, "Edge count (random-m)");
  gen->add_option("--seed", opt.seed, "Seed (random-m)");
  gen->add_flag("--connected", opt.connected, "Resample until connected");
  gen->add_option("--out", opt.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (identities->parsed() && identities->count("--format") == 0) opt.format = "csv";
    if (bounds->parsed()) return cmd_bounds(opt, out);
    if (rho->parsed()) return cmd_spectral(opt, TensorKind::adjacency, out);
    if (q->parsed()) return cmd_spectral(opt, TensorKind::signless, out);
    if (validate->parsed()) return cmd_validate(opt, out);
    if (identities->parsed()) return cmd_identities(opt, out);
    if (gen->parsed()) return cmd_gen(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace hyperrad::cli
