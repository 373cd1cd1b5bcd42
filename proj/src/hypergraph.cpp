#include "hyperrad/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "hyperrad/random.hpp"

namespace hyperrad {

std::string_view to_string(TensorKind kind) {
  return kind == TensorKind::adjacency ? "adjacency" : "signless";
}

TensorKind tensor_kind_from_string(std::string_view name) {
  if (name == "adjacency") return TensorKind::adjacency;
  if (name == "signless") return TensorKind::signless;
  throw std::invalid_argument("unknown tensor kind '" + std::string(name) + "'");
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : HypergraphError(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

Hypergraph::Hypergraph(int n, int k, const std::vector<std::vector<int>>& edges) : n_(n), k_(k) {
  if (n < 1) throw HypergraphError("vertex count must be positive");
  if (k < 2) throw HypergraphError("uniformity k must be at least 2");

  std::vector<std::vector<int>> canonical;
  canonical.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.size() != static_cast<std::size_t>(k)) {
      throw HypergraphError("edge has " + std::to_string(e.size()) + " members, expected " + std::to_string(k));
    }
    std::vector<int> members;
    members.reserve(e.size());
    for (int label : e) {
      if (label < 1 || label > n) {
        throw HypergraphError("vertex " + std::to_string(label) + " out of range 1.." + std::to_string(n));
      }
      members.push_back(label - 1);
    }
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw HypergraphError("edge repeats a vertex");
    }
    canonical.push_back(std::move(members));
  }
  std::sort(canonical.begin(), canonical.end());
  if (auto dup = std::adjacent_find(canonical.begin(), canonical.end()); dup != canonical.end()) {
    std::string label;
    for (int v : *dup) label += (label.empty() ? "" : " ") + std::to_string(v + 1);
    throw HypergraphError("duplicate edge {" + label + "}");
  }

  degrees_.assign(static_cast<std::size_t>(n), 0);
  members_.reserve(canonical.size() * static_cast<std::size_t>(k));
  for (const auto& e : canonical) {
    for (int v : e) {
      members_.push_back(v);
      ++degrees_[static_cast<std::size_t>(v)];
    }
  }
}

DegreeSequence degree_sequence(const Hypergraph& h) {
  const auto& deg = h.vertex_degrees();
  std::vector<int> order(deg.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

  DegreeSequence seq;
  seq.k = h.uniformity();
  seq.degrees.reserve(deg.size());
  seq.rank_of_vertex.resize(deg.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    seq.degrees.push_back(deg[static_cast<std::size_t>(order[pos])]);
    seq.rank_of_vertex[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
  }
  return seq;
}

namespace {

class DisjointSet {
public:
  explicit DisjointSet(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // The smaller root wins, so every root is the minimum of its set.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

private:
  std::vector<int> parent_;
};

}  // namespace

ComponentPartition components(const Hypergraph& h) {
  const int n = h.num_vertices();
  DisjointSet sets(n);
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    for (std::size_t i = 1; i < members.size(); ++i) sets.unite(members[0], members[i]);
  }
  ComponentPartition parts;
  parts.component_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    parts.component_of[v] = sets.find(v);
    if (parts.component_of[v] == v) ++parts.count;
  }
  return parts;
}

Hypergraph component_subgraph(const Hypergraph& h, const ComponentPartition& parts, int component_id,
                              std::vector<int>& vertices) {
  vertices.clear();
  std::vector<int> local(static_cast<std::size_t>(h.num_vertices()), 0);
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (parts.component_of[v] == component_id) {
      vertices.push_back(v);
      local[v] = static_cast<int>(vertices.size());
    }
  }
  std::vector<std::vector<int>> edges;
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    auto members = h.edge(e);
    if (parts.component_of[members[0]] != component_id) continue;
    std::vector<int> labels;
    labels.reserve(members.size());
    for (int v : members) labels.push_back(local[v]);
    edges.push_back(std::move(labels));
  }
  return Hypergraph(static_cast<int>(vertices.size()), h.uniformity(), edges);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    if (end > pos) fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line) {
  Int value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Hypergraph parse(std::string_view text) {
  bool have_header = false;
  int n = 0;
  int k = 0;
  std::int64_t m = 0;
  std::vector<std::vector<int>> edges;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    if (!have_header) {
      if (fields.size() != 3) throw ParseError(line_no, "malformed header, expected 'n k m'");
      n = parse_int<int>(fields[0], line_no);
      k = parse_int<int>(fields[1], line_no);
      m = parse_int<std::int64_t>(fields[2], line_no);
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (k < 2) throw ParseError(line_no, "uniformity k must be at least 2");
      if (m < 0) throw ParseError(line_no, "edge count must be nonnegative");
      have_header = true;
      continue;
    }

    if (static_cast<std::int64_t>(edges.size()) == m) throw ParseError(line_no, "more edge lines than declared");
    if (fields.size() != static_cast<std::size_t>(k)) {
      throw ParseError(line_no, "edge has " + std::to_string(fields.size()) + " members, expected " + std::to_string(k));
    }
    std::vector<int> labels;
    labels.reserve(fields.size());
    for (auto f : fields) labels.push_back(parse_int<int>(f, line_no));
    // Validate this edge on its own so errors carry the right line number.
    try {
      Hypergraph(n, k, {labels});
    } catch (const HypergraphError& e) {
      throw ParseError(line_no, e.what());
    }
    edges.push_back(std::move(labels));
  }

  if (!have_header) throw ParseError(0, "missing header line");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(0, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Hypergraph(n, k, edges);
  } catch (const HypergraphError& e) {
    throw ParseError(0, e.what());
  }
}

Hypergraph read_hypergraph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw HypergraphError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

std::string serialize(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + ' ' + std::to_string(h.uniformity()) + ' ' +
                    std::to_string(h.num_edges()) + '\n';
  for (std::size_t e = 0; e < h.num_edges(); ++e) {
    bool first = true;
    for (int v : h.edge(e)) {
      if (!first) out += ' ';
      out += std::to_string(v + 1);
      first = false;
    }
    out += '\n';
  }
  return out;
}

GenerateKind generate_kind_from_string(std::string_view name) {
  if (name == "complete") return GenerateKind::complete;
  if (name == "single-edge") return GenerateKind::single_edge;
  if (name == "random-m") return GenerateKind::random_m;
  throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::uint64_t subset_count(int n, int k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  constexpr auto saturated = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > saturated) return saturated;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

// Lexicographic unranking of k-subsets of {0..n-1}, returned as 1-based labels.
std::vector<int> unrank_subset(int n, int k, std::uint64_t rank) {
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(k));
  int candidate = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (;; ++candidate) {
      const std::uint64_t with = subset_count(n - candidate - 1, k - slot - 1);
      if (rank < with) break;
      rank -= with;
    }
    labels.push_back(candidate + 1);
    ++candidate;
  }
  return labels;
}

std::vector<std::vector<int>> all_subsets(int n, int k) {
  std::vector<std::vector<int>> edges;
  std::vector<int> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    edges.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return edges;
}

constexpr std::uint64_t kUnrankLimit = std::uint64_t{1} << 20;

std::vector<std::vector<int>> sample_edges(int n, int k, std::uint64_t m, Rng& rng) {
  const std::uint64_t total = subset_count(n, k);
  std::vector<std::vector<int>> edges;
  edges.reserve(m);
  if (total < kUnrankLimit) {
    // Floyd's algorithm: m distinct ranks, each m-subset equally likely.
    std::set<std::uint64_t> ranks;
    for (std::uint64_t j = total - m; j < total; ++j) {
      const std::uint64_t t = uniform_below(rng, j + 1);
      if (!ranks.insert(t).second) ranks.insert(j);
    }
    for (auto r : ranks) edges.push_back(unrank_subset(n, k, r));
    return edges;
  }
  std::set<std::vector<int>> seen;
  std::vector<int> pool(static_cast<std::size_t>(n));
  while (seen.size() < m) {
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> edge(pool.begin(), pool.begin() + k);
    std::sort(edge.begin(), edge.end());
    seen.insert(std::move(edge));
  }
  edges.assign(seen.begin(), seen.end());
  return edges;
}

}  // namespace

Hypergraph generate(const GenerateOptions& options) {
  const int n = options.n;
  const int k = options.k;
  if (k < 2) throw HypergraphError("uniformity k must be at least 2");
  if (n < k) throw HypergraphError("generation needs n >= k");

  switch (options.kind) {
    case GenerateKind::complete:
      if (subset_count(n, k) >= kUnrankLimit) throw HypergraphError("complete hypergraph too large");
      return Hypergraph(n, k, all_subsets(n, k));
    case GenerateKind::single_edge: {
      std::vector<int> edge(static_cast<std::size_t>(k));
      std::iota(edge.begin(), edge.end(), 1);
      return Hypergraph(n, k, {edge});
    }
    case GenerateKind::random_m:
      break;
  }

  const std::uint64_t total = subset_count(n, k);
  if (options.m > total) {
    throw HypergraphError("m = " + std::to_string(options.m) + " exceeds C(n,k) = " + std::to_string(total));
  }
  Rng rng(options.seed);
  if (!options.connected) return Hypergraph(n, k, sample_edges(n, k, options.m, rng));

  // Each edge can merge at most k - 1 components.
  if (options.m * static_cast<std::uint64_t>(k - 1) < static_cast<std::uint64_t>(n - 1)) {
    throw HypergraphError("m = " + std::to_string(options.m) + " edges cannot connect " + std::to_string(n) +
                          " vertices");
  }
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Hypergraph h(n, k, sample_edges(n, k, options.m, rng));
    if (components(h).count == 1) return h;
  }
  throw HypergraphError("no connected instance found in " + std::to_string(options.max_attempts) + " attempts");
}

}  // namespace hyperrad
