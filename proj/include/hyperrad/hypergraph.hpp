#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperrad {

/// Which tensor of a hypergraph an operation refers to.
enum class TensorKind { adjacency, signless };

std::string_view to_string(TensorKind kind);
TensorKind tensor_kind_from_string(std::string_view name);

class HypergraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse(); carries the 1-based line number of the offending line
/// (0 when the problem is not tied to a single line).
class ParseError : public HypergraphError {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A simple k-uniform hypergraph on vertices labelled 1..n.
///
/// Edges are stored canonically: members ascending inside an edge and the
/// edge list in lexicographic order. Labels are 1-based at the API boundary
/// (constructor, files); edge() exposes 0-based vertex indices, i.e. the
/// index of label v is v - 1.
class Hypergraph {
public:
  /// Builds from 1-based labels. Member order inside an edge and the order of
  /// edges are irrelevant. Throws HypergraphError on a wrong member count, an
  /// out-of-range label, a repeated member, a repeated edge, n < 1 or k < 2.
  Hypergraph(int n, int k, const std::vector<std::vector<int>>& edges);

  int num_vertices() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  std::size_t num_edges() const noexcept { return members_.size() / static_cast<std::size_t>(k_); }

  /// 0-based vertex indices of edge e, ascending.
  std::span<const int> edge(std::size_t e) const {
    return {members_.data() + e * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }

  /// Degree of every vertex, indexed by 0-based vertex index (unsorted).
  const std::vector<std::int64_t>& vertex_degrees() const noexcept { return degrees_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
  int n_;
  int k_;
  std::vector<int> members_;
  std::vector<std::int64_t> degrees_;
};

/// Vertex degrees sorted non-increasing (d_1 >= ... >= d_n).
struct DegreeSequence {
  std::vector<std::int64_t> degrees;
  /// rank_of_vertex[v] is the 0-based position of vertex index v in `degrees`.
  std::vector<int> rank_of_vertex;
  int k = 2;

  int size() const noexcept { return static_cast<int>(degrees.size()); }
};

/// Ties are ordered by vertex label so the permutation is deterministic.
DegreeSequence degree_sequence(const Hypergraph& h);

struct ComponentPartition {
  /// component_of[v] is the smallest 0-based vertex index in v's component.
  std::vector<int> component_of;
  int count = 0;
};

ComponentPartition components(const Hypergraph& h);

/// The sub-hypergraph spanned by one component, relabelled 1..n_c in
/// increasing order of the original labels. `vertices` receives the 0-based
/// original indices in that order.
Hypergraph component_subgraph(const Hypergraph& h, const ComponentPartition& parts, int component_id,
                              std::vector<int>& vertices);

Hypergraph parse(std::string_view text);
Hypergraph read_hypergraph(const std::filesystem::path& path);

/// Canonical text form; parse(serialize(h)) == h.
std::string serialize(const Hypergraph& h);

enum class GenerateKind { complete, single_edge, random_m };

GenerateKind generate_kind_from_string(std::string_view name);

struct GenerateOptions {
  GenerateKind kind = GenerateKind::complete;
  int n = 0;
  int k = 2;
  std::uint64_t m = 0;       // random_m only
  std::uint64_t seed = 0;    // random_m only
  bool connected = false;    // resample random_m until connected
  int max_attempts = 1000;
};

/// Number of k-subsets of an n-set, saturating at UINT64_MAX.
std::uint64_t subset_count(int n, int k);

/// Throws HypergraphError when n < k, k < 2, m > C(n,k), or when a connected
/// instance is requested but none was found within max_attempts.
Hypergraph generate(const GenerateOptions& options);

}  // namespace hyperrad
