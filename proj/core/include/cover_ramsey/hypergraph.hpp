#ifndef COVER_RAMSEY_HYPERGRAPH_HPP
#define COVER_RAMSEY_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace cover_ramsey {

using Vertex = std::uint32_t;     // 1-based
using EdgeIndex = std::uint32_t;  // 0-based position in canonical edge order
using Color = std::uint32_t;      // 0 = blue, 1 = red for 2-colorings

/// Strictly ascending list of vertex ids.
using VertexSet = std::vector<Vertex>;

constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Dense id of the unordered pair {u, v}, u != v, in colexicographic order.
constexpr std::size_t pair_id(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(v - 1) * (v - 2) / 2 + (u - 1);
}

/// Position of {u, v} (u < v) among the lexicographically ordered edges of K_n.
constexpr std::size_t complete_graph_edge_index(std::size_t n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  const std::size_t a = u - 1;
  return a * (2 * n - a - 1) / 2 + (v - u - 1);
}

/// Immutable R-graph on vertices 1..n.
///
/// Edges are stored sorted and in lexicographic order, so two hypergraphs
/// with the same edge sets compare equal and serialize identically. Edge
/// indices used by colorings and certificates refer to this canonical order.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Uniformity set inferred from the edge cardinalities.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  /// Every edge cardinality must lie in `uniformity`; all members must be >= 2.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges, std::set<std::size_t> uniformity);

  static Hypergraph complete_graph(std::size_t n);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const VertexSet& edge(EdgeIndex i) const { return edges_.at(i); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const std::set<std::size_t>& uniformity() const noexcept { return uniformity_; }

  /// k = max(R); 0 for an empty uniformity set.
  std::size_t max_edge_size() const noexcept {
    return uniformity_.empty() ? 0 : *uniformity_.rbegin();
  }

  std::optional<EdgeIndex> find_edge(std::span<const Vertex> sorted_edge) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  void canonicalize_and_validate();

  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::set<std::size_t> uniformity_;
};

/// The 2-shadow: {u, v} is present iff some hyperedge contains both.
class ShadowGraph {
 public:
  ShadowGraph(std::size_t n, std::vector<bool> pair_present)
      : n_(n), present_(std::move(pair_present)) {}

  std::size_t num_vertices() const noexcept { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return u != v && present_[pair_id(u, v)]; }
  std::size_t num_pairs() const;
  bool is_complete() const;

 private:
  std::size_t n_;
  std::vector<bool> present_;  // indexed by pair_id
};

struct EdgeColoring {
  std::vector<Color> colors;  // one per edge index
  std::size_t palette_size = 2;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// Throws kInvalidInput when the coloring does not fit `h`.
void validate_coloring(const Hypergraph& h, const EdgeColoring& coloring);

/// allowed[i] == (coloring.colors[i] == color)
std::vector<bool> color_mask(const EdgeColoring& coloring, Color color);

/// Pair -> hyperedges containing it, ascending by edge index.
class PairIndex {
 public:
  explicit PairIndex(const Hypergraph& h);

  std::span<const EdgeIndex> edges_containing(Vertex u, Vertex v) const {
    const std::size_t id = pair_id(u, v);
    return {entries_.data() + offsets_[id], entries_.data() + offsets_[id + 1]};
  }
  std::size_t codegree(Vertex u, Vertex v) const {
    const std::size_t id = pair_id(u, v);
    return offsets_[id + 1] - offsets_[id];
  }
  std::size_t num_vertices() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeIndex> entries_;
};

/// Vertex -> incident hyperedges, ascending.
class VertexIncidence {
 public:
  explicit VertexIncidence(const Hypergraph& h);

  std::span<const EdgeIndex> edges_at(Vertex v) const {
    return {entries_.data() + offsets_[v - 1], entries_.data() + offsets_[v]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<EdgeIndex> entries_;
};

ShadowGraph shadow(const Hypergraph& h);
bool is_covering(const Hypergraph& h);

/// Number of hyperedges containing every vertex of `s`.
std::size_t codegree(const Hypergraph& h, std::span<const Vertex> s);

/// delta_2; empty when n < 2.
std::optional<std::size_t> min_codegree(const Hypergraph& h);
std::optional<std::size_t> max_codegree(const Hypergraph& h);

/// Every pair lies in exactly one hyperedge.
bool is_linear_covering(const Hypergraph& h);

/// Greedy edge-minimal covering subhypergraph; edges are tried for removal
/// in reverse canonical order. Throws kPrecondition on non-covering input.
Hypergraph minimal_covering_subhypergraph(const Hypergraph& h);

/// Sub-hypergraph induced on vertices 1..n_keep: edges are intersected with
/// the kept vertices, pieces with fewer than two vertices are dropped and
/// repeated pieces are merged.
Hypergraph restrict_vertices(const Hypergraph& h, std::size_t n_keep);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_HYPERGRAPH_HPP
