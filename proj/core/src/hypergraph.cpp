#include "cover_ramsey/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

namespace {

std::string describe(const VertexSet& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  canonicalize_and_validate();
  for (const auto& e : edges_) uniformity_.insert(e.size());
}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges,
                       std::set<std::size_t> uniformity)
    : n_(n), edges_(std::move(edges)), uniformity_(std::move(uniformity)) {
  for (std::size_t r : uniformity_) {
    if (r < 2) fail(ErrorCode::kInvalidInput, "uniformity set members must be >= 2");
  }
  canonicalize_and_validate();
  for (const auto& e : edges_) {
    if (!uniformity_.contains(e.size())) {
      fail(ErrorCode::kInvalidInput,
           "edge " + describe(e) + " has cardinality outside the uniformity set");
    }
  }
}

void Hypergraph::canonicalize_and_validate() {
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2) {
      fail(ErrorCode::kInvalidInput, "edge " + describe(e) + " has fewer than 2 vertices");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      fail(ErrorCode::kInvalidInput, "edge " + describe(e) + " repeats a vertex");
    }
    if (e.front() < 1 || e.back() > n_) {
      fail(ErrorCode::kInvalidInput,
           "edge " + describe(e) + " has a vertex outside 1.." + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    fail(ErrorCode::kInvalidInput, "duplicate hyperedge " + describe(*dup));
  }
  if (edges_.size() > std::numeric_limits<EdgeIndex>::max()) {
    fail(ErrorCode::kInvalidInput, "too many hyperedges");
  }
}

Hypergraph Hypergraph::complete_graph(std::size_t n) {
  std::vector<VertexSet> edges;
  edges.reserve(pair_count(n));
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) edges.push_back({u, v});
  }
  return Hypergraph(n, std::move(edges), {2});
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::span<const Vertex> sorted_edge) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), sorted_edge, [](const VertexSet& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
  if (it != edges_.end() && std::equal(it->begin(), it->end(), sorted_edge.begin(), sorted_edge.end())) {
    return static_cast<EdgeIndex>(it - edges_.begin());
  }
  return std::nullopt;
}

std::size_t ShadowGraph::num_pairs() const {
  return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), true));
}

bool ShadowGraph::is_complete() const {
  return std::all_of(present_.begin(), present_.end(), [](bool b) { return b; });
}

void validate_coloring(const Hypergraph& h, const EdgeColoring& coloring) {
  if (coloring.colors.size() != h.num_edges()) {
    fail(ErrorCode::kInvalidInput, "coloring has " + std::to_string(coloring.colors.size()) +
                                       " entries for " + std::to_string(h.num_edges()) + " edges");
  }
  for (Color c : coloring.colors) {
    if (c >= coloring.palette_size) {
      fail(ErrorCode::kInvalidInput, "color " + std::to_string(c) + " outside palette of size " +
                                         std::to_string(coloring.palette_size));
    }
  }
}

std::vector<bool> color_mask(const EdgeColoring& coloring, Color color) {
  std::vector<bool> mask(coloring.colors.size());
  for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = coloring.colors[i] == color;
  return mask;
}

PairIndex::PairIndex(const Hypergraph& h) : n_(h.num_vertices()) {
  const std::size_t pairs = pair_count(n_);
  offsets_.assign(pairs + 1, 0);
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) ++offsets_[pair_id(e[i], e[j]) + 1];
    }
  }
  for (std::size_t i = 0; i < pairs; ++i) offsets_[i + 1] += offsets_[i];
  entries_.resize(offsets_[pairs]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex idx = 0; idx < h.num_edges(); ++idx) {
    const auto& e = h.edge(idx);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) entries_[fill[pair_id(e[i], e[j])]++] = idx;
    }
  }
}

VertexIncidence::VertexIncidence(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  offsets_.assign(n + 1, 0);
  for (const auto& e : h.edges()) {
    for (Vertex v : e) ++offsets_[v];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  entries_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeIndex idx = 0; idx < h.num_edges(); ++idx) {
    for (Vertex v : h.edge(idx)) entries_[fill[v - 1]++] = idx;
  }
}

ShadowGraph shadow(const Hypergraph& h) {
  std::vector<bool> present(pair_count(h.num_vertices()), false);
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) present[pair_id(e[i], e[j])] = true;
    }
  }
  return ShadowGraph(h.num_vertices(), std::move(present));
}

bool is_covering(const Hypergraph& h) {
  return shadow(h).is_complete();
}

std::size_t codegree(const Hypergraph& h, std::span<const Vertex> s) {
  VertexSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (v < 1 || v > h.num_vertices()) {
      fail(ErrorCode::kPrecondition, "vertex " + std::to_string(v) + " outside 1..n");
    }
  }
  return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(), [&](const VertexSet& e) {
    return std::includes(e.begin(), e.end(), sorted.begin(), sorted.end());
  }));
}

namespace {

std::vector<std::size_t> pair_codegrees(const Hypergraph& h) {
  std::vector<std::size_t> counts(pair_count(h.num_vertices()), 0);
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) ++counts[pair_id(e[i], e[j])];
    }
  }
  return counts;
}

}  // namespace

std::optional<std::size_t> min_codegree(const Hypergraph& h) {
  if (h.num_vertices() < 2) return std::nullopt;
  const auto counts = pair_codegrees(h);
  return *std::min_element(counts.begin(), counts.end());
}

std::optional<std::size_t> max_codegree(const Hypergraph& h) {
  if (h.num_vertices() < 2) return std::nullopt;
  const auto counts = pair_codegrees(h);
  return *std::max_element(counts.begin(), counts.end());
}

bool is_linear_covering(const Hypergraph& h) {
  const auto counts = pair_codegrees(h);
  return std::all_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 1; });
}

Hypergraph minimal_covering_subhypergraph(const Hypergraph& h) {
  if (!is_covering(h)) {
    fail(ErrorCode::kPrecondition, "minimal_covering_subhypergraph requires a covering hypergraph");
  }
  auto counts = pair_codegrees(h);
  std::vector<bool> keep(h.num_edges(), true);
  for (std::size_t idx = h.num_edges(); idx-- > 0;) {
    const auto& e = h.edge(static_cast<EdgeIndex>(idx));
    bool removable = true;
    for (std::size_t i = 0; i < e.size() && removable; ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        if (counts[pair_id(e[i], e[j])] < 2) {
          removable = false;
          break;
        }
      }
    }
    if (!removable) continue;
    keep[idx] = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) --counts[pair_id(e[i], e[j])];
    }
  }
  std::vector<VertexSet> kept;
  for (std::size_t idx = 0; idx < h.num_edges(); ++idx) {
    if (keep[idx]) kept.push_back(h.edge(static_cast<EdgeIndex>(idx)));
  }
  return Hypergraph(h.num_vertices(), std::move(kept), h.uniformity());
}

Hypergraph restrict_vertices(const Hypergraph& h, std::size_t n_keep) {
  if (n_keep > h.num_vertices()) {
    fail(ErrorCode::kPrecondition, "cannot restrict to more vertices than the host has");
  }
  std::vector<VertexSet> pieces;
  for (const auto& e : h.edges()) {
    VertexSet piece;
    for (Vertex v : e) {
      if (v <= n_keep) piece.push_back(v);
    }
    if (piece.size() >= 2) pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
  return Hypergraph(n_keep, std::move(pieces));
}

}  // namespace cover_ramsey
