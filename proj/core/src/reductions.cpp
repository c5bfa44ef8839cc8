#include "cover_ramsey/reductions.hpp"

#include <algorithm>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) fail(ErrorCode::kInternal, "uniform_below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

VertexSet random_subset(std::mt19937_64& rng, std::size_t n, std::size_t s) {
  VertexSet out;
  out.reserve(s);
  for (std::size_t j = n - s + 1; j <= n; ++j) {
    const auto t = static_cast<Vertex>(1 + uniform_below(rng, j));
    const bool taken = std::find(out.begin(), out.end(), t) != out.end();
    out.push_back(taken ? static_cast<Vertex>(j) : t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ScatterChecker::ScatterChecker(const Hypergraph& h) : host_(&h), pairs_(h) {}

bool ScatterChecker::is_scattered(std::span<const Vertex> subset) const {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      for (EdgeIndex e : pairs_.edges_containing(subset[i], subset[j])) {
        const auto& edge = host_->edge(e);
        for (std::size_t w = 0; w < subset.size(); ++w) {
          if (w != i && w != j && std::binary_search(edge.begin(), edge.end(), subset[w])) return false;
        }
      }
    }
  }
  return true;
}

std::optional<ScatterSample> sample_scattered_subset(const ScatterChecker& checker, std::size_t s,
                                                     std::uint64_t seed, std::size_t max_attempts) {
  const std::size_t n = checker.host().num_vertices();
  if (s > n) fail(ErrorCode::kPrecondition, "sample size exceeds the vertex count");
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    VertexSet subset = random_subset(rng, n, s);
    if (checker.is_scattered(subset)) return ScatterSample{std::move(subset), attempt, seed};
  }
  return std::nullopt;
}

std::optional<ScatterSample> sample_scattered_subset(const Hypergraph& h, std::size_t s, std::uint64_t seed,
                                                     std::size_t max_attempts) {
  if (!is_covering(h)) fail(ErrorCode::kPrecondition, "scatter sampling requires a covering host");
  return sample_scattered_subset(ScatterChecker(h), s, seed, max_attempts);
}

namespace {

void require_two_coloring(const Hypergraph& h, const EdgeColoring& coloring) {
  if (coloring.palette_size != 2) fail(ErrorCode::kPrecondition, "expected a 2-coloring");
  validate_coloring(h, coloring);
}

}  // namespace

TraceColoring trace_coloring(const Hypergraph& h, const EdgeColoring& coloring, const ScatterSample& sample) {
  require_two_coloring(h, coloring);
  const VertexSet& s = sample.subset;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > h.num_vertices() || (i > 0 && s[i - 1] >= s[i])) {
      fail(ErrorCode::kPrecondition, "sample must be an ascending subset of 1..n");
    }
  }
  const PairIndex pairs(h);
  TraceColoring out;
  out.subset = s;
  out.graph = Hypergraph::complete_graph(s.size());
  out.coloring.palette_size = 2;
  std::vector<bool> used(h.num_edges(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      std::optional<EdgeIndex> pick;
      for (EdgeIndex e : pairs.edges_containing(s[i], s[j])) {
        const auto& edge = h.edge(e);
        const bool exact = std::none_of(s.begin(), s.end(), [&](Vertex w) {
          return w != s[i] && w != s[j] && std::binary_search(edge.begin(), edge.end(), w);
        });
        if (exact) {
          pick = e;
          break;
        }
      }
      if (!pick) {
        fail(ErrorCode::kInternal, "pair {" + std::to_string(s[i]) + "," + std::to_string(s[j]) +
                                       "} has no hyperedge tracing to it");
      }
      if (used[*pick]) fail(ErrorCode::kInternal, "trace map is not injective");
      used[*pick] = true;
      out.phi.push_back(*pick);
      out.coloring.colors.push_back(coloring.colors[*pick]);
    }
  }
  return out;
}

BergeCertificate lift_trace_subgraph(const TraceColoring& trace, const BergeCertificate& local) {
  BergeCertificate out;
  for (Vertex v : local.vertex_map) {
    if (v < 1 || v > trace.subset.size()) fail(ErrorCode::kPrecondition, "local vertex out of range");
    out.vertex_map.push_back(trace.subset[v - 1]);
  }
  for (EdgeIndex e : local.edge_map) {
    if (e >= trace.phi.size()) fail(ErrorCode::kPrecondition, "local edge out of range");
    out.edge_map.push_back(trace.phi[e]);
  }
  return out;
}

ProductReduction multicolor_product_reduction(const Hypergraph& h, const EdgeColoring& coloring) {
  if (!is_covering(h)) fail(ErrorCode::kPrecondition, "product reduction requires a covering host");
  require_two_coloring(h, coloring);
  const std::size_t n = h.num_vertices();
  ProductReduction out;
  out.k = h.max_edge_size();
  out.label_count = out.k * (out.k - 1) / 2;
  out.graph = Hypergraph::complete_graph(n);
  out.coloring.palette_size = 2 * out.label_count;
  const PairIndex pairs(h);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      const EdgeIndex e = pairs.edges_containing(u, v).front();
      const auto& edge = h.edge(e);
      const auto a = static_cast<Vertex>(std::lower_bound(edge.begin(), edge.end(), u) - edge.begin() + 1);
      const auto b = static_cast<Vertex>(std::lower_bound(edge.begin(), edge.end(), v) - edge.begin() + 1);
      const std::size_t label = complete_graph_edge_index(edge.size(), a, b) + 1;
      out.source_edge.push_back(e);
      out.label.push_back(label);
      out.coloring.colors.push_back(product_color(coloring.colors[e], label, out.label_count));
    }
  }
  return out;
}

BergeCertificate lift_mono_subgraph(const ProductReduction& red, const TargetGraph& g,
                                    const std::vector<Vertex>& vertex_map) {
  const std::size_t n = red.graph.num_vertices();
  if (vertex_map.size() != g.num_vertices()) fail(ErrorCode::kPrecondition, "vertex map size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : vertex_map) {
    if (v < 1 || v > n || seen[v]) fail(ErrorCode::kPrecondition, "vertex map is not an injection into 1..n");
    seen[v] = true;
  }
  BergeCertificate out{vertex_map, {}};
  std::optional<Color> common;
  std::vector<bool> used(red.source_edge.empty() ? 0 : *std::max_element(red.source_edge.begin(),
                                                                         red.source_edge.end()) + 1,
                         false);
  for (const auto& [u, v] : g.edges()) {
    const std::size_t idx = complete_graph_edge_index(n, vertex_map[u - 1], vertex_map[v - 1]);
    const Color c = red.coloring.colors[idx];
    if (common && *common != c) fail(ErrorCode::kPrecondition, "embedded pairs are not monochromatic");
    common = c;
    const EdgeIndex e = red.source_edge[idx];
    if (used[e]) fail(ErrorCode::kInternal, "two pairs of one product color share hyperedge " + std::to_string(e));
    used[e] = true;
    out.edge_map.push_back(e);
  }
  return out;
}

}  // namespace cover_ramsey
