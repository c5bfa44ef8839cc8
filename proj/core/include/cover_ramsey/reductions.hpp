#ifndef COVER_RAMSEY_REDUCTIONS_HPP
#define COVER_RAMSEY_REDUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cover_ramsey/berge.hpp"
#include "cover_ramsey/hypergraph.hpp"
#include "cover_ramsey/target_graph.hpp"

namespace cover_ramsey {

/// Uniform integer in [0, bound) by rejection; identical on every platform,
/// unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform s-subset of 1..n (Floyd's algorithm), returned ascending.
VertexSet random_subset(std::mt19937_64& rng, std::size_t n, std::size_t s);

struct ScatterSample {
  VertexSet subset;
  std::size_t attempts = 0;  // draws used, including the accepted one
  std::uint64_t seed = 0;
};

/// Tests whether a vertex set meets every hyperedge in at most two points.
class ScatterChecker {
 public:
  explicit ScatterChecker(const Hypergraph& h);

  bool is_scattered(std::span<const Vertex> subset) const;
  const Hypergraph& host() const noexcept { return *host_; }

 private:
  const Hypergraph* host_;
  PairIndex pairs_;
};

/// Rejection sampling of a scattered s-subset: draws uniform s-subsets from
/// mt19937_64(seed) until one meets every hyperedge in at most two points.
/// Requires a covering host and s <= n.
std::optional<ScatterSample> sample_scattered_subset(const Hypergraph& h, std::size_t s,
                                                     std::uint64_t seed,
                                                     std::size_t max_attempts = 1000);
std::optional<ScatterSample> sample_scattered_subset(const ScatterChecker& checker, std::size_t s,
                                                     std::uint64_t seed,
                                                     std::size_t max_attempts = 1000);

/// 2-colored complete graph on the sample, with provenance.
///
/// Local vertex i + 1 stands for subset[i]. graph is K_s as a 2-graph on the
/// local vertices, so its edge j is the j-th pair in lexicographic order;
/// phi[j] is the host hyperedge whose trace on the sample is that pair.
struct TraceColoring {
  VertexSet subset;
  Hypergraph graph;
  EdgeColoring coloring;
  std::vector<EdgeIndex> phi;
};

/// For every pair of the sample picks the smallest hyperedge meeting the
/// sample in exactly that pair and copies its color. Throws kInternal when
/// a pair has no such hyperedge or two pairs would share one.
TraceColoring trace_coloring(const Hypergraph& h, const EdgeColoring& coloring,
                             const ScatterSample& sample);

/// Maps a certificate found in trace.graph back to the host through phi.
BergeCertificate lift_trace_subgraph(const TraceColoring& trace, const BergeCertificate& local);

/// Complete graph K_n whose pair colors encode (host color, pair label).
///
/// For pair uv, source_edge is the smallest hyperedge containing it and
/// label is the 1-based lexicographic rank of uv among the pairs of that
/// hyperedge. The color id is host_color * label_count + (label - 1).
struct ProductReduction {
  std::size_t k = 0;
  std::size_t label_count = 0;  // C(k, 2)
  Hypergraph graph;             // K_n as a 2-graph
  EdgeColoring coloring;        // palette 2 * label_count
  std::vector<EdgeIndex> source_edge;
  std::vector<std::size_t> label;
};

constexpr Color product_color(Color host_color, std::size_t label, std::size_t label_count) {
  return static_cast<Color>(host_color * label_count + (label - 1));
}

/// Requires a covering host and a 2-coloring. k is the largest edge size.
ProductReduction multicolor_product_reduction(const Hypergraph& h, const EdgeColoring& coloring);

/// Lifts a copy of G in the reduced graph, all of whose pairs carry one
/// product color, to a Berge-G in the host. vertex_map[i] is the image of
/// graph vertex i + 1. Throws kPrecondition when the pairs are not
/// monochromatic and kInternal when two pairs map to one hyperedge.
BergeCertificate lift_mono_subgraph(const ProductReduction& red, const TargetGraph& g,
                                    const std::vector<Vertex>& vertex_map);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_REDUCTIONS_HPP
