#ifndef COVER_RAMSEY_TESTS_ORACLES_HPP
#define COVER_RAMSEY_TESTS_ORACLES_HPP

// Deliberately naive reference implementations. None of them share code
// paths with the library beyond the plain data types.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cover_ramsey/hypergraph.hpp"
#include "cover_ramsey/target_graph.hpp"

namespace oracle {

using cover_ramsey::Color;
using cover_ramsey::EdgeColoring;
using cover_ramsey::Hypergraph;
using cover_ramsey::TargetGraph;
using cover_ramsey::Vertex;
using cover_ramsey::VertexSet;

/// Tries every injective vertex map and, for each, every injective edge map
/// (edge by edge, rejecting a choice as soon as containment fails).
/// `allowed` may be empty, meaning all edges.
bool has_berge(const Hypergraph& h, const TargetGraph& g, const std::vector<bool>& allowed = {});

/// Color 0 copy of g1 or color 1 copy of g2.
bool has_mono_berge(const Hypergraph& h, const EdgeColoring& c, const TargetGraph& g1, const TargetGraph& g2);

/// Binary-counter walk over all 2^m colorings without any symmetry cut;
/// returns the first avoiding coloring.
std::optional<EdgeColoring> avoiding_coloring(const Hypergraph& h, const TargetGraph& g1, const TargetGraph& g2);

/// Number of t-sets S for which every pair of S lies in a distinct
/// hyperedge and all those hyperedges share one color (found by scanning
/// the edge list for every pair).
std::size_t count_mono_linear_cliques(const Hypergraph& h, const EdgeColoring& c, std::size_t t,
                                      std::size_t* sets_checked = nullptr);

/// Every pair of 1..n inside exactly one block, every class a partition.
bool is_resolvable_design(std::size_t n, std::size_t k, const std::vector<std::vector<VertexSet>>& classes);

/// Random hypergraph with n vertices, up to max_edges distinct edges of size 2..k.
Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t max_edges, std::size_t k);

/// Random covering hypergraph: random edges of size 2..k plus one 2-edge
/// for every pair left uncovered.
Hypergraph random_covering(std::mt19937_64& rng, std::size_t n, std::size_t num_edges, std::size_t k);

EdgeColoring random_coloring(std::mt19937_64& rng, std::size_t m);

/// Triangle-free check of a 2-colored K_n given as a Hypergraph: true when
/// some color class contains a triangle.
bool has_mono_triangle(const Hypergraph& kn, const EdgeColoring& c);

}  // namespace oracle

#endif  // COVER_RAMSEY_TESTS_ORACLES_HPP
