#ifndef COVER_RAMSEY_TARGET_GRAPH_HPP
#define COVER_RAMSEY_TARGET_GRAPH_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cover_ramsey/hypergraph.hpp"

namespace cover_ramsey {

/// Simple graph G on vertices 1..nv whose Berge copies are searched for.
/// Edge order is preserved from construction; certificates index into it.
class TargetGraph {
 public:
  using GraphEdge = std::pair<Vertex, Vertex>;  // first < second

  TargetGraph() = default;
  TargetGraph(std::size_t nv, std::vector<GraphEdge> edges);

  static TargetGraph complete(std::size_t t);
  /// Path on t vertices (t - 1 edges).
  static TargetGraph path(std::size_t t);
  static TargetGraph cycle(std::size_t t);

  std::size_t num_vertices() const noexcept { return nv_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  const GraphEdge& edge(std::size_t i) const { return edges_.at(i); }
  std::size_t degree(Vertex v) const { return degree_.at(v - 1); }

  /// Short human name such as "K4" when the graph is a known family member.
  std::string describe() const;

  friend bool operator==(const TargetGraph& a, const TargetGraph& b) {
    return a.nv_ == b.nv_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t nv_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::size_t> degree_;
};

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_TARGET_GRAPH_HPP
