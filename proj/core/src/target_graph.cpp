#include "cover_ramsey/target_graph.hpp"

#include <algorithm>
#include <set>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

TargetGraph::TargetGraph(std::size_t nv, std::vector<GraphEdge> edges)
    : nv_(nv), edges_(std::move(edges)), degree_(nv, 0) {
  std::set<GraphEdge> seen;
  for (auto& [u, v] : edges_) {
    if (u == v) fail(ErrorCode::kInvalidInput, "target graph has a loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > nv_) {
      fail(ErrorCode::kInvalidInput, "target edge " + std::to_string(u) + "-" + std::to_string(v) +
                                         " outside 1.." + std::to_string(nv_));
    }
    if (!seen.insert({u, v}).second) {
      fail(ErrorCode::kInvalidInput,
           "duplicate target edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    ++degree_[u - 1];
    ++degree_[v - 1];
  }
}

TargetGraph TargetGraph::complete(std::size_t t) {
  std::vector<GraphEdge> edges;
  for (Vertex u = 1; u <= t; ++u) {
    for (Vertex v = u + 1; v <= t; ++v) edges.emplace_back(u, v);
  }
  return TargetGraph(t, std::move(edges));
}

TargetGraph TargetGraph::path(std::size_t t) {
  std::vector<GraphEdge> edges;
  for (Vertex u = 1; u < t; ++u) edges.emplace_back(u, u + 1);
  return TargetGraph(t, std::move(edges));
}

TargetGraph TargetGraph::cycle(std::size_t t) {
  if (t < 3) fail(ErrorCode::kInvalidInput, "a cycle needs at least 3 vertices");
  auto edges = path(t).edges();
  edges.emplace_back(1, static_cast<Vertex>(t));
  return TargetGraph(t, std::move(edges));
}

std::string TargetGraph::describe() const {
  const std::string n = std::to_string(nv_);
  if (*this == complete(nv_)) return "K" + n;
  if (*this == path(nv_)) return "P" + n;
  if (nv_ >= 3 && *this == cycle(nv_)) return "C" + n;
  return "G(" + n + "," + std::to_string(edges_.size()) + ")";
}

}  // namespace cover_ramsey
