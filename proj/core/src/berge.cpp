#include "cover_ramsey/berge.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

std::string_view to_string(VerifyReason reason) {
  switch (reason) {
    case VerifyReason::kOk: return "OK";
    case VerifyReason::kMalformed: return "MALFORMED";
    case VerifyReason::kNotInjectiveVertices: return "NOT_INJECTIVE_VERTICES";
    case VerifyReason::kNotInjectiveEdges: return "NOT_INJECTIVE_EDGES";
    case VerifyReason::kContainmentFail: return "CONTAINMENT_FAIL";
    case VerifyReason::kColorFail: return "COLOR_FAIL";
  }
  return "UNKNOWN";
}

VerifyOutcome verify_certificate(const Hypergraph& h, const TargetGraph& g,
                                 const BergeCertificate& cert, const EdgeColoring* coloring,
                                 std::optional<Color> color) {
  auto failure = [](VerifyReason r, std::string detail) { return VerifyOutcome{r, std::move(detail)}; };

  if (cert.vertex_map.size() != g.num_vertices() || cert.edge_map.size() != g.num_edges()) {
    return failure(VerifyReason::kMalformed, "map sizes do not match the target graph");
  }
  for (Vertex v : cert.vertex_map) {
    if (v < 1 || v > h.num_vertices()) {
      return failure(VerifyReason::kMalformed, "host vertex " + std::to_string(v) + " out of range");
    }
  }
  for (EdgeIndex e : cert.edge_map) {
    if (e >= h.num_edges()) {
      return failure(VerifyReason::kMalformed, "hyperedge index " + std::to_string(e) + " out of range");
    }
  }

  std::vector<Vertex> vs = cert.vertex_map;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    return failure(VerifyReason::kNotInjectiveVertices, "two graph vertices share a host vertex");
  }
  std::vector<EdgeIndex> es = cert.edge_map;
  std::sort(es.begin(), es.end());
  if (auto it = std::adjacent_find(es.begin(), es.end()); it != es.end()) {
    return failure(VerifyReason::kNotInjectiveEdges,
                   "hyperedge " + std::to_string(*it) + " used for two graph edges");
  }

  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto [u, v] = g.edge(j);
    const auto& he = h.edge(cert.edge_map[j]);
    const Vertex x = cert.vertex_map[u - 1];
    const Vertex y = cert.vertex_map[v - 1];
    if (!std::binary_search(he.begin(), he.end(), x) || !std::binary_search(he.begin(), he.end(), y)) {
      return failure(VerifyReason::kContainmentFail,
                     "graph edge " + std::to_string(j) + " not contained in hyperedge " +
                         std::to_string(cert.edge_map[j]));
    }
  }

  if (coloring != nullptr && color.has_value()) {
    if (coloring->colors.size() != h.num_edges()) {
      return failure(VerifyReason::kMalformed, "coloring length does not match the host");
    }
    for (EdgeIndex e : cert.edge_map) {
      if (coloring->colors[e] != *color) {
        return failure(VerifyReason::kColorFail, "hyperedge " + std::to_string(e) + " has color " +
                                                     std::to_string(coloring->colors[e]));
      }
    }
  }
  return {};
}

namespace {

constexpr std::int32_t kFree = -1;

/// Kuhn-style augmenting-path matcher between graph edges (left) and
/// hyperedges (right). Every write is journaled so the backtracking search
/// can roll the matching back to an earlier state.
class Matcher {
 public:
  Matcher(std::size_t left, std::size_t right)
      : left_match_(left, kFree), right_owner_(right, kFree), stamp_(right, 0) {}

  void set_candidates(std::size_t ge, std::vector<EdgeIndex> cands) { cand_[ge] = std::move(cands); }
  void resize_candidates(std::size_t left) { cand_.assign(left, {}); }
  const std::vector<EdgeIndex>& candidates(std::size_t ge) const { return cand_[ge]; }

  bool augment(std::size_t ge) {
    ++round_;
    return dfs(ge);
  }

  std::size_t checkpoint() const { return journal_.size(); }

  void rollback(std::size_t mark) {
    while (journal_.size() > mark) {
      const auto [is_left, index, old] = journal_.back();
      journal_.pop_back();
      (is_left ? left_match_ : right_owner_)[index] = old;
    }
  }

  std::vector<EdgeIndex> assignment() const {
    return {left_match_.begin(), left_match_.end()};
  }

 private:
  struct Entry {
    bool is_left;
    std::size_t index;
    std::int32_t old;
  };

  bool dfs(std::size_t ge) {
    for (EdgeIndex he : cand_[ge]) {
      if (stamp_[he] == round_) continue;
      stamp_[he] = round_;
      const std::int32_t owner = right_owner_[he];
      if (owner == kFree || dfs(static_cast<std::size_t>(owner))) {
        journal_.push_back({false, he, right_owner_[he]});
        right_owner_[he] = static_cast<std::int32_t>(ge);
        journal_.push_back({true, ge, left_match_[ge]});
        left_match_[ge] = static_cast<std::int32_t>(he);
        return true;
      }
    }
    return false;
  }

  std::vector<std::int32_t> left_match_;
  std::vector<std::int32_t> right_owner_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;
  std::vector<std::vector<EdgeIndex>> cand_;
  std::vector<Entry> journal_;
};

std::vector<EdgeIndex> candidates_for(const PairIndex& pairs, Vertex x, Vertex y,
                                      const std::vector<bool>* allowed) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e : pairs.edges_containing(x, y)) {
    if (allowed == nullptr || (*allowed)[e]) out.push_back(e);
  }
  return out;
}

std::size_t allowed_count(std::size_t m, const std::vector<bool>* allowed) {
  if (allowed == nullptr) return m;
  return static_cast<std::size_t>(std::count(allowed->begin(), allowed->end(), true));
}

class BacktrackSearch {
 public:
  BacktrackSearch(const PairIndex& pairs, std::size_t num_edges, const TargetGraph& g,
                  const std::vector<bool>* allowed)
      : pairs_(pairs),
        g_(g),
        allowed_(allowed),
        vmap_(g.num_vertices(), 0),
        used_(pairs.num_vertices() + 1, false),
        matcher_(g.num_edges(), num_edges) {
    order_.resize(g.num_vertices());
    std::iota(order_.begin(), order_.end(), Vertex{1});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> position(g.num_vertices() + 1);
    for (std::size_t i = 0; i < order_.size(); ++i) position[order_[i]] = i;
    closing_.resize(order_.size());
    for (std::size_t j = 0; j < g.num_edges(); ++j) {
      const auto [u, v] = g.edge(j);
      closing_[std::max(position[u], position[v])].push_back(j);
    }
    matcher_.resize_candidates(g.num_edges());
  }

  bool run() { return extend(0); }
  const std::vector<Vertex>& vertex_map() const { return vmap_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex gv = order_[depth];
    for (Vertex hv = 1; hv <= pairs_.num_vertices(); ++hv) {
      if (used_[hv]) continue;
      vmap_[gv - 1] = hv;
      used_[hv] = true;
      const std::size_t mark = matcher_.checkpoint();
      if (close_edges(depth) && extend(depth + 1)) return true;
      matcher_.rollback(mark);
      used_[hv] = false;
      vmap_[gv - 1] = 0;
    }
    return false;
  }

  // Graph edges whose later endpoint is order_[depth] become fully mapped;
  // each needs a nonempty candidate set and an augmenting path.
  bool close_edges(std::size_t depth) {
    for (std::size_t ge : closing_[depth]) {
      const auto [u, v] = g_.edge(ge);
      auto cands = candidates_for(pairs_, vmap_[u - 1], vmap_[v - 1], allowed_);
      if (cands.empty()) return false;
      matcher_.set_candidates(ge, std::move(cands));
    }
    for (std::size_t ge : closing_[depth]) {
      if (!matcher_.augment(ge)) return false;
    }
    return true;
  }

  const PairIndex& pairs_;
  const TargetGraph& g_;
  const std::vector<bool>* allowed_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<Vertex> vmap_;
  std::vector<bool> used_;
  Matcher matcher_;
};

}  // namespace

std::optional<std::vector<EdgeIndex>> matching_for_assignment(
    const PairIndex& pairs, const TargetGraph& g, const std::vector<Vertex>& vertex_map,
    const std::vector<bool>* allowed) {
  if (vertex_map.size() != g.num_vertices()) {
    fail(ErrorCode::kPrecondition, "vertex map size does not match the target graph");
  }
  std::size_t right = 0;
  std::vector<std::vector<EdgeIndex>> cands(g.num_edges());
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    const auto [u, v] = g.edge(j);
    cands[j] = candidates_for(pairs, vertex_map[u - 1], vertex_map[v - 1], allowed);
    if (cands[j].empty()) return std::nullopt;
    right = std::max<std::size_t>(right, cands[j].back() + 1);
  }
  Matcher matcher(g.num_edges(), right);
  matcher.resize_candidates(g.num_edges());
  for (std::size_t j = 0; j < g.num_edges(); ++j) matcher.set_candidates(j, std::move(cands[j]));
  for (std::size_t j = 0; j < g.num_edges(); ++j) {
    if (!matcher.augment(j)) return std::nullopt;
  }
  return matcher.assignment();
}

std::optional<std::vector<EdgeIndex>> matching_for_assignment(
    const Hypergraph& h, const TargetGraph& g, const std::vector<Vertex>& vertex_map,
    const std::vector<bool>* allowed) {
  for (Vertex v : vertex_map) {
    if (v < 1 || v > h.num_vertices()) fail(ErrorCode::kPrecondition, "vertex map out of range");
  }
  return matching_for_assignment(PairIndex(h), g, vertex_map, allowed);
}

BergeFinder::BergeFinder(const Hypergraph& h) : host_(&h), pairs_(h) {}

std::optional<BergeCertificate> BergeFinder::find(const TargetGraph& g,
                                                  const std::vector<bool>* allowed) const {
  if (allowed != nullptr && allowed->size() != host_->num_edges()) {
    fail(ErrorCode::kInvalidInput, "edge mask length does not match the host");
  }
  if (g.num_vertices() > host_->num_vertices()) return std::nullopt;
  if (g.num_edges() > allowed_count(host_->num_edges(), allowed)) return std::nullopt;

  BacktrackSearch search(pairs_, host_->num_edges(), g, allowed);
  if (!search.run()) return std::nullopt;

  auto edge_map = matching_for_assignment(pairs_, g, search.vertex_map(), allowed);
  if (!edge_map) fail(ErrorCode::kInternal, "search accepted an assignment with no matching");
  return BergeCertificate{search.vertex_map(), std::move(*edge_map)};
}

std::optional<BergeCertificate> find_berge(const Hypergraph& h, const TargetGraph& g,
                                           const EdgeColoring* coloring, std::optional<Color> color) {
  std::vector<bool> mask;
  const std::vector<bool>* allowed = nullptr;
  if (coloring != nullptr && color.has_value()) {
    validate_coloring(h, *coloring);
    mask = color_mask(*coloring, *color);
    allowed = &mask;
  }
  return BergeFinder(h).find(g, allowed);
}

std::optional<MonoBerge> contains_mono_berge(const BergeFinder& finder, const EdgeColoring& coloring,
                                             const TargetGraph& g1, const TargetGraph& g2) {
  if (coloring.palette_size != 2) {
    fail(ErrorCode::kPrecondition, "contains_mono_berge expects a 2-coloring");
  }
  validate_coloring(finder.host(), coloring);
  const auto blue = color_mask(coloring, 0);
  if (auto cert = finder.find(g1, &blue)) return MonoBerge{0, std::move(*cert)};
  const auto red = color_mask(coloring, 1);
  if (auto cert = finder.find(g2, &red)) return MonoBerge{1, std::move(*cert)};
  return std::nullopt;
}

std::optional<MonoBerge> contains_mono_berge(const Hypergraph& h, const EdgeColoring& coloring,
                                             const TargetGraph& g1, const TargetGraph& g2) {
  return contains_mono_berge(BergeFinder(h), coloring, g1, g2);
}

}  // namespace cover_ramsey
