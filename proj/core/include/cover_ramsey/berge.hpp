#ifndef COVER_RAMSEY_BERGE_HPP
#define COVER_RAMSEY_BERGE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cover_ramsey/hypergraph.hpp"
#include "cover_ramsey/target_graph.hpp"

namespace cover_ramsey {

/// Witness that a host contains a Berge copy of a target graph G.
///
/// vertex_map[i] is the host vertex of graph vertex i + 1; edge_map[j] is the
/// hyperedge index assigned to graph edge j. Both maps must be injective and
/// every graph edge {u, v} must satisfy {vertex_map(u), vertex_map(v)} ⊆
/// edge(edge_map(j)).
struct BergeCertificate {
  std::vector<Vertex> vertex_map;
  std::vector<EdgeIndex> edge_map;

  friend bool operator==(const BergeCertificate&, const BergeCertificate&) = default;
};

enum class VerifyReason {
  kOk,
  kMalformed,  // wrong map sizes or ids out of range
  kNotInjectiveVertices,
  kNotInjectiveEdges,
  kContainmentFail,
  kColorFail,
};

std::string_view to_string(VerifyReason reason);

struct VerifyOutcome {
  VerifyReason reason = VerifyReason::kOk;
  std::string detail;

  bool ok() const noexcept { return reason == VerifyReason::kOk; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Checks both injectivity conditions, containment and, when `coloring` and
/// `color` are both given, that every hyperedge in the image has that color.
VerifyOutcome verify_certificate(const Hypergraph& h, const TargetGraph& g,
                                 const BergeCertificate& cert,
                                 const EdgeColoring* coloring = nullptr,
                                 std::optional<Color> color = std::nullopt);

/// Injective edge map for a fixed vertex assignment, found as a maximum
/// bipartite matching between graph edges and the hyperedges (optionally
/// restricted to `allowed`) containing each mapped pair.
std::optional<std::vector<EdgeIndex>> matching_for_assignment(
    const Hypergraph& h, const TargetGraph& g, const std::vector<Vertex>& vertex_map,
    const std::vector<bool>* allowed = nullptr);

std::optional<std::vector<EdgeIndex>> matching_for_assignment(
    const PairIndex& pairs, const TargetGraph& g, const std::vector<Vertex>& vertex_map,
    const std::vector<bool>* allowed = nullptr);

/// Reusable Berge-G detector for one host; the pair index is built once so
/// many (target, color-mask) queries share it. Thread-safe for concurrent
/// const use.
class BergeFinder {
 public:
  explicit BergeFinder(const Hypergraph& h);

  /// Backtracks over injective vertex maps (graph vertices by descending
  /// degree, host candidates ascending), pruning as soon as the graph edges
  /// with both endpoints mapped admit no saturating matching.
  std::optional<BergeCertificate> find(const TargetGraph& g,
                                       const std::vector<bool>* allowed = nullptr) const;

  const Hypergraph& host() const noexcept { return *host_; }
  const PairIndex& pairs() const noexcept { return pairs_; }

 private:
  const Hypergraph* host_;
  PairIndex pairs_;
};

std::optional<BergeCertificate> find_berge(const Hypergraph& h, const TargetGraph& g,
                                           const EdgeColoring* coloring = nullptr,
                                           std::optional<Color> color = std::nullopt);

struct MonoBerge {
  Color color = 0;
  BergeCertificate certificate;
};

/// A blue (color 0) Berge-G1 or a red (color 1) Berge-G2; blue is reported
/// when both exist.
std::optional<MonoBerge> contains_mono_berge(const Hypergraph& h, const EdgeColoring& coloring,
                                             const TargetGraph& g1, const TargetGraph& g2);

std::optional<MonoBerge> contains_mono_berge(const BergeFinder& finder,
                                             const EdgeColoring& coloring,
                                             const TargetGraph& g1, const TargetGraph& g2);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_BERGE_HPP
