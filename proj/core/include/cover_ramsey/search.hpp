#ifndef COVER_RAMSEY_SEARCH_HPP
#define COVER_RAMSEY_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cover_ramsey/berge.hpp"
#include "cover_ramsey/error.hpp"
#include "cover_ramsey/hypergraph.hpp"
#include "cover_ramsey/target_graph.hpp"

namespace cover_ramsey {

enum class Verdict { kUnavoidable, kAvoidable };

std::string_view to_string(Verdict v);

/// Colors of edges 0..p-1, written as a string over {0,1}, e.g. "01".
using ShardPrefix = std::vector<Color>;

ShardPrefix parse_shard_prefix(const std::string& text);
std::string to_string(const ShardPrefix& prefix);

/// All 2^bits prefixes of the given length, in increasing binary order.
std::vector<ShardPrefix> prefix_partition(std::size_t bits);

struct UnavoidableOptions {
  std::optional<ShardPrefix> shard;
  std::uint64_t max_colorings = std::uint64_t{1} << 20;
  unsigned jobs = 1;
};

struct UnavoidabilityResult {
  Verdict verdict = Verdict::kUnavoidable;
  std::optional<EdgeColoring> witness;
  std::uint64_t colorings_examined = 0;
  std::optional<ShardPrefix> shard;
  bool symmetry_cut = false;
};

/// Walks the 2-colorings of h (restricted to the shard prefix, if any) in
/// reflected Gray-code order over the free edges and stops at the first one
/// with neither a color-0 Berge-G1 nor a color-1 Berge-G2. When G1 == G2 and
/// no shard is given, edge 0 is fixed to color 0.
///
/// With jobs > 1 the Gray-index range is split into contiguous chunks run
/// concurrently; the reported witness and count are those of the serial
/// walk. Throws kLimitExceeded when the walk would exceed max_colorings.
UnavoidabilityResult unavoidable(const Hypergraph& h, const TargetGraph& g1, const TargetGraph& g2,
                                 const UnavoidableOptions& options = {});

/// Merges per-shard verdicts: avoidable iff some shard is, witness from the
/// first avoidable shard, colorings_examined summed.
UnavoidabilityResult merge_shards(const std::vector<UnavoidabilityResult>& shards);

/// Smallest n <= n_max with every 2-coloring of K_n containing a color-0 G1
/// or a color-1 G2.
std::optional<std::size_t> classical_ramsey_small(const TargetGraph& g1, const TargetGraph& g2,
                                                  std::size_t n_max, const UnavoidableOptions& options = {});

/// Pair -> the unique block of a linear covering host. Throws kPrecondition
/// when some pair lies in zero or several hyperedges.
class LinearHostIndex {
 public:
  explicit LinearHostIndex(const Hypergraph& h);

  EdgeIndex block(Vertex u, Vertex v) const { return block_[pair_id(u, v)]; }
  const Hypergraph& host() const noexcept { return *host_; }

 private:
  const Hypergraph* host_;
  std::vector<EdgeIndex> block_;
};

/// A t-set meeting every block in at most two points whose C(t,2) covering
/// blocks share one color; blocks are listed in lexicographic pair order.
struct BadEvent {
  VertexSet t_set;
  std::vector<EdgeIndex> blocks;
  Color color = 0;

  friend bool operator==(const BadEvent&, const BadEvent&) = default;
};

/// All bad events, t-sets in lexicographic order.
std::vector<BadEvent> scan_bad_events(const LinearHostIndex& index, const EdgeColoring& coloring,
                                      std::size_t t);
std::vector<BadEvent> scan_bad_events(const Hypergraph& h, const EdgeColoring& coloring, std::size_t t);

/// The lexicographically least bad event.
std::optional<BadEvent> first_bad_event(const LinearHostIndex& index, const EdgeColoring& coloring,
                                        std::size_t t);

struct MoserTardosOptions {
  std::uint64_t max_resamples = 1'000'000;
  bool record_trace = false;
};

struct MoserTardosResult {
  std::optional<EdgeColoring> coloring;  // empty when the budget ran out
  std::uint64_t resamples = 0;
  std::uint64_t trace_hash = 0;    // FNV-1a over the resampled t-sets
  std::vector<VertexSet> trace;    // filled when record_trace is set
};

/// Moser-Tardos resampling on a linear covering host. Colors come from the
/// top bit of mt19937_64(seed) outputs, initial coloring in edge order; each
/// step recolors the blocks of the lexicographically least bad event.
MoserTardosResult moser_tardos_coloring(const Hypergraph& h, std::size_t t, std::uint64_t seed,
                                        const MoserTardosOptions& options = {});

/// "R̂³(BK₄,BK₄) ≥ 10" style text for host edge size k, target K_t and bound.
std::string lower_bound_statement(std::size_t k, std::size_t t, std::size_t bound);
std::string lower_bound_statement_ascii(std::size_t k, std::size_t t, std::size_t bound);

struct LowerBoundCertificate {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  std::string method;  // "bad-event-scan" or "berge-search"
  std::string statement;
  std::string statement_ascii;
};

/// VERIFY_FAIL carrying the monochromatic copy that was found.
class VerifyFailure : public Error {
 public:
  VerifyFailure(const std::string& what, MonoBerge witness)
      : Error(ErrorCode::kVerifyFail, what), witness_(std::move(witness)) {}
  const MonoBerge& witness() const noexcept { return witness_; }

 private:
  MonoBerge witness_;
};

/// Re-verifies that `coloring` has no monochromatic Berge-K_t (bad-event
/// scan on linear hosts, Berge search otherwise) and certifies R̂ ≥ n + 1.
/// Throws VerifyFailure otherwise.
LowerBoundCertificate lower_bound_certificate(const Hypergraph& h, const EdgeColoring& coloring, std::size_t t);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_SEARCH_HPP
