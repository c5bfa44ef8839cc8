#ifndef COVER_RAMSEY_DESIGNS_HPP
#define COVER_RAMSEY_DESIGNS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cover_ramsey/hypergraph.hpp"

namespace cover_ramsey {

using ParallelClass = std::vector<VertexSet>;

/// Resolvable BIBD(n, k, 1) given by its parallel classes over points 1..n.
struct ResolvableDesign {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<ParallelClass> classes;

  std::size_t num_blocks() const;

  friend bool operator==(const ResolvableDesign&, const ResolvableDesign&) = default;
};

enum class DesignViolationKind {
  kPartitionFail,   // a class is not a partition of 1..n into k-blocks
  kPairCountFail,   // some pair lies in a number of blocks other than one
  kClassCountFail,  // m != (n - 1) / (k - 1), or the ratio is not integral
};

std::string_view to_string(DesignViolationKind kind);

struct DesignViolation {
  DesignViolationKind kind;
  std::string detail;
};

/// Empty iff `d` is a resolvable BIBD(n, k, 1).
std::vector<DesignViolation> verify_resolvable_bibd(const ResolvableDesign& d);

struct DesignOptions {
  /// Dancing-links node budget for the Kirkman searches.
  std::uint64_t search_node_limit = 1'000'000;
};

/// Supported families, tried in this order:
///   k = 2, n even            round-robin 1-factorization of K_n
///   n = k^2, k prime power   affine plane AG(2, k), one class per slope
///   k = 3, n = 3^m           lines of AG(m, 3), one class per direction
///   k = 3, n = 3 (mod 6)     Kirkman system from a cyclic base class
/// Throws kUnsupportedParameters otherwise, including when the Kirkman
/// search exhausts its budget.
ResolvableDesign construct_resolvable_bibd(std::size_t n, std::size_t k,
                                           const DesignOptions& options = {});

/// Every block becomes one hyperedge; throws kPrecondition on invalid designs.
Hypergraph design_to_hypergraph(const ResolvableDesign& d);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_DESIGNS_HPP
