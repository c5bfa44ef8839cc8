#ifndef COVER_RAMSEY_IO_HPP
#define COVER_RAMSEY_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cover_ramsey/berge.hpp"
#include "cover_ramsey/designs.hpp"
#include "cover_ramsey/hypergraph.hpp"
#include "cover_ramsey/reductions.hpp"
#include "cover_ramsey/target_graph.hpp"

namespace cover_ramsey {

// All parsers throw kParse on malformed text and skip lines starting with '#'.
// Every format ends with a newline.

/// "<n> <m>" then one line of ascending vertex ids per edge. Edges must
/// appear in canonical (lexicographic) order so that coloring positions
/// line up with edge indices.
std::string write_hypergraph(const Hypergraph& h);
Hypergraph parse_hypergraph(std::string_view text);

/// One line of digits, one per edge.
std::string write_coloring(const EdgeColoring& c);
EdgeColoring parse_coloring(std::string_view text, std::size_t palette_size = 2);

/// "<nv> <ne>" then one "u v" line per edge.
std::string write_target(const TargetGraph& g);
TargetGraph parse_target(std::string_view text);

/// "<n> <k> <m>" then the classes, each n/k lines of k ids, separated by "%".
std::string write_design(const ResolvableDesign& d);
ResolvableDesign parse_design(std::string_view text);

/// "vertex_map <nv>" with "graph-vertex host-vertex" lines, then
/// "edge_map <ne>" with "graph-edge-index hyperedge-index" lines.
std::string write_certificate(const BergeCertificate& cert);
BergeCertificate parse_certificate(std::string_view text);

/// "product <n> <palette> <k>", a lower-triangular color matrix (row v holds
/// the colors of pairs (1,v)..(v-1,v)), then "provenance <C(n,2)>" and one
/// "u v hyperedge-index label" line per pair in lexicographic order.
std::string write_product_reduction(const ProductReduction& red);

/// Self-contained record: '#' manifest lines, "@bundle <kind>", named
/// sections "@<name>" holding their own text formats, then "@end".
struct Bundle {
  std::vector<std::string> manifest;  // without the leading "# "
  std::string kind;
  std::vector<std::pair<std::string, std::string>> sections;

  /// Throws kParse when the section is missing.
  const std::string& section(std::string_view name) const;
  bool has(std::string_view name) const;
  void add(std::string name, std::string body);
};

std::string write_bundle(const Bundle& b);
Bundle parse_bundle(std::string_view text);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_IO_HPP
