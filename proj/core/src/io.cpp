#include "cover_ramsey/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

namespace {

[[noreturn]] void parse_error(const std::string& what) { fail(ErrorCode::kParse, what); }

std::vector<std::string_view> raw_lines(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  if (text.back() != '\n') parse_error("missing trailing newline");
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : raw_lines(text)) {
    if (!line.empty() && line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::vector<std::size_t> integers(std::string_view line) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    const std::size_t used = static_cast<std::size_t>(ptr - (line.data() + i));
    if (ec != std::errc() || used == 0) parse_error("expected a non-negative integer in \"" + std::string(line) + "\"");
    i += used;
    if (i < line.size() && line[i] != ' ' && line[i] != '\t') {
      parse_error("unexpected character in \"" + std::string(line) + "\"");
    }
    out.push_back(value);
  }
  return out;
}

std::vector<std::size_t> integers(std::string_view line, std::size_t count) {
  auto v = integers(line);
  if (v.size() != count) {
    parse_error("expected " + std::to_string(count) + " integers in \"" + std::string(line) + "\"");
  }
  return v;
}

template <typename Seq>
std::string join(const Seq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(seq[i]);
  }
  return out;
}

}  // namespace

std::string write_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + " " + std::to_string(h.num_edges()) + "\n";
  for (const auto& e : h.edges()) out += join(e) + "\n";
  return out;
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error("empty hypergraph file");
  const auto header = integers(lines[0], 2);
  const std::size_t m = header[1];
  if (lines.size() != m + 1) {
    parse_error("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<VertexSet> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    VertexSet e;
    for (std::size_t v : integers(lines[i])) e.push_back(static_cast<Vertex>(v));
    if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) {
      parse_error("edge on line " + std::to_string(i + 1) + " is not strictly ascending");
    }
    if (!edges.empty() && !(edges.back() < e)) {
      parse_error("edge on line " + std::to_string(i + 1) + " is out of canonical order");
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(header[0], std::move(edges));
}

std::string write_coloring(const EdgeColoring& c) {
  std::string out;
  for (Color x : c.colors) {
    if (x > 9) fail(ErrorCode::kInvalidInput, "the coloring sidecar holds single digits only");
    out.push_back(static_cast<char>('0' + x));
  }
  return out + "\n";
}

EdgeColoring parse_coloring(std::string_view text, std::size_t palette_size) {
  const auto lines = content_lines(text);
  if (lines.size() != 1) parse_error("coloring must be a single line");
  EdgeColoring c;
  c.palette_size = palette_size;
  for (char ch : lines[0]) {
    if (ch < '0' || ch > '9') parse_error(std::string("invalid color character '") + ch + "'");
    const auto color = static_cast<Color>(ch - '0');
    if (color >= palette_size) parse_error("color " + std::to_string(color) + " outside the palette");
    c.colors.push_back(color);
  }
  return c;
}

std::string write_target(const TargetGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

TargetGraph parse_target(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error("empty target graph file");
  const auto header = integers(lines[0], 2);
  if (lines.size() != header[1] + 1) parse_error("target header edge count does not match the body");
  std::vector<TargetGraph::GraphEdge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = integers(lines[i], 2);
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  return TargetGraph(header[0], std::move(edges));
}

std::string write_design(const ResolvableDesign& d) {
  std::string out =
      std::to_string(d.n) + " " + std::to_string(d.k) + " " + std::to_string(d.classes.size()) + "\n";
  for (std::size_t i = 0; i < d.classes.size(); ++i) {
    if (i) out += "%\n";
    for (const auto& block : d.classes[i]) out += join(block) + "\n";
  }
  return out;
}

ResolvableDesign parse_design(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) parse_error("empty design file");
  const auto header = integers(lines[0], 3);
  ResolvableDesign d{header[0], header[1], {}};
  if (header[2] > 0) d.classes.emplace_back();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i] == "%") {
      d.classes.emplace_back();
      continue;
    }
    if (d.classes.empty()) parse_error("block listed in a design with zero classes");
    VertexSet block;
    for (std::size_t v : integers(lines[i], d.k)) block.push_back(static_cast<Vertex>(v));
    d.classes.back().push_back(std::move(block));
  }
  if (d.classes.size() != header[2]) {
    parse_error("header announces " + std::to_string(header[2]) + " classes, found " +
                std::to_string(d.classes.size()));
  }
  return d;
}

std::string write_certificate(const BergeCertificate& cert) {
  std::string out = "vertex_map " + std::to_string(cert.vertex_map.size()) + "\n";
  for (std::size_t i = 0; i < cert.vertex_map.size(); ++i) {
    out += std::to_string(i + 1) + " " + std::to_string(cert.vertex_map[i]) + "\n";
  }
  out += "edge_map " + std::to_string(cert.edge_map.size()) + "\n";
  for (std::size_t j = 0; j < cert.edge_map.size(); ++j) {
    out += std::to_string(j) + " " + std::to_string(cert.edge_map[j]) + "\n";
  }
  return out;
}

namespace {

std::size_t keyword_count(std::string_view line, std::string_view keyword) {
  if (line.substr(0, keyword.size()) != keyword || line.size() <= keyword.size() || line[keyword.size()] != ' ') {
    parse_error("expected \"" + std::string(keyword) + " <count>\"");
  }
  return integers(line.substr(keyword.size() + 1), 1)[0];
}

}  // namespace

BergeCertificate parse_certificate(std::string_view text) {
  const auto lines = content_lines(text);
  std::size_t pos = 0;
  auto next = [&]() -> std::string_view {
    if (pos >= lines.size()) parse_error("certificate ends early");
    return lines[pos++];
  };
  BergeCertificate cert;
  const std::size_t nv = keyword_count(next(), "vertex_map");
  for (std::size_t i = 0; i < nv; ++i) {
    const auto pair = integers(next(), 2);
    if (pair[0] != i + 1) parse_error("vertex_map entries must list graph vertices 1..nv in order");
    cert.vertex_map.push_back(static_cast<Vertex>(pair[1]));
  }
  const std::size_t ne = keyword_count(next(), "edge_map");
  for (std::size_t j = 0; j < ne; ++j) {
    const auto pair = integers(next(), 2);
    if (pair[0] != j) parse_error("edge_map entries must list graph edges 0..ne-1 in order");
    cert.edge_map.push_back(static_cast<EdgeIndex>(pair[1]));
  }
  if (pos != lines.size()) parse_error("trailing content after the certificate");
  return cert;
}

std::string write_product_reduction(const ProductReduction& red) {
  const std::size_t n = red.graph.num_vertices();
  std::ostringstream out;
  out << "product " << n << " " << red.coloring.palette_size << " " << red.k << "\n";
  for (Vertex v = 1; v <= n; ++v) {
    for (Vertex u = 1; u < v; ++u) {
      if (u > 1) out << ' ';
      out << red.coloring.colors[complete_graph_edge_index(n, u, v)];
    }
    out << "\n";
  }
  out << "provenance " << pair_count(n) << "\n";
  std::size_t idx = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++idx) {
      out << u << " " << v << " " << red.source_edge[idx] << " " << red.label[idx] << "\n";
    }
  }
  return out.str();
}

const std::string& Bundle::section(std::string_view name) const {
  for (const auto& [key, body] : sections) {
    if (key == name) return body;
  }
  parse_error("bundle has no @" + std::string(name) + " section");
}

bool Bundle::has(std::string_view name) const {
  return std::any_of(sections.begin(), sections.end(), [&](const auto& s) { return s.first == name; });
}

void Bundle::add(std::string name, std::string body) { sections.emplace_back(std::move(name), std::move(body)); }

std::string write_bundle(const Bundle& b) {
  std::string out;
  for (const auto& line : b.manifest) out += "# " + line + "\n";
  out += "@bundle " + b.kind + "\n";
  for (const auto& [name, body] : b.sections) {
    out += "@" + name + "\n" + body;
    if (!body.empty() && body.back() != '\n') out += "\n";
  }
  return out + "@end\n";
}

Bundle parse_bundle(std::string_view text) {
  const auto lines = raw_lines(text);
  Bundle b;
  std::size_t i = 0;
  for (; i < lines.size() && !lines[i].empty() && lines[i].front() == '#'; ++i) {
    std::string_view m = lines[i].substr(1);
    if (!m.empty() && m.front() == ' ') m.remove_prefix(1);
    b.manifest.emplace_back(m);
  }
  constexpr std::string_view kHead = "@bundle ";
  if (i >= lines.size() || lines[i].substr(0, kHead.size()) != kHead) parse_error("missing @bundle line");
  b.kind = std::string(lines[i].substr(kHead.size()));
  ++i;
  bool ended = false;
  for (; i < lines.size(); ++i) {
    const auto line = lines[i];
    if (line == "@end") {
      ended = true;
      ++i;
      break;
    }
    if (!line.empty() && line.front() == '@') {
      b.sections.emplace_back(std::string(line.substr(1)), std::string());
      continue;
    }
    if (b.sections.empty()) parse_error("bundle content before the first section");
    b.sections.back().second.append(line).push_back('\n');
  }
  if (!ended) parse_error("bundle is missing @end");
  if (i != lines.size()) parse_error("content after @end");
  return b;
}

}  // namespace cover_ramsey
