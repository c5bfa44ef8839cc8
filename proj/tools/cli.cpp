#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "cover_ramsey/berge.hpp"
#include "cover_ramsey/bounds.hpp"
#include "cover_ramsey/designs.hpp"
#include "cover_ramsey/io.hpp"
#include "cover_ramsey/reductions.hpp"
#include "cover_ramsey/search.hpp"

namespace cover_ramsey::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLimitExceeded: return kExitLimit;
    case ErrorCode::kVerifyFail: return kExitVerify;
    default: return kExitPrecondition;
  }
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    fail(ErrorCode::kInternal, "SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

std::string render_fields(const Fields& fields) {
  std::string out;
  for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
  return out;
}

std::map<std::string, std::string> parse_fields(const std::string& body) {
  std::map<std::string, std::string> out;
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon == std::string::npos) fail(ErrorCode::kParse, "expected \"key: value\" in \"" + line + "\"");
    out.emplace(line.substr(0, colon), line.substr(colon + 2));
  }
  return out;
}

const std::string& field(const std::map<std::string, std::string>& fields, const std::string& key) {
  const auto it = fields.find(key);
  if (it == fields.end()) fail(ErrorCode::kParse, "missing field \"" + key + "\"");
  return it->second;
}

std::size_t to_size(const std::string& text) {
  std::size_t pos = 0;
  std::size_t value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) fail(ErrorCode::kParse, "expected an integer, got \"" + text + "\"");
  return value;
}

bool sections_are_fields(const std::string& name) { return name == "result" || name == "report"; }

nlohmann::ordered_json to_json(const Bundle& b) {
  nlohmann::ordered_json j;
  j["kind"] = b.kind;
  j["manifest"] = b.manifest;
  auto& sections = j["sections"] = nlohmann::ordered_json::array();
  for (const auto& [name, body] : b.sections) {
    nlohmann::ordered_json s{{"name", name}, {"body", body}};
    if (sections_are_fields(name)) {
      nlohmann::ordered_json fields = nlohmann::ordered_json::object();
      std::istringstream in(body);
      std::string line;
      while (std::getline(in, line)) {
        const auto colon = line.find(": ");
        if (colon == std::string::npos) continue;
        const std::string key = line.substr(0, colon);
        const std::string value = line.substr(colon + 2);
        if (!fields.contains(key)) {
          fields[key] = value;
        } else {
          if (!fields[key].is_array()) fields[key] = nlohmann::ordered_json::array({fields[key]});
          fields[key].push_back(value);
        }
      }
      s["fields"] = fields;
    }
    sections.push_back(s);
  }
  return j;
}

Bundle from_json(const std::string& text) {
  Bundle b;
  try {
    const auto j = nlohmann::json::parse(text);
    b.kind = j.at("kind").get<std::string>();
    b.manifest = j.at("manifest").get<std::vector<std::string>>();
    for (const auto& s : j.at("sections")) b.add(s.at("name").get<std::string>(), s.at("body").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("structured bundle: ") + e.what());
  }
  return b;
}

Bundle read_any_bundle(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return parse_bundle(text);
}

struct Session {
  std::vector<std::string> args;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> digests;
  std::ostream* out;
  std::ostream* err;

  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::kPrecondition, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    digests.push_back("input " + path + " sha256 " + sha256_hex(text));
    return text;
  }

  Bundle bundle(std::string kind) const {
    Bundle b;
    b.kind = std::move(kind);
    std::string command;
    for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
    b.manifest = {std::string("tool: cover-ramsey ") + COVER_RAMSEY_VERSION, "command: " + command,
                  "seed: " + std::to_string(seed)};
    b.manifest.insert(b.manifest.end(), digests.begin(), digests.end());
    return b;
  }

  void emit(const Bundle& b) const {
    const std::string text = format == "structured" ? to_json(b).dump(2) + "\n" : write_bundle(b);
    if (out_path.empty()) {
      *out << text;
      return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) fail(ErrorCode::kPrecondition, "cannot write " + out_path);
    file << text;
  }
};

// ---- bounds ---------------------------------------------------------------

BoundReport compute_bound(const std::string& formula, const std::map<std::string, std::string>& in) {
  auto get = [&](const std::string& key) { return to_size(field(in, key)); };
  if (formula == "thm1-upper") return thm1_upper_bound(get("k"), get("r"));
  if (formula == "scatter-union-bound") return scatter_bound_report(get("n"), get("s"), get("k"));
  if (formula == "lll") return lll_inequality(get("n"), get("t"), get("k"));
  if (formula == "lll-threshold") {
    return lll_threshold_report(get("t"), get("k"), field(in, "admissible_only") == "true");
  }
  if (formula == "asymptotic-lower") return asymptotic_report(get("t"));
  fail(ErrorCode::kParse, "unknown formula \"" + formula + "\"");
}

int emit_bound(Session& s, const std::string& formula, const std::map<std::string, std::string>& inputs) {
  Bundle b = s.bundle("bound");
  b.add("report", render(compute_bound(formula, inputs)));
  s.emit(b);
  return kExitOk;
}

// ---- covering report -------------------------------------------------------

std::string covering_report(const Hypergraph& h) {
  const auto opt = [](std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string("none"); };
  Fields f{{"n", std::to_string(h.num_vertices())},
           {"m", std::to_string(h.num_edges())},
           {"max_edge_size", std::to_string(h.max_edge_size())},
           {"covering", is_covering(h) ? "true" : "false"},
           {"min_codegree", opt(min_codegree(h))},
           {"max_codegree", opt(max_codegree(h))},
           {"linear", is_linear_covering(h) ? "true" : "false"}};
  return render_fields(f);
}

// ---- verify ----------------------------------------------------------------

[[noreturn]] void mismatch(const std::string& what) { fail(ErrorCode::kVerifyFail, what); }

void verify_bundle(const Bundle& b) {
  const auto host = [&] { return parse_hypergraph(b.section("host")); };
  if (b.kind == "design") {
    const auto d = parse_design(b.section("design"));
    const auto violations = verify_resolvable_bibd(d);
    if (!violations.empty()) {
      mismatch(std::string(to_string(violations.front().kind)) + ": " + violations.front().detail);
    }
    if (b.has("host") && host() != design_to_hypergraph(d)) mismatch("@host differs from the design blocks");
  } else if (b.kind == "berge") {
    const auto h = host();
    const auto g = parse_target(b.section("target"));
    const auto cert = parse_certificate(b.section("certificate"));
    std::optional<EdgeColoring> coloring;
    std::optional<Color> color;
    if (b.has("coloring")) {
      coloring = parse_coloring(b.section("coloring"));
      color = static_cast<Color>(to_size(field(parse_fields(b.section("result")), "color")));
    }
    const auto outcome = verify_certificate(h, g, cert, coloring ? &*coloring : nullptr, color);
    if (!outcome) mismatch(std::string(to_string(outcome.reason)) + ": " + outcome.detail);
  } else if (b.kind == "unavoidability") {
    const auto h = host();
    const auto g1 = parse_target(b.section("g1"));
    const auto g2 = parse_target(b.section("g2"));
    const auto r = parse_fields(b.section("result"));
    UnavoidableOptions opt;
    if (field(r, "shard") != "none") opt.shard = parse_shard_prefix(field(r, "shard"));
    opt.max_colorings = to_size(field(r, "limit"));
    if (field(r, "verdict") == "AVOIDABLE") {
      const auto w = parse_coloring(b.section("witness"));
      validate_coloring(h, w);
      if (opt.shard && !std::equal(opt.shard->begin(), opt.shard->end(), w.colors.begin())) {
        mismatch("witness does not extend the shard prefix");
      }
      if (auto mono = contains_mono_berge(h, w, g1, g2)) {
        mismatch("witness contains a monochromatic target in color " + std::to_string(mono->color));
      }
    } else {
      const auto again = unavoidable(h, g1, g2, opt);
      if (again.verdict != Verdict::kUnavoidable) mismatch("re-run found an avoiding coloring");
    }
  } else if (b.kind == "lll-coloring") {
    const auto h = host();
    const auto c = parse_coloring(b.section("coloring"));
    const std::size_t t = to_size(field(parse_fields(b.section("result")), "t"));
    const auto bad = scan_bad_events(h, c, t);
    if (!bad.empty()) mismatch(std::to_string(bad.size()) + " bad events remain");
  } else if (b.kind == "scatter") {
    const auto h = host();
    const auto r = parse_fields(b.section("result"));
    VertexSet subset;
    std::istringstream in(field(r, "subset"));
    for (std::size_t v; in >> v;) subset.push_back(static_cast<Vertex>(v));
    if (subset.size() != to_size(field(r, "s"))) mismatch("subset size differs from s");
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] < 1 || subset[i] > h.num_vertices() || (i && subset[i - 1] >= subset[i])) {
        mismatch("subset is not an ascending set of host vertices");
      }
    }
    if (!ScatterChecker(h).is_scattered(subset)) mismatch("some hyperedge meets the subset in 3 or more points");
  } else if (b.kind == "product") {
    const auto red = multicolor_product_reduction(host(), parse_coloring(b.section("coloring")));
    if (write_product_reduction(red) != b.section("reduction")) mismatch("reduction differs from recomputation");
  } else if (b.kind == "lower-bound") {
    const auto r = parse_fields(b.section("result"));
    const auto cert = lower_bound_certificate(host(), parse_coloring(b.section("coloring")), to_size(field(r, "t")));
    if (cert.statement != field(r, "statement")) mismatch("statement differs from recomputation");
  } else if (b.kind == "covering-report") {
    const auto h = host();
    if (covering_report(h) != b.section("result")) mismatch("covering report differs from recomputation");
    if (b.has("minimal") && parse_hypergraph(b.section("minimal")) != minimal_covering_subhypergraph(h)) {
      mismatch("minimal subhypergraph differs from recomputation");
    }
  } else if (b.kind == "bound") {
    const auto body = b.section("report");
    std::map<std::string, std::string> inputs;
    std::string formula;
    for (const auto& [key, value] : parse_fields(body)) {
      if (key == "formula") formula = value;
      if (key.rfind("input ", 0) == 0) inputs[key.substr(6)] = value;
    }
    if (render(compute_bound(formula, inputs)) != body) mismatch("bound report differs from recomputation");
  } else {
    fail(ErrorCode::kParse, "unknown bundle kind \"" + b.kind + "\"");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  s.args = args;
  s.out = &out;
  s.err = &err;

  CLI::App app{"Cover Ramsey numbers of Berge hypergraphs: designs, search, certificates and bounds",
               "cover-ramsey"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--seed", s.seed, "Seed for every random choice")->default_val(0);
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->default_val("text");
  app.add_option("--out", s.out_path, "Write the output bundle to this file");

  std::function<int()> action;

  std::size_t n = 0, k = 0, t = 0, r = 0;
  std::string host_path, target_path, g2_path, coloring_path, file_path, shard;
  std::optional<std::size_t> color;
  bool minimize = false, admissible = false;
  unsigned jobs = 1;
  std::uint64_t limit = std::uint64_t{1} << 20;
  std::uint64_t max_resamples = 1'000'000;
  std::size_t max_attempts = 1000;
  std::uint64_t node_limit = DesignOptions{}.search_node_limit;

  auto* gen = app.add_subcommand("gen-design", "Construct a resolvable BIBD(n,k,1)");
  gen->add_option("n", n)->required();
  gen->add_option("k", k)->required();
  gen->add_option("--node-limit", node_limit, "Node budget for Kirkman searches");
  gen->callback([&] {
    action = [&] {
      const auto d = construct_resolvable_bibd(n, k, DesignOptions{node_limit});
      Bundle b = s.bundle("design");
      b.add("design", write_design(d));
      b.add("host", write_hypergraph(design_to_hypergraph(d)));
      s.emit(b);
      return kExitOk;
    };
  });

  auto* cover = app.add_subcommand("check-covering", "Shadow, co-degree and covering report");
  cover->add_option("file", host_path)->required();
  cover->add_flag("--minimize", minimize, "Also emit the greedy edge-minimal covering subhypergraph");
  cover->callback([&] {
    action = [&] {
      const auto text = s.read(host_path);
      const auto h = parse_hypergraph(text);
      Bundle b = s.bundle("covering-report");
      b.add("host", write_hypergraph(h));
      b.add("result", covering_report(h));
      if (minimize) b.add("minimal", write_hypergraph(minimal_covering_subhypergraph(h)));
      s.emit(b);
      return kExitOk;
    };
  });

  auto* find = app.add_subcommand("find-berge", "Search for a (monochromatic) Berge copy of a graph");
  find->add_option("host", host_path)->required();
  find->add_option("target", target_path)->required();
  auto* color_opt = find->add_option("--color", color, "Restrict to hyperedges of this color");
  find->add_option("--coloring", coloring_path, "Coloring sidecar file")->needs(color_opt);
  color_opt->needs("--coloring");
  find->callback([&] {
    action = [&] {
      const auto h = parse_hypergraph(s.read(host_path));
      const auto g = parse_target(s.read(target_path));
      std::optional<EdgeColoring> coloring;
      if (!coloring_path.empty()) coloring = parse_coloring(s.read(coloring_path));
      const auto cert = find_berge(h, g, coloring ? &*coloring : nullptr,
                                   color ? std::optional<Color>(static_cast<Color>(*color)) : std::nullopt);
      Bundle b = s.bundle("berge");
      b.add("host", write_hypergraph(h));
      b.add("target", write_target(g));
      if (coloring) b.add("coloring", write_coloring(*coloring));
      Fields f{{"found", cert ? "true" : "false"}, {"target", g.describe()}};
      if (color) f.emplace_back("color", std::to_string(*color));
      b.add("result", render_fields(f));
      if (cert) b.add("certificate", write_certificate(*cert));
      if (!cert) b.kind = "berge-absent";
      s.emit(b);
      return kExitOk;
    };
  });

  auto* unav = app.add_subcommand("unavoidable", "Does every 2-coloring contain a blue G1 or a red G2?");
  unav->add_option("host", host_path)->required();
  unav->add_option("g1", target_path)->required();
  unav->add_option("g2", g2_path)->required();
  unav->add_option("--shard", shard, "Fixed colors of the first edges, e.g. 01");
  unav->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  unav->add_option("--limit", limit, "Maximum colorings to enumerate")->default_val(limit);
  unav->callback([&] {
    action = [&] {
      const auto h = parse_hypergraph(s.read(host_path));
      const auto g1 = parse_target(s.read(target_path));
      const auto g2 = parse_target(s.read(g2_path));
      UnavoidableOptions opt;
      if (!shard.empty()) opt.shard = parse_shard_prefix(shard);
      opt.max_colorings = limit;
      opt.jobs = jobs;
      const auto res = unavoidable(h, g1, g2, opt);
      Bundle b = s.bundle("unavoidability");
      b.add("host", write_hypergraph(h));
      b.add("g1", write_target(g1));
      b.add("g2", write_target(g2));
      b.add("result", render_fields({{"verdict", std::string(to_string(res.verdict))},
                                     {"colorings_examined", std::to_string(res.colorings_examined)},
                                     {"shard", res.shard ? to_string(*res.shard) : "none"},
                                     {"symmetry_cut", res.symmetry_cut ? "true" : "false"},
                                     {"limit", std::to_string(limit)}}));
      if (res.witness) b.add("witness", write_coloring(*res.witness));
      s.emit(b);
      return kExitOk;
    };
  });

  auto* mt = app.add_subcommand("mt-lll", "Moser-Tardos coloring with no monochromatic Berge-K_t");
  mt->add_option("host", host_path)->required();
  mt->add_option("t", t)->required();
  mt->add_option("--max-resamples", max_resamples)->default_val(max_resamples);
  mt->callback([&] {
    action = [&] {
      const auto h = parse_hypergraph(s.read(host_path));
      const auto res = moser_tardos_coloring(h, t, s.seed, MoserTardosOptions{max_resamples, false});
      std::ostringstream hash;
      hash << std::hex << std::setw(16) << std::setfill('0') << res.trace_hash;
      Fields f{{"t", std::to_string(t)},
               {"seed", std::to_string(s.seed)},
               {"resamples", std::to_string(res.resamples)},
               {"trace_hash", hash.str()},
               {"status", res.coloring ? "ok" : "exhausted"}};
      if (t >= 3 && h.num_vertices() >= t && h.max_edge_size() >= 2) {
        f.emplace_back("lll_holds", lll_inequality_holds(h.num_vertices(), t, h.max_edge_size()) ? "true" : "false");
      }
      Bundle b = s.bundle("lll-coloring");
      b.add("host", write_hypergraph(h));
      b.add("result", render_fields(f));
      if (res.coloring) b.add("coloring", write_coloring(*res.coloring));
      if (!res.coloring) b.kind = "lll-exhausted";
      s.emit(b);
      return res.coloring ? kExitOk : kExitLimit;
    };
  });

  auto* sc = app.add_subcommand("scatter", "Sample an s-set meeting every hyperedge in at most 2 points");
  sc->add_option("host", host_path)->required();
  sc->add_option("s", r)->required();
  sc->add_option("--max-attempts", max_attempts)->default_val(max_attempts);
  sc->callback([&] {
    action = [&] {
      const auto h = parse_hypergraph(s.read(host_path));
      const auto sample = sample_scattered_subset(h, r, s.seed, max_attempts);
      Fields f{{"s", std::to_string(r)}, {"seed", std::to_string(s.seed)}};
      if (h.num_vertices() >= 3) {
        f.emplace_back("bound", to_fraction_string(scatter_failure_bound(h.num_vertices(), r, h.max_edge_size())));
      }
      if (sample) {
        std::string subset;
        for (Vertex v : sample->subset) subset += (subset.empty() ? "" : " ") + std::to_string(v);
        f.emplace_back("attempts", std::to_string(sample->attempts));
        f.emplace_back("subset", subset);
      } else {
        f.emplace_back("attempts", std::to_string(max_attempts));
        f.emplace_back("status", "exhausted");
      }
      Bundle b = s.bundle(sample ? "scatter" : "scatter-exhausted");
      b.add("host", write_hypergraph(h));
      b.add("result", render_fields(f));
      s.emit(b);
      return sample ? kExitOk : kExitLimit;
    };
  });

  auto* prod = app.add_subcommand("reduce-product", "Color-product reduction to a multicolored complete graph");
  prod->add_option("host", host_path)->required();
  prod->add_option("coloring", coloring_path)->required();
  prod->callback([&] {
    action = [&] {
      const auto h = parse_hypergraph(s.read(host_path));
      const auto c = parse_coloring(s.read(coloring_path));
      const auto red = multicolor_product_reduction(h, c);
      Bundle b = s.bundle("product");
      b.add("host", write_hypergraph(h));
      b.add("coloring", write_coloring(c));
      b.add("reduction", write_product_reduction(red));
      s.emit(b);
      return kExitOk;
    };
  });

  auto* bound = app.add_subcommand("bound", "Exact evaluation of a bound formula");
  bound->require_subcommand(1);
  std::map<std::string, std::string> inputs;
  auto sz = [](std::size_t v) { return std::to_string(v); };
  auto* b_thm1 = bound->add_subcommand("thm1", "ceil(k^3 r^3 / 12) with the sufficiency check");
  b_thm1->add_option("k", k)->required();
  b_thm1->add_option("r", r)->required();
  b_thm1->callback([&] { action = [&] { return emit_bound(s, "thm1-upper", {{"k", sz(k)}, {"r", sz(r)}}); }; });
  auto* b_lll = bound->add_subcommand("lll", "LLL inequality at (n, t, k)");
  b_lll->add_option("n", n)->required();
  b_lll->add_option("t", t)->required();
  b_lll->add_option("k", k)->required();
  b_lll->callback([&] { action = [&] { return emit_bound(s, "lll", {{"n", sz(n)}, {"t", sz(t)}, {"k", sz(k)}}); }; });
  auto* b_thr = bound->add_subcommand("lll-threshold", "Largest n satisfying the LLL inequality");
  b_thr->add_option("t", t)->required();
  b_thr->add_option("k", k)->required();
  b_thr->add_flag("--admissible", admissible, "Only n = k (mod k(k-1))");
  b_thr->callback([&] {
    action = [&] {
      return emit_bound(s, "lll-threshold",
                        {{"t", sz(t)}, {"k", sz(k)}, {"admissible_only", admissible ? "true" : "false"}});
    };
  });
  auto* b_asym = bound->add_subcommand("asym", "(sqrt2/e) t 2^(t/2)");
  b_asym->add_option("t", t)->required();
  b_asym->callback([&] { action = [&] { return emit_bound(s, "asymptotic-lower", {{"t", sz(t)}}); }; });
  auto* b_scat = bound->add_subcommand("scatter", "3 C(k,3) C(s,3) / (n-2)");
  b_scat->add_option("n", n)->required();
  b_scat->add_option("s", r)->required();
  b_scat->add_option("k", k)->required();
  b_scat->callback([&] {
    action = [&] { return emit_bound(s, "scatter-union-bound", {{"n", sz(n)}, {"s", sz(r)}, {"k", sz(k)}}); };
  });

  auto* cert = app.add_subcommand("certify-lower", "Certify that a coloring has no monochromatic Berge-K_t");
  cert->add_option("host", host_path)->required();
  cert->add_option("coloring", coloring_path)->required();
  cert->add_option("t", t)->required();
  cert->callback([&] {
    action = [&] {
      const auto h = parse_hypergraph(s.read(host_path));
      const auto c = parse_coloring(s.read(coloring_path));
      try {
        const auto lb = lower_bound_certificate(h, c, t);
        Bundle b = s.bundle("lower-bound");
        b.add("host", write_hypergraph(h));
        b.add("coloring", write_coloring(c));
        b.add("result", render_fields({{"n", sz(lb.n)},
                                       {"k", sz(lb.k)},
                                       {"t", sz(lb.t)},
                                       {"method", lb.method},
                                       {"statement", lb.statement},
                                       {"statement_ascii", lb.statement_ascii}}));
        s.emit(b);
        return kExitOk;
      } catch (const VerifyFailure& e) {
        Bundle b = s.bundle("berge");
        b.add("host", write_hypergraph(h));
        b.add("target", write_target(TargetGraph::complete(t)));
        b.add("coloring", write_coloring(c));
        b.add("result", render_fields({{"found", "true"}, {"color", std::to_string(e.witness().color)}}));
        b.add("certificate", write_certificate(e.witness().certificate));
        s.emit(b);
        err << "VERIFY_FAIL: " << e.what() << "\n";
        return kExitVerify;
      }
    };
  });

  auto* ver = app.add_subcommand("verify", "Re-verify a bundle produced by another subcommand");
  ver->add_option("file", file_path)->required();
  ver->callback([&] {
    action = [&] {
      const auto b = read_any_bundle(s.read(file_path));
      verify_bundle(b);
      out << "verify: OK " << b.kind << "\n";
      return kExitOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    code = action();
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    code = exit_code_for(e.code());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "wall-time: " << std::fixed << std::setprecision(3) << seconds << " s\n";
  return code;
}

}  // namespace cover_ramsey::cli
