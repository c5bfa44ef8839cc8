#include "cover_ramsey/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace cover_ramsey {

std::string_view to_string(Verdict v) {
  return v == Verdict::kUnavoidable ? "UNAVOIDABLE" : "AVOIDABLE";
}

ShardPrefix parse_shard_prefix(const std::string& text) {
  ShardPrefix out;
  for (char c : text) {
    if (c != '0' && c != '1') fail(ErrorCode::kInvalidInput, "shard prefix must be a string over {0,1}");
    out.push_back(static_cast<Color>(c - '0'));
  }
  return out;
}

std::string to_string(const ShardPrefix& prefix) {
  std::string out;
  for (Color c : prefix) out.push_back(static_cast<char>('0' + c));
  return out;
}

std::vector<ShardPrefix> prefix_partition(std::size_t bits) {
  if (bits >= 32) fail(ErrorCode::kLimitExceeded, "too many prefix bits");
  std::vector<ShardPrefix> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << bits); ++x) {
    ShardPrefix p(bits);
    for (std::size_t i = 0; i < bits; ++i) p[i] = static_cast<Color>((x >> (bits - 1 - i)) & 1);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

struct ColoringSpace {
  std::vector<Color> fixed;  // colors of edges 0..fixed.size()-1
  std::size_t num_edges = 0;
  std::uint64_t size = 0;

  EdgeColoring at(std::uint64_t index) const {
    EdgeColoring c;
    c.colors.assign(num_edges, 0);
    std::copy(fixed.begin(), fixed.end(), c.colors.begin());
    const std::uint64_t gray = index ^ (index >> 1);
    for (std::size_t j = fixed.size(); j < num_edges; ++j) {
      c.colors[j] = static_cast<Color>((gray >> (j - fixed.size())) & 1);
    }
    return c;
  }
};

}  // namespace

UnavoidabilityResult unavoidable(const Hypergraph& h, const TargetGraph& g1, const TargetGraph& g2,
                                 const UnavoidableOptions& options) {
  const std::size_t m = h.num_edges();
  UnavoidabilityResult result;
  result.shard = options.shard;
  ColoringSpace space;
  space.num_edges = m;
  if (options.shard) {
    if (options.shard->size() > m) fail(ErrorCode::kPrecondition, "shard prefix longer than the edge list");
    for (Color c : *options.shard) {
      if (c > 1) fail(ErrorCode::kInvalidInput, "shard prefix colors must be 0 or 1");
    }
    space.fixed = *options.shard;
  } else if (g1 == g2 && m > 0) {
    space.fixed = {0};
    result.symmetry_cut = true;
  }
  const std::size_t free_edges = m - space.fixed.size();
  if (free_edges >= 63 || (std::uint64_t{1} << free_edges) > options.max_colorings) {
    fail(ErrorCode::kLimitExceeded, "2^" + std::to_string(free_edges) + " colorings exceed the limit of " +
                                        std::to_string(options.max_colorings));
  }
  space.size = std::uint64_t{1} << free_edges;

  const BergeFinder finder(h);
  auto avoids = [&](std::uint64_t index) {
    return !contains_mono_berge(finder, space.at(index), g1, g2).has_value();
  };

  std::uint64_t found = space.size;
  const unsigned jobs = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, options.jobs), space.size));
  if (jobs <= 1) {
    for (std::uint64_t i = 0; i < space.size; ++i) {
      if (avoids(i)) {
        found = i;
        break;
      }
    }
  } else {
    std::atomic<std::uint64_t> best{space.size};
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (space.size + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(space.size, lo + chunk);
      workers.emplace_back([&, lo, hi] {
        for (std::uint64_t i = lo; i < hi && i < best.load(std::memory_order_relaxed); ++i) {
          if (!avoids(i)) continue;
          std::uint64_t current = best.load();
          while (i < current && !best.compare_exchange_weak(current, i)) {
          }
          return;
        }
      });
    }
    for (auto& t : workers) t.join();
    found = best.load();
  }

  if (found < space.size) {
    result.verdict = Verdict::kAvoidable;
    result.witness = space.at(found);
    result.colorings_examined = found + 1;
  } else {
    result.verdict = Verdict::kUnavoidable;
    result.colorings_examined = space.size;
  }
  return result;
}

UnavoidabilityResult merge_shards(const std::vector<UnavoidabilityResult>& shards) {
  UnavoidabilityResult merged;
  for (const auto& s : shards) {
    merged.colorings_examined += s.colorings_examined;
    if (s.verdict == Verdict::kAvoidable && merged.verdict == Verdict::kUnavoidable) {
      merged.verdict = Verdict::kAvoidable;
      merged.witness = s.witness;
    }
  }
  return merged;
}

std::optional<std::size_t> classical_ramsey_small(const TargetGraph& g1, const TargetGraph& g2,
                                                  std::size_t n_max, const UnavoidableOptions& options) {
  UnavoidableOptions unsharded = options;
  unsharded.shard.reset();
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto r = unavoidable(Hypergraph::complete_graph(n), g1, g2, unsharded);
    if (r.verdict == Verdict::kUnavoidable) return n;
  }
  return std::nullopt;
}

constexpr EdgeIndex kNoBlock = ~EdgeIndex{0};

LinearHostIndex::LinearHostIndex(const Hypergraph& h)
    : host_(&h), block_(pair_count(h.num_vertices()), kNoBlock) {
  for (EdgeIndex e = 0; e < h.num_edges(); ++e) {
    const auto& edge = h.edge(e);
    for (std::size_t i = 0; i < edge.size(); ++i) {
      for (std::size_t j = i + 1; j < edge.size(); ++j) {
        EdgeIndex& slot = block_[pair_id(edge[i], edge[j])];
        if (slot != kNoBlock) fail(ErrorCode::kPrecondition, "host is not linear: a pair lies in two hyperedges");
        slot = e;
      }
    }
  }
  if (std::find(block_.begin(), block_.end(), kNoBlock) != block_.end()) {
    fail(ErrorCode::kPrecondition, "host is not covering");
  }
}

namespace {

/// Depth-first walk over t-sets in lexicographic order, extending only
/// while all pairs so far sit in distinct blocks of one color.
class BadEventWalk {
 public:
  BadEventWalk(const LinearHostIndex& index, const EdgeColoring& coloring, std::size_t t)
      : index_(index), colors_(coloring.colors), t_(t), used_(index.host().num_edges(), false) {
    if (t < 2) fail(ErrorCode::kPrecondition, "bad events need t >= 2");
    if (coloring.palette_size != 2) fail(ErrorCode::kPrecondition, "expected a 2-coloring");
    validate_coloring(index.host(), coloring);
  }

  /// Calls visit on every bad event until it returns false.
  void run(const std::function<bool(const BadEvent&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    if (t_ <= index_.host().num_vertices()) extend(1);
  }

 private:
  void extend(Vertex from) {
    const std::size_t n = index_.host().num_vertices();
    if (set_.size() == t_) {
      emit();
      return;
    }
    const std::size_t need = t_ - set_.size();
    for (Vertex v = from; v + need - 1 <= n && !stopped_; ++v) {
      std::size_t added = 0;
      bool ok = true;
      for (Vertex u : set_) {
        const EdgeIndex b = index_.block(u, v);
        if (used_[b] || (color_ && colors_[b] != *color_)) {
          ok = false;
          break;
        }
        if (!color_) color_ = colors_[b];
        used_[b] = true;
        ++added;
      }
      if (ok) {
        set_.push_back(v);
        extend(v + 1);
        set_.pop_back();
      }
      for (std::size_t i = 0; i < added; ++i) used_[index_.block(set_[i], v)] = false;
      if (set_.size() <= 1) color_.reset();
    }
  }

  void emit() {
    BadEvent ev{set_, {}, *color_};
    for (std::size_t i = 0; i < set_.size(); ++i) {
      for (std::size_t j = i + 1; j < set_.size(); ++j) ev.blocks.push_back(index_.block(set_[i], set_[j]));
    }
    if (!(*visit_)(ev)) stopped_ = true;
  }

  const LinearHostIndex& index_;
  const std::vector<Color>& colors_;
  std::size_t t_;
  std::vector<bool> used_;
  VertexSet set_;
  std::optional<Color> color_;
  const std::function<bool(const BadEvent&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

std::vector<BadEvent> scan_bad_events(const LinearHostIndex& index, const EdgeColoring& coloring, std::size_t t) {
  std::vector<BadEvent> out;
  BadEventWalk(index, coloring, t).run([&](const BadEvent& ev) {
    out.push_back(ev);
    return true;
  });
  return out;
}

std::vector<BadEvent> scan_bad_events(const Hypergraph& h, const EdgeColoring& coloring, std::size_t t) {
  return scan_bad_events(LinearHostIndex(h), coloring, t);
}

std::optional<BadEvent> first_bad_event(const LinearHostIndex& index, const EdgeColoring& coloring,
                                        std::size_t t) {
  std::optional<BadEvent> out;
  BadEventWalk(index, coloring, t).run([&](const BadEvent& ev) {
    out = ev;
    return false;
  });
  return out;
}

MoserTardosResult moser_tardos_coloring(const Hypergraph& h, std::size_t t, std::uint64_t seed,
                                        const MoserTardosOptions& options) {
  const LinearHostIndex index(h);
  std::mt19937_64 rng(seed);
  EdgeColoring coloring;
  coloring.colors.resize(h.num_edges());
  for (auto& c : coloring.colors) c = static_cast<Color>(rng() >> 63);

  MoserTardosResult result;
  result.trace_hash = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint64_t x) {
    result.trace_hash ^= x;
    result.trace_hash *= 0x100000001b3ULL;
  };
  for (;;) {
    auto ev = first_bad_event(index, coloring, t);
    if (!ev) {
      result.coloring = std::move(coloring);
      return result;
    }
    if (result.resamples == options.max_resamples) return result;
    for (EdgeIndex b : ev->blocks) coloring.colors[b] = static_cast<Color>(rng() >> 63);
    ++result.resamples;
    for (Vertex v : ev->t_set) mix(v);
    mix(0);
    if (options.record_trace) result.trace.push_back(std::move(ev->t_set));
  }
}

namespace {

std::string digits_with(std::size_t value, const char* const table[10]) {
  std::string out;
  for (char c : std::to_string(value)) out += table[c - '0'];
  return out;
}

const char* const kSuperscript[10] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
const char* const kSubscript[10] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

}  // namespace

std::string lower_bound_statement(std::size_t k, std::size_t t, std::size_t bound) {
  const std::string target = "BK" + digits_with(t, kSubscript);
  return "R̂" + digits_with(k, kSuperscript) + "(" + target + "," + target + ") ≥ " + std::to_string(bound);
}

std::string lower_bound_statement_ascii(std::size_t k, std::size_t t, std::size_t bound) {
  const std::string target = "BK_" + std::to_string(t);
  return "R^" + std::to_string(k) + "(" + target + "," + target + ") >= " + std::to_string(bound);
}

LowerBoundCertificate lower_bound_certificate(const Hypergraph& h, const EdgeColoring& coloring, std::size_t t) {
  if (t < 2) fail(ErrorCode::kPrecondition, "lower bound certificates need t >= 2");
  if (!is_covering(h)) fail(ErrorCode::kPrecondition, "lower bound certificates need a covering host");
  if (coloring.palette_size != 2) fail(ErrorCode::kPrecondition, "expected a 2-coloring");
  validate_coloring(h, coloring);

  LowerBoundCertificate cert;
  cert.n = h.num_vertices();
  cert.k = h.max_edge_size();
  cert.t = t;
  if (is_linear_covering(h)) {
    cert.method = "bad-event-scan";
    if (auto ev = first_bad_event(LinearHostIndex(h), coloring, t)) {
      throw VerifyFailure("coloring contains a monochromatic Berge-K" + std::to_string(t),
                          MonoBerge{ev->color, BergeCertificate{ev->t_set, ev->blocks}});
    }
  } else {
    cert.method = "berge-search";
    const auto kt = TargetGraph::complete(t);
    if (auto mono = contains_mono_berge(h, coloring, kt, kt)) {
      throw VerifyFailure("coloring contains a monochromatic Berge-K" + std::to_string(t), *std::move(mono));
    }
  }
  cert.statement = lower_bound_statement(cert.k, t, cert.n + 1);
  cert.statement_ascii = lower_bound_statement_ascii(cert.k, t, cert.n + 1);
  return cert;
}

}  // namespace cover_ramsey
