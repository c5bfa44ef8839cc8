#include "cover_ramsey/designs.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "cover_ramsey/error.hpp"
#include "cover_ramsey/exact_cover.hpp"
#include "cover_ramsey/galois_field.hpp"

namespace cover_ramsey {

std::size_t ResolvableDesign::num_blocks() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  return total;
}

std::string_view to_string(DesignViolationKind kind) {
  switch (kind) {
    case DesignViolationKind::kPartitionFail: return "PARTITION_FAIL";
    case DesignViolationKind::kPairCountFail: return "PAIR_COUNT_FAIL";
    case DesignViolationKind::kClassCountFail: return "CLASS_COUNT_FAIL";
  }
  return "UNKNOWN";
}

std::vector<DesignViolation> verify_resolvable_bibd(const ResolvableDesign& d) {
  std::vector<DesignViolation> out;
  const std::size_t n = d.n;
  const std::size_t k = d.k;

  if (k < 2 || n < k || (n - 1) % (k - 1) != 0) {
    out.push_back({DesignViolationKind::kClassCountFail,
                   "(n - 1) / (k - 1) is not a positive integer for n=" + std::to_string(n) +
                       ", k=" + std::to_string(k)});
  } else if (d.classes.size() != (n - 1) / (k - 1)) {
    out.push_back({DesignViolationKind::kClassCountFail,
                   std::to_string(d.classes.size()) + " classes, expected " +
                       std::to_string((n - 1) / (k - 1))});
  }

  std::vector<std::size_t> pair_hits(pair_count(n), 0);
  for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
    std::vector<std::size_t> seen(n + 1, 0);
    bool partition = true;
    for (const auto& block : d.classes[ci]) {
      if (block.size() != k) partition = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        const Vertex u = block[i];
        if (u < 1 || u > n) {
          partition = false;
          continue;
        }
        ++seen[u];
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          const Vertex v = block[j];
          if (v >= 1 && v <= n && v != u) ++pair_hits[pair_id(u, v)];
        }
      }
    }
    for (std::size_t v = 1; v <= n; ++v) partition = partition && seen[v] == 1;
    if (!partition) {
      out.push_back({DesignViolationKind::kPartitionFail,
                     "class " + std::to_string(ci) + " is not a partition into " +
                         std::to_string(k) + "-blocks"});
    }
  }

  std::size_t bad = 0;
  std::string first;
  for (Vertex v = 2; v <= n; ++v) {
    for (Vertex u = 1; u < v; ++u) {
      const std::size_t hits = pair_hits[pair_id(u, v)];
      if (hits == 1) continue;
      if (bad++ == 0) {
        first = "pair {" + std::to_string(u) + "," + std::to_string(v) + "} lies in " +
                std::to_string(hits) + " blocks";
      }
    }
  }
  if (bad > 0) {
    out.push_back({DesignViolationKind::kPairCountFail,
                   first + (bad > 1 ? " (" + std::to_string(bad) + " pairs affected)" : "")});
  }
  return out;
}

namespace {

void canonicalize(ParallelClass& c) {
  for (auto& b : c) std::sort(b.begin(), b.end());
  std::sort(c.begin(), c.end());
}

ResolvableDesign finish(std::size_t n, std::size_t k, std::vector<ParallelClass> classes) {
  for (auto& c : classes) canonicalize(c);
  return {n, k, std::move(classes)};
}

ResolvableDesign round_robin(std::size_t n) {
  const std::size_t r = n - 1;
  std::vector<ParallelClass> classes;
  for (std::size_t round = 0; round < r; ++round) {
    ParallelClass c;
    c.push_back({static_cast<Vertex>(round + 1), static_cast<Vertex>(n)});
    for (std::size_t i = 1; i < n / 2; ++i) {
      c.push_back({static_cast<Vertex>((round + i) % r + 1), static_cast<Vertex>((round + r - i) % r + 1)});
    }
    classes.push_back(std::move(c));
  }
  return finish(n, 2, std::move(classes));
}

ResolvableDesign affine_plane(std::size_t q) {
  const GaloisField f(q);
  auto point = [q](std::size_t x, std::size_t y) { return static_cast<Vertex>(1 + x * q + y); };
  std::vector<ParallelClass> classes;
  for (std::size_t slope = 0; slope < q; ++slope) {
    ParallelClass c;
    for (std::size_t b = 0; b < q; ++b) {
      VertexSet line;
      for (std::size_t x = 0; x < q; ++x) line.push_back(point(x, f.add(f.mul(slope, x), b)));
      c.push_back(std::move(line));
    }
    classes.push_back(std::move(c));
  }
  ParallelClass vertical;
  for (std::size_t x = 0; x < q; ++x) {
    VertexSet line;
    for (std::size_t y = 0; y < q; ++y) line.push_back(point(x, y));
    vertical.push_back(std::move(line));
  }
  classes.push_back(std::move(vertical));
  return finish(q * q, q, std::move(classes));
}

// Lines of AG(m, 3). Point label - 1 written in base 3 gives the coordinates.
ResolvableDesign affine_ternary(std::size_t n, std::size_t m) {
  auto add = [m](std::size_t a, std::size_t b) {
    std::size_t out = 0;
    for (std::size_t i = 0, w = 1; i < m; ++i, w *= 3) out += ((a / w % 3 + b / w % 3) % 3) * w;
    return out;
  };
  auto leading_digit = [m](std::size_t d) {
    std::size_t w = 1;
    for (std::size_t i = 1; i < m; ++i) w *= 3;
    for (; w > 0; w /= 3) {
      if (d / w % 3 != 0) return d / w % 3;
    }
    return std::size_t{0};
  };
  std::vector<ParallelClass> classes;
  for (std::size_t d = 1; d < n; ++d) {
    if (leading_digit(d) != 1) continue;
    ParallelClass c;
    std::vector<bool> covered(n, false);
    for (std::size_t p = 0; p < n; ++p) {
      if (covered[p]) continue;
      const std::size_t p1 = add(p, d);
      const std::size_t p2 = add(p1, d);
      covered[p] = covered[p1] = covered[p2] = true;
      c.push_back({static_cast<Vertex>(p + 1), static_cast<Vertex>(p1 + 1), static_cast<Vertex>(p2 + 1)});
    }
    classes.push_back(std::move(c));
  }
  return finish(n, 3, std::move(classes));
}

struct Pt {
  std::size_t x, level;
};

bool key_less(const std::array<Pt, 3>& a, const std::array<Pt, 3>& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (a[i].x != b[i].x) return a[i].x < b[i].x;
    if (a[i].level != b[i].level) return a[i].level < b[i].level;
  }
  return false;
}

// All triples of points over `levels` copies of Z_g, in a fixed order that
// the exact-cover searches below were tuned against.
std::vector<std::array<Pt, 3>> ordered_triples(std::size_t g, std::size_t levels) {
  std::vector<Pt> pts;
  for (std::size_t l = 0; l < levels; ++l) {
    for (std::size_t x = 0; x < g; ++x) pts.push_back({x, l});
  }
  std::vector<std::array<Pt, 3>> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) out.push_back({pts[i], pts[j], pts[k]});
    }
  }
  std::stable_sort(out.begin(), out.end(), key_less);
  return out;
}

bool distinct3(std::size_t a, std::size_t b, std::size_t c) { return a != b && a != c && b != c; }

/// Kirkman system on Z_g x {0,1,2}, n = 3g. One base class is developed
/// over Z_g for g classes; the remaining (g-1)/2 classes are transversal,
/// {(s,0), (s+a,1), (s+b,2)}. The exact cover asks every pure and mixed
/// difference to be used exactly once.
std::optional<ResolvableDesign> kirkman_three_levels(std::size_t n, std::uint64_t limit, bool& exhausted) {
  const std::size_t g = n / 3;
  const std::size_t h = (g - 1) / 2;
  const std::array<std::pair<std::size_t, std::size_t>, 3> level_pairs{{{0, 1}, {0, 2}, {1, 2}}};
  auto md = [g](std::size_t pair_slot, std::size_t d) { return pair_slot * g + d % g; };
  const std::size_t pd_base = 3 * g;
  auto pd = [g, h, pd_base](std::size_t level, std::size_t d) {
    d %= g;
    return pd_base + level * h + std::min(d, g - d) - 1;
  };
  const std::size_t pt_base = pd_base + 3 * h;
  auto pt = [g, pt_base](const Pt& p) { return pt_base + p.level * g + p.x; };

  ExactCover ec(pt_base + 3 * g);
  struct Row {
    bool transversal;
    std::array<Pt, 3> tri;
    std::size_t a, b;
  };
  std::vector<Row> rows;
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) {
      ec.add_row({md(0, a), md(1, b), md(2, b + g - a)});
      rows.push_back({true, {}, a, b});
    }
  }
  for (const auto& tri : ordered_triples(g, 3)) {
    std::vector<std::size_t> cols{pt(tri[0]), pt(tri[1]), pt(tri[2])};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Pt& p = tri[i];
        const Pt& q = tri[j];
        const std::size_t d = q.x + g - p.x;
        if (p.level == q.level) {
          cols.push_back(pd(p.level, d));
        } else {
          std::size_t slot = 0;
          while (level_pairs[slot] != std::make_pair(p.level, q.level)) ++slot;
          cols.push_back(md(slot, d));
        }
      }
    }
    if (!distinct3(cols[3], cols[4], cols[5])) continue;
    ec.add_row(cols);
    rows.push_back({false, tri, 0, 0});
  }

  const auto result = ec.solve(limit);
  if (result.status == ExactCover::Status::kNodeLimit) exhausted = true;
  if (result.status != ExactCover::Status::kSolved) return std::nullopt;

  auto label = [g](std::size_t x, std::size_t level) { return static_cast<Vertex>(1 + level * g + x % g); };
  std::vector<std::array<Pt, 3>> base;
  std::vector<std::pair<std::size_t, std::size_t>> transversals;
  for (std::size_t r : result.rows) {
    if (rows[r].transversal) {
      transversals.emplace_back(rows[r].a, rows[r].b);
    } else {
      base.push_back(rows[r].tri);
    }
  }
  std::sort(transversals.begin(), transversals.end());
  std::vector<ParallelClass> classes;
  for (std::size_t s = 0; s < g; ++s) {
    ParallelClass c;
    for (const auto& tri : base) {
      c.push_back({label(tri[0].x + s, tri[0].level), label(tri[1].x + s, tri[1].level),
                   label(tri[2].x + s, tri[2].level)});
    }
    classes.push_back(std::move(c));
  }
  for (const auto& [a, b] : transversals) {
    ParallelClass c;
    for (std::size_t s = 0; s < g; ++s) c.push_back({label(s, 0), label(s + a, 1), label(s + b, 2)});
    classes.push_back(std::move(c));
  }
  return finish(n, 3, std::move(classes));
}

/// Kirkman system on {inf} + Z_q x {0,1}, n = 2q + 1 with q odd. A base
/// class holding exactly one block through inf is developed over Z_q.
std::optional<ResolvableDesign> kirkman_two_levels(std::size_t n, std::uint64_t limit, bool& exhausted) {
  const std::size_t q = (n - 1) / 2;
  const std::size_t h = (q - 1) / 2;
  const std::size_t id0 = 0, id1 = 1, inf = 2;
  auto md = [q](std::size_t d) { return 3 + d % q; };
  auto pd = [q, h](std::size_t level, std::size_t d) {
    d %= q;
    return 3 + q + level * h + std::min(d, q - d) - 1;
  };
  const std::size_t pt_base = 3 + q + 2 * h;
  auto pt = [q, pt_base](std::size_t x, std::size_t level) { return pt_base + level * q + x; };

  ExactCover ec(pt_base + 2 * q);
  struct Row {
    bool infinite;
    std::array<Pt, 3> tri;
    std::size_t x, y;
  };
  std::vector<Row> rows;
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      ec.add_row({inf, pt(x, 0), pt(y, 1), id0, id1, md(y + q - x)});
      rows.push_back({true, {}, x, y});
    }
  }
  for (const auto& tri : ordered_triples(q, 2)) {
    std::vector<std::size_t> cols{pt(tri[0].x, tri[0].level), pt(tri[1].x, tri[1].level),
                                  pt(tri[2].x, tri[2].level)};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        Pt p = tri[i];
        Pt r = tri[j];
        if (p.level == r.level) {
          cols.push_back(pd(p.level, r.x + q - p.x));
        } else {
          if (p.level == 1) std::swap(p, r);
          cols.push_back(md(r.x + q - p.x));
        }
      }
    }
    if (!distinct3(cols[3], cols[4], cols[5])) continue;
    ec.add_row(cols);
    rows.push_back({false, tri, 0, 0});
  }

  const auto result = ec.solve(limit);
  if (result.status == ExactCover::Status::kNodeLimit) exhausted = true;
  if (result.status != ExactCover::Status::kSolved) return std::nullopt;

  auto label = [q](std::size_t x, std::size_t level) { return static_cast<Vertex>(1 + level * q + x % q); };
  std::vector<ParallelClass> classes;
  for (std::size_t s = 0; s < q; ++s) {
    ParallelClass c;
    for (std::size_t r : result.rows) {
      const Row& row = rows[r];
      if (row.infinite) {
        c.push_back({static_cast<Vertex>(n), label(row.x + s, 0), label(row.y + s, 1)});
      } else {
        c.push_back({label(row.tri[0].x + s, row.tri[0].level), label(row.tri[1].x + s, row.tri[1].level),
                     label(row.tri[2].x + s, row.tri[2].level)});
      }
    }
    classes.push_back(std::move(c));
  }
  return finish(n, 3, std::move(classes));
}

std::optional<std::size_t> log3(std::size_t n) {
  std::size_t m = 0;
  for (; n > 1 && n % 3 == 0; n /= 3) ++m;
  if (n != 1 || m == 0) return std::nullopt;
  return m;
}

[[noreturn]] void unsupported(std::size_t n, std::size_t k, const std::string& why) {
  fail(ErrorCode::kUnsupportedParameters,
       "no resolvable BIBD(" + std::to_string(n) + "," + std::to_string(k) + ",1) construction: " + why);
}

}  // namespace

ResolvableDesign construct_resolvable_bibd(std::size_t n, std::size_t k, const DesignOptions& options) {
  if (k < 2 || n < k) unsupported(n, k, "need 2 <= k <= n");
  if (k == 2) {
    if (n % 2 != 0) unsupported(n, k, "n must be even for k = 2");
    return round_robin(n);
  }
  if (n == k * k && prime_power(k)) return affine_plane(k);
  if (k != 3) unsupported(n, k, "only affine planes and k in {2, 3} are implemented");
  if (n % 6 != 3) unsupported(n, k, "Kirkman systems need n = 3 (mod 6)");
  if (const auto m = log3(n)) return affine_ternary(n, *m);

  bool exhausted = false;
  if (auto d = kirkman_three_levels(n, options.search_node_limit, exhausted)) return *std::move(d);
  if (((n - 1) / 2) % 2 == 1) {
    if (auto d = kirkman_two_levels(n, options.search_node_limit, exhausted)) return *std::move(d);
  }
  unsupported(n, k, exhausted ? "Kirkman search exceeded its node budget" : "Kirkman search found no base class");
}

Hypergraph design_to_hypergraph(const ResolvableDesign& d) {
  const auto violations = verify_resolvable_bibd(d);
  if (!violations.empty()) {
    fail(ErrorCode::kPrecondition,
         "invalid design: " + std::string(to_string(violations.front().kind)) + ": " + violations.front().detail);
  }
  std::vector<VertexSet> edges;
  edges.reserve(d.num_blocks());
  for (const auto& c : d.classes) edges.insert(edges.end(), c.begin(), c.end());
  return Hypergraph(d.n, std::move(edges), {d.k});
}

}  // namespace cover_ramsey
