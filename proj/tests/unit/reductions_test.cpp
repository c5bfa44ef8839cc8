#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cover_ramsey/berge.hpp"
#include "cover_ramsey/bounds.hpp"
#include "cover_ramsey/designs.hpp"
#include "cover_ramsey/error.hpp"
#include "cover_ramsey/reductions.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cover_ramsey;

TEST(Random, UniformBelowStaysInRange) {
  std::mt19937_64 rng(1);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[uniform_below(rng, 7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Random, SubsetsAreUniformOverAllTriples) {
  std::mt19937_64 rng(2);
  std::map<VertexSet, int> counts;
  const int draws = 35000;
  for (int i = 0; i < draws; ++i) {
    const auto s = random_subset(rng, 7, 3);
    ASSERT_EQ(s.size(), 3u);
    ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    ASSERT_EQ(std::set<Vertex>(s.begin(), s.end()).size(), 3u);
    ++counts[s];
  }
  ASSERT_EQ(counts.size(), 35u);
  for (const auto& [s, c] : counts) {
    EXPECT_GT(c, 800);
    EXPECT_LT(c, 1200);
  }
}

TEST(Scatter, GraphHostAcceptsFirstDraw) {
  const auto k8 = Hypergraph::complete_graph(8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = sample_scattered_subset(k8, 5, seed);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ(s->attempts, 1u);
  }
}

TEST(Scatter, FanoTriples) {
  const auto f = fixture::fano();
  const ScatterChecker checker(f);
  EXPECT_TRUE(checker.is_scattered(VertexSet{1, 2, 4}));
  EXPECT_FALSE(checker.is_scattered(VertexSet{1, 2, 3}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto s = sample_scattered_subset(f, 3, seed);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(checker.is_scattered(s->subset));
    EXPECT_FALSE(f.find_edge(s->subset).has_value());
  }
  EXPECT_FALSE(sample_scattered_subset(f, 7, 0, 50).has_value());
}

TEST(Scatter, SameSeedSameSample) {
  const auto h = design_to_hypergraph(construct_resolvable_bibd(27, 3));
  const auto a = sample_scattered_subset(h, 5, 123);
  const auto b = sample_scattered_subset(h, 5, 123);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->subset, b->subset);
  EXPECT_EQ(a->attempts, b->attempts);
}

TEST(Scatter, RequiresCoveringHost) {
  EXPECT_THROW(sample_scattered_subset(Hypergraph(4, {{1, 2, 3}}), 2, 0), Error);
}

TEST(Scatter, RejectionRateOnFanoMatchesCount) {
  // 7 of the 35 triples are lines, so 1/5 of draws are rejected.
  const auto f = fixture::fano();
  std::size_t draws = 0;
  const std::size_t trials = 4000;
  for (std::uint64_t seed = 0; seed < trials; ++seed) draws += sample_scattered_subset(f, 3, seed)->attempts;
  const double rate = static_cast<double>(draws - trials) / static_cast<double>(draws);
  EXPECT_NEAR(rate, 0.2, 0.03);
  EXPECT_LE(rate, scatter_failure_bound(7, 3, 3).convert_to<double>());
}

TEST(Trace, GraphHostIsIdentity) {
  const auto k6 = Hypergraph::complete_graph(6);
  std::mt19937_64 rng(4);
  const auto c = oracle::random_coloring(rng, 15);
  const ScatterSample sample{{2, 3, 5, 6}, 1, 0};
  const auto t = trace_coloring(k6, c, sample);
  ASSERT_EQ(t.phi.size(), 6u);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j, ++idx) {
      EXPECT_EQ(k6.edge(t.phi[idx]), (VertexSet{sample.subset[i], sample.subset[j]}));
      EXPECT_EQ(t.coloring.colors[idx], c.colors[t.phi[idx]]);
    }
  }
}

TEST(Trace, FanoTriangleLifts) {
  const auto f = fixture::fano();
  const auto c = fixture::constant_coloring(7, 0);
  const auto t = trace_coloring(f, c, ScatterSample{{1, 2, 4}, 1, 0});
  EXPECT_EQ(t.coloring.colors, (std::vector<Color>{0, 0, 0}));
  const auto k3 = TargetGraph::complete(3);
  const auto local = find_berge(t.graph, k3, &t.coloring, 0);
  ASSERT_TRUE(local.has_value());
  const auto lifted = lift_trace_subgraph(t, *local);
  EXPECT_TRUE(verify_certificate(f, k3, lifted, &c, 0).ok());
  std::set<EdgeIndex> lines(lifted.edge_map.begin(), lifted.edge_map.end());
  EXPECT_EQ(lines, (std::set<EdgeIndex>{0, 1, 3}));
}

TEST(Trace, DesignTraceUsesUniqueBlocks) {
  const auto h = design_to_hypergraph(construct_resolvable_bibd(9, 3));
  const PairIndex pairs(h);
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto c = oracle::random_coloring(rng, h.num_edges());
    const auto s = sample_scattered_subset(h, 3, seed);
    ASSERT_TRUE(s.has_value());
    const auto t = trace_coloring(h, c, *s);
    const auto& v = s->subset;
    const std::vector<std::pair<Vertex, Vertex>> order{{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}};
    for (std::size_t i = 0; i < 3; ++i) {
      const EdgeIndex block = pairs.edges_containing(order[i].first, order[i].second)[0];
      EXPECT_EQ(t.phi[i], block);
      EXPECT_EQ(t.coloring.colors[i], c.colors[block]);
    }
  }
}

TEST(Product, GraphHostIsIdentity) {
  const auto k5 = Hypergraph::complete_graph(5);
  const auto c = fixture::pentagon_coloring();
  const auto red = multicolor_product_reduction(k5, c);
  EXPECT_EQ(red.label_count, 1u);
  EXPECT_EQ(red.coloring.palette_size, 2u);
  EXPECT_EQ(red.coloring.colors, c.colors);
  const auto local = find_berge(red.graph, TargetGraph::path(3), &red.coloring, 0);
  ASSERT_TRUE(local.has_value());
  const auto lifted = lift_mono_subgraph(red, TargetGraph::path(3), local->vertex_map);
  EXPECT_EQ(lifted.edge_map, local->edge_map);
}

TEST(Product, FanoProvenance) {
  const auto f = fixture::fano();
  std::mt19937_64 rng(6);
  const auto c = oracle::random_coloring(rng, 7);
  const auto red = multicolor_product_reduction(f, c);
  EXPECT_EQ(red.graph.num_vertices(), 7u);
  EXPECT_EQ(red.coloring.palette_size, 6u);
  const PairIndex pairs(f);
  for (EdgeIndex i = 0; i < red.graph.num_edges(); ++i) {
    const auto& e = red.graph.edge(i);
    EXPECT_EQ(red.source_edge[i], pairs.edges_containing(e[0], e[1])[0]);
    EXPECT_EQ(red.coloring.colors[i], product_color(c.colors[red.source_edge[i]], red.label[i], 3));
  }
  // Labels inside each line are 1, 2, 3 in some order.
  std::map<EdgeIndex, std::set<std::size_t>> labels;
  for (EdgeIndex i = 0; i < red.graph.num_edges(); ++i) labels[red.source_edge[i]].insert(red.label[i]);
  for (const auto& [line, ls] : labels) EXPECT_EQ(ls, (std::set<std::size_t>{1, 2, 3}));
}

TEST(Product, DesignReduction) {
  const auto h = design_to_hypergraph(construct_resolvable_bibd(9, 3));
  const auto red = multicolor_product_reduction(h, fixture::constant_coloring(12, 1));
  EXPECT_EQ(red.graph.num_vertices(), 9u);
  EXPECT_EQ(red.graph.num_edges(), 36u);
  EXPECT_EQ(red.coloring.palette_size, 6u);
  for (Color col : red.coloring.colors) EXPECT_GE(col, 3u);
}

TEST(Product, FanoMonochromaticPathLifts) {
  const auto f = fixture::fano();
  const auto c = fixture::constant_coloring(7, 0);
  const auto red = multicolor_product_reduction(f, c);
  const auto p3 = TargetGraph::path(3);
  bool found_any = false;
  for (Color pc = 0; pc < 3; ++pc) {
    const auto local = find_berge(red.graph, p3, &red.coloring, pc);
    if (!local) continue;
    found_any = true;
    const auto cert = lift_mono_subgraph(red, p3, local->vertex_map);
    EXPECT_NE(cert.edge_map[0], cert.edge_map[1]);
    EXPECT_TRUE(verify_certificate(f, p3, cert, &c, 0).ok());
  }
  EXPECT_TRUE(found_any);
}

TEST(Product, RejectsNonMonochromaticEmbedding) {
  const auto k5 = Hypergraph::complete_graph(5);
  const auto red = multicolor_product_reduction(k5, fixture::pentagon_coloring());
  EXPECT_THROW(lift_mono_subgraph(red, TargetGraph::complete(3), {1, 2, 3}), Error);
}

TEST(Product, RandomLiftsVerify) {
  std::mt19937_64 rng(12);
  const std::vector<TargetGraph> targets{TargetGraph::path(3), TargetGraph::complete(3), TargetGraph::cycle(4)};
  std::size_t lifts = 0;
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 5 + rng() % 4;
    const auto h = oracle::random_covering(rng, n, 3 + rng() % 6, 2 + rng() % 3);
    const auto c = oracle::random_coloring(rng, h.num_edges());
    const auto red = multicolor_product_reduction(h, c);
    for (const auto& g : targets) {
      for (Color pc = 0; pc < red.coloring.palette_size; ++pc) {
        const auto local = find_berge(red.graph, g, &red.coloring, pc);
        if (!local) continue;
        ++lifts;
        const auto cert = lift_mono_subgraph(red, g, local->vertex_map);
        EXPECT_TRUE(verify_certificate(h, g, cert, &c, pc / static_cast<Color>(red.label_count)).ok());
      }
    }
  }
  EXPECT_GT(lifts, 100u);
}
