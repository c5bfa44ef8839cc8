#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "cover_ramsey/berge.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cover_ramsey;

namespace {

// Fano lines in canonical order: 123 145 167 246 257 347 356.
BergeCertificate fano_triangle() { return {{1, 2, 4}, {0, 1, 3}}; }

}  // namespace

TEST(VerifyCertificate, FanoTriangle) {
  const auto out = verify_certificate(fixture::fano(), TargetGraph::complete(3), fano_triangle());
  EXPECT_TRUE(out.ok()) << out.detail;
}

TEST(VerifyCertificate, RepeatedHyperedge) {
  auto cert = fano_triangle();
  cert.edge_map[1] = cert.edge_map[0];
  EXPECT_EQ(verify_certificate(fixture::fano(), TargetGraph::complete(3), cert).reason,
            VerifyReason::kNotInjectiveEdges);
}

TEST(VerifyCertificate, RepeatedVertex) {
  const BergeCertificate cert{{1, 1, 4}, {0, 1, 3}};
  EXPECT_EQ(verify_certificate(fixture::fano(), TargetGraph::complete(3), cert).reason,
            VerifyReason::kNotInjectiveVertices);
}

TEST(VerifyCertificate, ContainmentFailure) {
  const BergeCertificate cert{{1, 2, 4}, {0, 1, 2}};
  EXPECT_EQ(verify_certificate(fixture::fano(), TargetGraph::complete(3), cert).reason,
            VerifyReason::kContainmentFail);
}

TEST(VerifyCertificate, MixedColors) {
  const EdgeColoring c{{0, 1, 0, 0, 0, 0, 0}, 2};
  const auto out = verify_certificate(fixture::fano(), TargetGraph::complete(3), fano_triangle(), &c, 0);
  EXPECT_EQ(out.reason, VerifyReason::kColorFail);
  EXPECT_EQ(to_string(out.reason), "COLOR_FAIL");
}

TEST(VerifyCertificate, Malformed) {
  const BergeCertificate short_map{{1, 2}, {0, 1, 3}};
  EXPECT_EQ(verify_certificate(fixture::fano(), TargetGraph::complete(3), short_map).reason,
            VerifyReason::kMalformed);
  const BergeCertificate bad_edge{{1, 2, 4}, {0, 1, 30}};
  EXPECT_EQ(verify_certificate(fixture::fano(), TargetGraph::complete(3), bad_edge).reason,
            VerifyReason::kMalformed);
}

TEST(MatchingForAssignment, UniqueLinesPerPair) {
  const auto m = matching_for_assignment(fixture::fano(), TargetGraph::complete(3), {1, 2, 4});
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, fano_triangle().edge_map);
}

TEST(MatchingForAssignment, CollinearTripleFails) {
  EXPECT_FALSE(matching_for_assignment(fixture::fano(), TargetGraph::complete(3), {1, 2, 3}).has_value());
}

TEST(MatchingForAssignment, EdgelessGraph) {
  const auto m = matching_for_assignment(fixture::fano(), TargetGraph(2, {}), {1, 2});
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(m->empty());
}

TEST(FindBerge, FanoK4) {
  const auto f = fixture::fano();
  const auto cert = find_berge(f, TargetGraph::complete(4));
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(f, TargetGraph::complete(4), *cert).ok());
  // No three of the four chosen points may be collinear.
  for (const auto& line : f.edges()) {
    int inside = 0;
    for (Vertex v : cert->vertex_map) inside += std::count(line.begin(), line.end(), v);
    EXPECT_LE(inside, 2);
  }
  EXPECT_EQ(cert->vertex_map, (std::vector<Vertex>{1, 2, 4, 7}));
}

TEST(FindBerge, FanoK5Absent) {
  EXPECT_FALSE(find_berge(fixture::fano(), TargetGraph::complete(5)).has_value());
}

TEST(FindBerge, MonochromaticK6) {
  const auto k6 = Hypergraph::complete_graph(6);
  const auto c = fixture::constant_coloring(15, 0);
  const auto cert = find_berge(k6, TargetGraph::complete(3), &c, 0);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_certificate(k6, TargetGraph::complete(3), *cert, &c, 0).ok());
  EXPECT_FALSE(find_berge(k6, TargetGraph::complete(3), &c, 1).has_value());
}

TEST(FindBerge, AgreesWithNaiveOracle) {
  std::mt19937_64 rng(31);
  const std::vector<TargetGraph> targets{TargetGraph::path(3), TargetGraph::complete(3), TargetGraph::cycle(4),
                                         TargetGraph::path(4), TargetGraph(4, {{1, 2}, {3, 4}})};
  for (int i = 0; i < 200; ++i) {
    const auto h = oracle::random_hypergraph(rng, 2 + rng() % 5, 1 + rng() % 8, 2 + rng() % 3);
    const auto c = oracle::random_coloring(rng, h.num_edges());
    const BergeFinder finder(h);
    for (const auto& g : targets) {
      EXPECT_EQ(finder.find(g).has_value(), oracle::has_berge(h, g));
      const auto mask = color_mask(c, 1);
      const auto colored = finder.find(g, &mask);
      EXPECT_EQ(colored.has_value(), oracle::has_berge(h, g, mask));
      if (colored) EXPECT_TRUE(verify_certificate(h, g, *colored, &c, 1).ok());
    }
  }
}

TEST(ContainsMonoBerge, K6AlwaysHasTriangle) {
  const auto k6 = Hypergraph::complete_graph(6);
  const BergeFinder finder(k6);
  const auto k3 = TargetGraph::complete(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto c = oracle::random_coloring(rng, 15);
    const auto r = contains_mono_berge(finder, c, k3, k3);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(verify_certificate(k6, k3, r->certificate, &c, r->color).ok());
  }
}

TEST(ContainsMonoBerge, PentagonAvoids) {
  const auto k3 = TargetGraph::complete(3);
  const auto k5 = Hypergraph::complete_graph(5);
  EXPECT_FALSE(contains_mono_berge(k5, fixture::pentagon_coloring(), k3, k3).has_value());
  EXPECT_FALSE(oracle::has_mono_triangle(k5, fixture::pentagon_coloring()));
}

TEST(ContainsMonoBerge, FanoAllRed) {
  const auto k3 = TargetGraph::complete(3);
  const auto f = fixture::fano();
  const auto c = fixture::constant_coloring(7, 1);
  const auto r = contains_mono_berge(f, c, k3, k3);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->color, 1u);
  EXPECT_TRUE(verify_certificate(f, k3, r->certificate, &c, 1).ok());
}

TEST(ContainsMonoBerge, BlueWinsTies) {
  const auto k2 = TargetGraph::complete(2);
  const auto k3 = Hypergraph::complete_graph(3);
  const EdgeColoring c{{1, 0, 1}, 2};
  const auto r = contains_mono_berge(k3, c, k2, k2);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->color, 0u);
}
