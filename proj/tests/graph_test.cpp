#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "stdma/graph.hpp"
#include "test_support.hpp"

namespace stdma {
namespace {

using testing::exp1_params;

std::set<Link> as_set(const std::vector<Link>& v) { return {v.begin(), v.end()}; }

std::set<Link> both_ways(std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  std::set<Link> s;
  for (auto [a, b] : pairs) {
    s.insert(Link{a, b});
    s.insert(Link{b, a});
  }
  return s;
}

Network random_network(Rng& rng, std::size_t n, double side) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({side * rng.uniform01(), side * rng.uniform01()});
  return Network(pts);
}

TEST(TwoTierGraph, SixNodeHasOnlyThePairedLinks) {
  const Network net = testing::six_node();
  const TwoTierGraph g = build_two_tier_graph(net, exp1_params());
  EXPECT_EQ(as_set(g.comm_edges()), both_ways({{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_TRUE(g.intf_edges().empty());

  // Recompute all 15 pairwise distances by hand: only the three pairs are
  // closer than the interference range, the next closest pair is 270 m.
  const std::vector<std::pair<double, double>> xy{{-360, 0}, {-450, 0}, {90, 0},
                                                   {0, 0},    {360, 0},  {450, 0}};
  double second = 1e9;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const double d = std::abs(xy[a].first - xy[b].first);
      if (d > 90.0) second = std::min(second, d);
    }
  EXPECT_DOUBLE_EQ(second, 270.0);
}

TEST(TwoTierGraph, FourNodeTiers) {
  const TwoTierGraph g = build_two_tier_graph(testing::four_node(), exp1_params());
  EXPECT_EQ(as_set(g.comm_edges()), both_ways({{1, 2}, {3, 4}}));
  EXPECT_EQ(as_set(g.intf_edges()), both_ways({{2, 4}, {1, 4}, {2, 3}}));
  EXPECT_EQ(g.kind(1, 3), EdgeKind::kNone);  // 220 m
  EXPECT_EQ(g.kind(4, 2), EdgeKind::kInterference);
}

TEST(TwoTierGraph, FarApartIsEmpty) {
  const TwoTierGraph g = build_two_tier_graph(Network({{0, 0}, {500, 0}}), exp1_params());
  EXPECT_TRUE(g.comm_edges().empty());
  EXPECT_TRUE(g.intf_edges().empty());
}

TEST(TwoTierGraph, ThresholdsAreInclusive) {
  const auto rp = exp1_params();
  const double rc = comm_range(rp), ri = interference_range(rp);
  EXPECT_EQ(build_two_tier_graph(Network({{0, 0}, {rc, 0}}), rp).kind(1, 2), EdgeKind::kCommunication);
  EXPECT_EQ(build_two_tier_graph(Network({{0, 0}, {ri, 0}}), rp).kind(1, 2), EdgeKind::kInterference);
  EXPECT_EQ(build_two_tier_graph(Network({{0, 0}, {std::nextafter(ri, 1e9), 0}}), rp).kind(1, 2),
            EdgeKind::kNone);
}

TEST(TwoTierGraph, MatchesDistanceOracleAndIsSymmetric) {
  Rng rng(1);
  const auto rp = exp1_params();
  for (int trial = 0; trial < 50; ++trial) {
    const Network net = random_network(rng, 30, 500);
    const TwoTierGraph g = build_two_tier_graph(net, rp);
    const auto comm = as_set(g.comm_edges());
    const auto intf = as_set(g.intf_edges());
    for (NodeId j = 1; j <= 30; ++j)
      for (NodeId k = 1; k <= 30; ++k) {
        if (j == k) continue;
        const auto& a = net.position(j);
        const auto& b = net.position(k);
        const double d = std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y));
        ASSERT_EQ(comm.count(Link{j, k}) == 1, d <= 100.0 + 1e-9);
        ASSERT_EQ(intf.count(Link{j, k}) == 1, d > 100.0 + 1e-9 && d <= interference_range(rp));
        ASSERT_EQ(comm.count(Link{j, k}), comm.count(Link{k, j}));
        ASSERT_EQ(intf.count(Link{j, k}), intf.count(Link{k, j}));
        ASSERT_FALSE(comm.count(Link{j, k}) && intf.count(Link{j, k}));
      }
  }
}

TEST(TwoTierGraph, InvariantUnderReindexing) {
  Rng rng(2);
  const auto rp = exp1_params();
  for (int trial = 0; trial < 20; ++trial) {
    const Network net = random_network(rng, 25, 400);
    const Labeling perm = random_labeling(25, rng);  // old id -> new id
    std::vector<Point> moved(25);
    for (NodeId v = 1; v <= 25; ++v) moved[perm.label(v) - 1] = net.position(v);
    const TwoTierGraph a = build_two_tier_graph(net, rp);
    const TwoTierGraph b = build_two_tier_graph(Network(moved), rp);
    for (NodeId j = 1; j <= 25; ++j)
      for (NodeId k = 1; k <= 25; ++k) ASSERT_EQ(a.kind(j, k), b.kind(perm.label(j), perm.label(k)));
  }
}

TEST(Conflicts, Primary) {
  EXPECT_TRUE(has_primary_conflict({1, 2}, {2, 4}));
  EXPECT_FALSE(has_primary_conflict({1, 2}, {3, 4}));
  EXPECT_TRUE(has_primary_conflict({1, 2}, {1, 2}));
  EXPECT_TRUE(has_primary_conflict({1, 2}, {2, 1}));
}

TEST(Conflicts, Secondary) {
  const auto rp = exp1_params();
  const TwoTierGraph four = build_two_tier_graph(testing::four_node(), rp);
  EXPECT_TRUE(has_secondary_conflict({1, 2}, {3, 4}, four));
  const TwoTierGraph six = build_two_tier_graph(testing::six_node(), rp);
  EXPECT_FALSE(has_secondary_conflict({1, 2}, {3, 4}, six));
  const TwoTierGraph far = build_two_tier_graph(
      Network({{0, 0}, {50, 0}, {2000, 0}, {2050, 0}}), rp);
  EXPECT_FALSE(has_secondary_conflict({1, 2}, {3, 4}, far));
}

TEST(Conflicts, SecondaryIsSymmetric) {
  Rng rng(3);
  const auto rp = exp1_params();
  for (int trial = 0; trial < 20; ++trial) {
    const TwoTierGraph g = build_two_tier_graph(random_network(rng, 30, 400), rp);
    const auto& e = g.comm_edges();
    for (const Link& a : e)
      for (const Link& b : e) {
        if (has_primary_conflict(a, b)) continue;
        ASSERT_EQ(has_secondary_conflict(a, b, g), has_secondary_conflict(b, a, g));
      }
  }
}

TEST(Labeling, Basics) {
  Rng rng(4);
  const Labeling one = random_labeling(1, rng);
  EXPECT_EQ(one.label(1), 1u);

  Rng a(77), b(77);
  EXPECT_EQ(random_labeling(50, a).labels(), random_labeling(50, b).labels());

  const Labeling l = random_labeling(40, rng);
  std::vector<NodeId> sorted = l.labels();
  std::sort(sorted.begin(), sorted.end());
  for (NodeId i = 1; i <= 40; ++i) {
    EXPECT_EQ(sorted[i - 1], i);
    EXPECT_EQ(l.label(l.vertex_with_label(i)), i);
  }
  EXPECT_THROW(Labeling({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(random_labeling(0, rng), std::invalid_argument);
}

TEST(Labeling, UniformOverPermutations) {
  Rng rng(2718);
  std::map<std::vector<NodeId>, int> counts;
  for (int i = 0; i < 60000; ++i) ++counts[random_labeling(3, rng).labels()];
  ASSERT_EQ(counts.size(), 6u);
  double chi2 = 0.0;
  for (const auto& [perm, c] : counts) {
    EXPECT_NEAR(c, 10000, 400);
    chi2 += (c - 10000.0) * (c - 10000.0) / 10000.0;
  }
  EXPECT_LT(chi2, 20.52);  // chi-square, 5 dof, p = 0.001
}

// -- forest decomposition ----------------------------------------------------

TwoTierGraph graph_from_undirected(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> e) {
  TwoTierGraph g(n);
  for (auto [a, b] : e) g.add_symmetric(a, b, EdgeKind::kCommunication);
  return g;
}

void expect_oriented(const OrientedForest& f, std::size_t n) {
  std::vector<int> in(n + 1, 0), out(n + 1, 0);
  for (const Link& l : f.edges) {
    ++out[l.tx];
    ++in[l.rx];
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (f.orientation == Orientation::kOut) {
      EXPECT_LE(in[v], 1);
    } else {
      EXPECT_LE(out[v], 1);
    }
  }
  // Undirected acyclicity via union-find.
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Link& l : f.edges) {
    const auto a = find(l.tx), b = find(l.rx);
    EXPECT_NE(a, b) << "cycle through " << l.tx << "-" << l.rx;
    parent[a] = b;
  }
}

TEST(ForestDecomposition, DisjointPairs) {
  const TwoTierGraph g = build_two_tier_graph(testing::six_node(), exp1_params());
  const auto d = decompose_into_oriented_forests(g);
  EXPECT_EQ(d.undirected_forests, 1u);
  ASSERT_EQ(d.forests.size(), 2u);
  EXPECT_EQ(d.forests[0].orientation, Orientation::kOut);
  EXPECT_EQ(d.forests[1].orientation, Orientation::kIn);
  EXPECT_EQ(as_set(d.forests[0].edges), (std::set<Link>{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(as_set(d.forests[1].edges), (std::set<Link>{{2, 1}, {4, 3}, {6, 5}}));
}

TEST(ForestDecomposition, Path) {
  const auto d = decompose_into_oriented_forests(graph_from_undirected(3, {{1, 2}, {2, 3}}));
  ASSERT_EQ(d.forests.size(), 2u);
  EXPECT_EQ(as_set(d.forests[0].edges), (std::set<Link>{{1, 2}, {2, 3}}));
  EXPECT_EQ(as_set(d.forests[1].edges), (std::set<Link>{{2, 1}, {3, 2}}));
  for (const auto& f : d.forests) expect_oriented(f, 3);
}

TEST(ForestDecomposition, TriangleNeedsTwoForests) {
  const auto d = decompose_into_oriented_forests(graph_from_undirected(3, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(d.undirected_forests, 2u);
  ASSERT_EQ(d.forests.size(), 4u);
  EXPECT_EQ(as_set(d.forests[0].edges), (std::set<Link>{{1, 2}, {1, 3}}));
  EXPECT_EQ(as_set(d.forests[1].edges), (std::set<Link>{{2, 1}, {3, 1}}));
  EXPECT_EQ(as_set(d.forests[2].edges), (std::set<Link>{{2, 3}}));
  EXPECT_EQ(as_set(d.forests[3].edges), (std::set<Link>{{3, 2}}));
}

TEST(ForestDecomposition, EmptyGraph) {
  const auto d = decompose_into_oriented_forests(TwoTierGraph(4));
  EXPECT_EQ(d.undirected_forests, 0u);
  EXPECT_TRUE(d.forests.empty());
}

TEST(ForestDecomposition, PartitionsCommunicationEdges) {
  Rng rng(6);
  const auto rp = exp1_params();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 10 + rng.uniform_index(100);
    const TwoTierGraph g = build_two_tier_graph(random_network(rng, n, 200 + 300 * rng.uniform01()), rp);
    const auto d = decompose_into_oriented_forests(g);
    std::multiset<Link> all;
    for (std::size_t i = 0; i < d.forests.size(); ++i) {
      EXPECT_EQ(d.forests[i].orientation, i % 2 == 0 ? Orientation::kOut : Orientation::kIn);
      expect_oriented(d.forests[i], n);
      all.insert(d.forests[i].edges.begin(), d.forests[i].edges.end());
    }
    EXPECT_EQ(all.size(), g.comm_edges().size());
    EXPECT_EQ(std::set<Link>(all.begin(), all.end()), as_set(g.comm_edges()));
    EXPECT_EQ(d.forests.size(), 2 * d.undirected_forests);
  }
}

}  // namespace
}  // namespace stdma
