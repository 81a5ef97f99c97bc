// Copyright 2026 The Infoprop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infoprop/netmetrics.h"

#include <random>

#include <gtest/gtest.h>

#include "oracles.h"

namespace infoprop {
namespace {

CharacterNetwork Path3() {
  CharacterNetwork g;
  g.AddEdge(1, 2);
  g.AddEdge(2, 3);
  return g;
}

CharacterNetwork Star3() {
  CharacterNetwork g;
  for (int leaf : {1, 2, 3}) g.AddEdge(0, leaf);
  return g;
}

CharacterNetwork Complete(int n) {
  CharacterNetwork g;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.AddEdge(i, j);
  return g;
}

TEST(NodeFeatures, PathMiddle) {
  const NodeFeatures f = ComputeNodeFeatures(Path3(), 2);
  EXPECT_DOUBLE_EQ(f.betweenness, 1.0);
  EXPECT_DOUBLE_EQ(f.closeness, 1.0);
  EXPECT_DOUBLE_EQ(f.triangles, 0.0);
  EXPECT_EQ(f.degree, 2);
}

TEST(NodeFeatures, PathEnd) {
  const NodeFeatures f = ComputeNodeFeatures(Path3(), 1);
  EXPECT_DOUBLE_EQ(f.betweenness, 0.0);
  EXPECT_DOUBLE_EQ(f.closeness, (1.0 + 0.5) / 2.0);
  EXPECT_DOUBLE_EQ(f.avg_neighbor_degree, 2.0);
  EXPECT_DOUBLE_EQ(f.effective_size, 1.0);
  EXPECT_DOUBLE_EQ(f.efficiency, 1.0);
}

TEST(NodeFeatures, StarCenter) {
  const NodeFeatures f = ComputeNodeFeatures(Star3(), 0);
  EXPECT_DOUBLE_EQ(f.avg_neighbor_degree, 1.0);
  EXPECT_DOUBLE_EQ(f.effective_size, 3.0);
  EXPECT_DOUBLE_EQ(f.efficiency, 1.0);
  EXPECT_DOUBLE_EQ(f.betweenness, 1.0);
}

TEST(NodeFeatures, Triangle) {
  const CharacterNetwork k3 = Complete(3);
  for (int v : {0, 1, 2}) {
    const NodeFeatures f = ComputeNodeFeatures(k3, v);
    EXPECT_DOUBLE_EQ(f.triangles, 1.0);
    EXPECT_DOUBLE_EQ(f.effective_size, 1.0);
    EXPECT_DOUBLE_EQ(f.efficiency, 0.5);
    EXPECT_DOUBLE_EQ(f.betweenness, 0.0);
  }
}

TEST(AllFeatures, K4Triangles) {
  for (const auto &[v, f] : AllFeatures(Complete(4))) {
    EXPECT_DOUBLE_EQ(f.triangles, 3.0) << v;
  }
}

TEST(AllFeatures, EmptyGraph) { EXPECT_TRUE(AllFeatures(CharacterNetwork{}).empty()); }

TEST(NodeFeatures, IsolatedNodeIsAllZero) {
  CharacterNetwork g = Path3();
  g.AddNode(9);
  const NodeFeatures f = ComputeNodeFeatures(g, 9);
  for (double x : f.AsArray()) EXPECT_DOUBLE_EQ(x, 0.0);
  EXPECT_EQ(f.degree, 0);
}

TEST(NodeFeatures, UnknownNodeThrows) {
  EXPECT_THROW(ComputeNodeFeatures(Path3(), 42), UnknownNode);
}

TEST(NodeFeatures, EdgeWeightsAreIgnored) {
  CharacterNetwork heavy;
  heavy.AddEdge(1, 2, 5);
  heavy.AddEdge(2, 3, 2);
  const auto a = AllFeatures(heavy);
  const auto b = AllFeatures(Path3());
  for (const auto &[v, f] : a) EXPECT_EQ(f.AsArray(), b.at(v).AsArray());
}

TEST(NodeFeatures, ClassicalClosenessOnDisconnectedGraph) {
  CharacterNetwork g = Path3();
  g.AddEdge(7, 8);
  // Node 2 reaches 2 of 4 others at distance 1 each.
  const NodeFeatures f = ComputeNodeFeatures(g, 2, ClosenessKind::kClassical);
  EXPECT_DOUBLE_EQ(f.closeness, (2.0 / 4.0) * (2.0 / 2.0));
}

TEST(NodeFeatures, PropertyOracleAgreement) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    const CharacterNetwork g = oracle::RandomGraph(rng, 7);
    const bool harmonic = trial % 2 == 0;
    const auto expected = oracle::Measures(g, harmonic);
    const auto got =
        AllFeatures(g, harmonic ? ClosenessKind::kHarmonic : ClosenessKind::kClassical);
    ASSERT_EQ(got.size(), expected.size());
    for (const auto &[v, e] : expected) {
      const NodeFeatures &f = got.at(v);
      EXPECT_NEAR(f.closeness, e.closeness, 1e-9);
      EXPECT_NEAR(f.betweenness, e.betweenness, 1e-9);
      EXPECT_NEAR(f.avg_neighbor_degree, e.avg_neighbor_degree, 1e-9);
      EXPECT_NEAR(f.effective_size, e.effective_size, 1e-9);
      EXPECT_NEAR(f.efficiency, e.efficiency, 1e-9);
      EXPECT_NEAR(f.triangles, e.triangles, 1e-9);
    }
  }
}

// Relabelling nodes permutes features without changing them.
TEST(NodeFeatures, PropertyRelabelInvariance) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const CharacterNetwork g = oracle::RandomGraph(rng, 7);
    CharacterNetwork h;
    for (int v : g.Nodes()) h.AddNode(1000 - v);
    for (const auto &e : g.Edges()) h.AddEdge(1000 - e.a, 1000 - e.b);
    const auto fg = AllFeatures(g);
    const auto fh = AllFeatures(h);
    for (const auto &[v, f] : fg) {
      const auto a = f.AsArray();
      const auto b = fh.at(1000 - v).AsArray();
      for (size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a[k], b[k], 1e-12);
    }
  }
}

}  // namespace
}  // namespace infoprop
