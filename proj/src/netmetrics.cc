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

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

namespace infoprop {
namespace {

struct DenseGraph {
  std::vector<int> ids;
  std::vector<std::vector<int>> adj;       // sorted neighbor indices
  std::vector<std::vector<char>> matrix;   // adjacency matrix

  explicit DenseGraph(const CharacterNetwork &g) : ids(g.Nodes()) {
    const int n = static_cast<int>(ids.size());
    adj.resize(n);
    matrix.assign(n, std::vector<char>(n, 0));
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[ids[i]] = i;
    for (const auto &e : g.Edges()) {
      const int a = pos[e.a];
      const int b = pos[e.b];
      adj[a].push_back(b);
      adj[b].push_back(a);
      matrix[a][b] = matrix[b][a] = 1;
    }
    for (auto &row : adj) std::sort(row.begin(), row.end());
  }
  int size() const { return static_cast<int>(ids.size()); }
};

std::vector<int> BfsDistances(const DenseGraph &g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : g.adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

double Closeness(const DenseGraph &g, int v, ClosenessKind kind) {
  const int n = g.size();
  if (n <= 1) return 0;
  const auto dist = BfsDistances(g, v);
  double inverse_sum = 0;
  double distance_sum = 0;
  int reachable = 0;
  for (int u = 0; u < n; ++u) {
    if (u == v || dist[u] <= 0) continue;
    inverse_sum += 1.0 / dist[u];
    distance_sum += dist[u];
    ++reachable;
  }
  if (kind == ClosenessKind::kHarmonic) return inverse_sum / (n - 1);
  if (reachable == 0) return 0;
  return (static_cast<double>(reachable) / (n - 1)) * (reachable / distance_sum);
}

// Brandes accumulation for undirected graphs, normalized so that a node on
// every shortest path between all other pairs scores 1.
std::vector<double> Betweenness(const DenseGraph &g) {
  const int n = g.size();
  std::vector<double> cb(n, 0.0);
  for (int s = 0; s < n; ++s) {
    std::vector<int> stack;
    std::vector<std::vector<int>> preds(n);
    std::vector<double> sigma(n, 0.0);
    std::vector<int> dist(n, -1);
    sigma[s] = 1;
    dist[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      stack.push_back(v);
      for (int w : g.adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) cb[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both ends.
  const double pairs = n > 2 ? (n - 1.0) * (n - 2.0) / 2.0 : 0.0;
  for (double &x : cb) x = pairs > 0 ? x / 2.0 / pairs : 0.0;
  return cb;
}

NodeFeatures LocalFeatures(const DenseGraph &g, int v) {
  NodeFeatures f;
  const auto &nbrs = g.adj[v];
  const int degree = static_cast<int>(nbrs.size());
  f.degree = degree;
  if (degree == 0) return f;

  double degree_sum = 0;
  for (int u : nbrs) degree_sum += static_cast<double>(g.adj[u].size());
  f.avg_neighbor_degree = degree_sum / degree;

  int ties = 0;
  for (size_t i = 0; i < nbrs.size(); ++i) {
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      ties += g.matrix[nbrs[i]][nbrs[j]];
    }
  }
  f.triangles = ties;
  f.effective_size = degree - 2.0 * ties / degree;
  f.efficiency = f.effective_size / degree;
  return f;
}

}  // namespace

NodeFeatures ComputeNodeFeatures(const CharacterNetwork &graph, int node,
                                 ClosenessKind closeness) {
  if (!graph.HasNode(node)) {
    throw UnknownNode("node " + std::to_string(node) + " not in network");
  }
  const DenseGraph g(graph);
  const int v = static_cast<int>(
      std::lower_bound(g.ids.begin(), g.ids.end(), node) - g.ids.begin());
  NodeFeatures f = LocalFeatures(g, v);
  f.closeness = Closeness(g, v, closeness);
  f.betweenness = Betweenness(g)[v];
  return f;
}

std::map<int, NodeFeatures> AllFeatures(const CharacterNetwork &graph,
                                        ClosenessKind closeness) {
  std::map<int, NodeFeatures> out;
  const DenseGraph g(graph);
  if (g.size() == 0) return out;
  const auto betweenness = Betweenness(g);
  for (int v = 0; v < g.size(); ++v) {
    NodeFeatures f = LocalFeatures(g, v);
    f.closeness = Closeness(g, v, closeness);
    f.betweenness = betweenness[v];
    out.emplace(g.ids[v], f);
  }
  return out;
}

}  // namespace infoprop
