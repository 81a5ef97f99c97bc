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

#include "infoprop/character_network.h"

#include <stdexcept>

namespace infoprop {

void CharacterNetwork::AddNode(int node) { adjacency_[node]; }

void CharacterNetwork::AddEdge(int a, int b, int weight) {
  if (a == b) throw std::invalid_argument("self-loop");
  if (weight <= 0) throw std::invalid_argument("edge weight must be positive");
  adjacency_[a][b] += weight;
  adjacency_[b][a] += weight;
}

int CharacterNetwork::Weight(int a, int b) const {
  auto it = adjacency_.find(a);
  if (it == adjacency_.end()) return 0;
  auto jt = it->second.find(b);
  return jt == it->second.end() ? 0 : jt->second;
}

int CharacterNetwork::Degree(int node) const {
  auto it = adjacency_.find(node);
  return it == adjacency_.end() ? 0 : static_cast<int>(it->second.size());
}

std::vector<int> CharacterNetwork::Nodes() const {
  std::vector<int> nodes;
  nodes.reserve(adjacency_.size());
  for (const auto &[node, _] : adjacency_) nodes.push_back(node);
  return nodes;
}

std::vector<int> CharacterNetwork::Neighbors(int node) const {
  std::vector<int> out;
  auto it = adjacency_.find(node);
  if (it == adjacency_.end()) return out;
  for (const auto &[other, _] : it->second) out.push_back(other);
  return out;
}

std::vector<WeightedEdge> CharacterNetwork::Edges() const {
  std::vector<WeightedEdge> edges;
  for (const auto &[a, row] : adjacency_) {
    for (const auto &[b, w] : row) {
      if (a < b) edges.push_back({a, b, w});
    }
  }
  return edges;
}

int CharacterNetwork::num_edges() const {
  int twice = 0;
  for (const auto &[_, row] : adjacency_) twice += static_cast<int>(row.size());
  return twice / 2;
}

long CharacterNetwork::TotalWeight() const {
  long total = 0;
  for (const auto &e : Edges()) total += e.weight;
  return total;
}

}  // namespace infoprop
