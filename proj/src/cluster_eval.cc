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

#include "infoprop/cluster_eval.h"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace infoprop {
namespace {

// Cluster index per item. Items absent from `c` are left out.
std::map<int, int> Owners(const Clustering &c) {
  std::map<int, int> owner;
  for (size_t i = 0; i < c.size(); ++i) {
    for (int item : c[i]) owner[item] = static_cast<int>(i);
  }
  return owner;
}

// MUC recall of `key` against `response`: each key cluster contributes
// |k| minus the number of response parts it is split into. Items missing
// from the response count as their own part.
std::pair<double, double> MucCounts(const Clustering &key,
                                    const Clustering &response) {
  const auto owner = Owners(response);
  double num = 0;
  double den = 0;
  for (const auto &k : key) {
    if (k.empty()) continue;
    std::set<int> parts;
    int missing = 0;
    for (int item : k) {
      auto it = owner.find(item);
      if (it == owner.end()) {
        ++missing;
      } else {
        parts.insert(it->second);
      }
    }
    const double size = static_cast<double>(k.size());
    num += size - static_cast<double>(parts.size() + missing);
    den += size - 1;
  }
  return {num, den};
}

int Overlap(const std::vector<int> &a, const std::set<int> &b) {
  int n = 0;
  for (int x : a) n += b.contains(x);
  return n;
}

}  // namespace

double HarmonicF(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0 ? 2 * precision * recall / sum : 0.0;
}

Prf Muc(const Clustering &gold, const Clustering &pred) {
  Prf out;
  const auto [rn, rd] = MucCounts(gold, pred);
  const auto [pn, pd] = MucCounts(pred, gold);
  if (rd > 0) {
    out.recall = rn / rd;
  } else {
    out.undefined = true;
  }
  if (pd > 0) {
    out.precision = pn / pd;
  } else {
    out.undefined = true;
  }
  out.f1 = HarmonicF(out.precision, out.recall);
  return out;
}

Prf BCubed(const Clustering &gold, const Clustering &pred) {
  Prf out;
  std::vector<std::set<int>> gold_sets;
  std::vector<std::set<int>> pred_sets;
  for (const auto &g : gold) gold_sets.emplace_back(g.begin(), g.end());
  for (const auto &p : pred) pred_sets.emplace_back(p.begin(), p.end());
  const auto gold_owner = Owners(gold);
  const auto pred_owner = Owners(pred);

  auto accumulate = [](const std::vector<std::set<int>> &own,
                       const std::vector<std::set<int>> &other,
                       const std::map<int, int> &other_owner) {
    double total = 0;
    int items = 0;
    for (const auto &cluster : own) {
      for (int item : cluster) {
        ++items;
        auto it = other_owner.find(item);
        if (it == other_owner.end()) {
          total += 1.0 / static_cast<double>(cluster.size());
          continue;
        }
        const auto &match = other[it->second];
        int common = 0;
        for (int x : cluster) common += match.contains(x);
        total += static_cast<double>(common) /
                 static_cast<double>(cluster.size());
      }
    }
    return items > 0 ? total / items : 0.0;
  };
  // Precision averages over predicted items, recall over gold items.
  out.precision = accumulate(pred_sets, gold_sets, gold_owner);
  out.recall = accumulate(gold_sets, pred_sets, pred_owner);
  out.f1 = HarmonicF(out.precision, out.recall);
  return out;
}

Prf CeafPhi4(const Clustering &gold, const Clustering &pred) {
  Prf out;
  std::vector<const std::vector<int> *> g;
  std::vector<const std::vector<int> *> p;
  for (const auto &c : gold) {
    if (!c.empty()) g.push_back(&c);
  }
  for (const auto &c : pred) {
    if (!c.empty()) p.push_back(&c);
  }
  if (g.empty() || p.empty()) return out;

  std::vector<std::vector<double>> phi(g.size(), std::vector<double>(p.size()));
  for (size_t i = 0; i < g.size(); ++i) {
    const std::set<int> gs(g[i]->begin(), g[i]->end());
    for (size_t j = 0; j < p.size(); ++j) {
      phi[i][j] = 2.0 * Overlap(*p[j], gs) /
                  static_cast<double>(g[i]->size() + p[j]->size());
    }
  }
  const auto assignment = MaxWeightAssignment(phi);
  double similarity = 0;
  for (size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= 0) similarity += phi[i][assignment[i]];
  }
  out.recall = similarity / static_cast<double>(g.size());
  out.precision = similarity / static_cast<double>(p.size());
  out.f1 = HarmonicF(out.precision, out.recall);
  return out;
}

ClusterScore ScoreClusters(const Clustering &gold, const Clustering &pred) {
  ClusterScore s;
  s.muc = Muc(gold, pred);
  s.b3 = BCubed(gold, pred);
  s.ceaf = CeafPhi4(gold, pred);
  s.average_f = (s.muc.f1 + s.b3.f1 + s.ceaf.f1) / 3.0;
  return s;
}

std::vector<int> MaxWeightAssignment(
    const std::vector<std::vector<double>> &weights) {
  const int rows = static_cast<int>(weights.size());
  if (rows == 0) return {};
  const int cols = static_cast<int>(weights[0].size());
  const int n = std::max(rows, cols);
  double max_w = 0;
  for (const auto &r : weights) {
    for (double w : r) max_w = std::max(max_w, w);
  }
  // Square cost matrix, 1-based, padded with zero-weight cells.
  auto cost = [&](int i, int j) {
    const double w = (i <= rows && j <= cols) ? weights[i - 1][j - 1] : 0.0;
    return max_w - w;
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<int> assignment(rows, -1);
  for (int j = 1; j <= n; ++j) {
    if (match[j] >= 1 && match[j] <= rows && j <= cols) {
      assignment[match[j] - 1] = j - 1;
    }
  }
  return assignment;
}

}  // namespace infoprop
