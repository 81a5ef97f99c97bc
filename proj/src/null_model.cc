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

#include "infoprop/null_model.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <thread>

#include "spdlog/spdlog.h"

namespace infoprop {
namespace {

uint64_t Mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Fits one design, mapping coefficients of dropped constant columns to 0.
// Returns false on separation.
bool FitScaled(const FeatureMatrix &raw, std::vector<double> *coefficients) {
  const ScaledMatrix scaled = MinMaxScale(raw);
  coefficients->assign(raw.columns.size(), 0.0);
  if (scaled.matrix.columns.empty()) return true;
  RegressionResult r;
  try {
    r = FitLogistic(scaled.matrix);
  } catch (const LogisticError &) {
    return false;
  }
  if (r.separated || !r.converged) return false;
  for (size_t k = 0; k < scaled.matrix.columns.size(); ++k) {
    const auto it = std::find(raw.columns.begin(), raw.columns.end(),
                              scaled.matrix.columns[k]);
    (*coefficients)[it - raw.columns.begin()] = r.coefficients[k];
  }
  return true;
}

}  // namespace

RegressionResult FitScaledLogistic(const FeatureMatrix &raw) {
  const ScaledMatrix scaled = MinMaxScale(raw);
  RegressionResult fit = FitLogistic(scaled.matrix);
  // Report on the full column set; constant columns carry no effect.
  const size_t cols = raw.columns.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  RegressionResult out = fit;
  out.names = raw.columns;
  out.coefficients.assign(cols, 0.0);
  out.std_errors.assign(fit.std_errors.empty() ? 0 : cols, nan);
  out.p_values.assign(fit.p_values.empty() ? 0 : cols, nan);
  for (size_t k = 0; k < scaled.matrix.columns.size(); ++k) {
    const size_t j = std::find(raw.columns.begin(), raw.columns.end(),
                               scaled.matrix.columns[k]) -
                     raw.columns.begin();
    out.coefficients[j] = fit.coefficients[k];
    if (!fit.std_errors.empty()) out.std_errors[j] = fit.std_errors[k];
    if (!fit.p_values.empty()) out.p_values[j] = fit.p_values[k];
  }
  return out;
}

uint64_t DeriveSeed(uint64_t seed, std::string_view tag, uint64_t index) {
  uint64_t h = Mix(seed);
  for (unsigned char c : tag) h = Mix(h ^ c);
  return Mix(h ^ Mix(index));
}

CharacterNetwork ExpectedDegreeGraph(std::span<const double> weights,
                                     uint64_t seed) {
  CharacterNetwork g;
  const int n = static_cast<int>(weights.size());
  double total = 0;
  for (int i = 0; i < n; ++i) {
    if (weights[i] < 0) throw std::invalid_argument("negative expected degree");
    total += weights[i];
    g.AddNode(i);
  }
  if (total <= 0) return g;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double p = std::min(1.0, weights[i] * weights[j] / total);
      if (p > 0 && unit(rng) < p) g.AddEdge(i, j);
    }
  }
  return g;
}

CharacterNetwork DegreeMatchedNull(const CharacterNetwork &observed,
                                   uint64_t seed) {
  const auto nodes = observed.Nodes();
  std::vector<double> degrees;
  for (int v : nodes) degrees.push_back(observed.Degree(v));
  const CharacterNetwork dense = ExpectedDegreeGraph(degrees, seed);
  CharacterNetwork out;
  for (int v : nodes) out.AddNode(v);
  for (const auto &e : dense.Edges()) out.AddEdge(nodes[e.a], nodes[e.b]);
  return out;
}

double EmpiricalPValue(double observed, std::span<const double> null_values) {
  if (null_values.empty()) return std::nan("");
  const double magnitude = std::abs(observed);
  size_t extreme = 0;
  for (double v : null_values) extreme += std::abs(v) >= magnitude;
  return static_cast<double>(extreme) / static_cast<double>(null_values.size());
}

FeatureMatrix ObservedFeatures(std::span<const NetworkPairs> networks,
                               ClosenessKind closeness) {
  FeatureMatrix m = FeatureMatrix::WithNodeFeatureColumns();
  int event = 0;
  for (const auto &net : networks) {
    const auto features = AllFeatures(net.network, closeness);
    for (const auto &[b, b_prime] : net.pairs) {
      m.AddRow(1, features.at(b), net.book_id, b, event);
      m.AddRow(0, features.at(b_prime), net.book_id, b_prime, event);
      ++event;
    }
  }
  return m;
}

NullDistribution RandomizationTest(std::span<const NetworkPairs> networks,
                                   const RandomizationOptions &options) {
  NullDistribution out;
  const FeatureMatrix observed = ObservedFeatures(networks, options.closeness);
  out.names = observed.columns;
  const int cols = static_cast<int>(observed.columns.size());
  out.observed = FitScaledLogistic(observed);

  // Randomized features: per observed row, graphs_per_network draws.
  const int k = options.graphs_per_network;
  std::vector<std::vector<std::vector<double>>> draws;  // row -> draw -> x
  for (size_t ni = 0; ni < networks.size(); ++ni) {
    const auto &net = networks[ni];
    std::vector<std::map<int, NodeFeatures>> per_graph;
    for (int g = 0; g < k; ++g) {
      const uint64_t s = DeriveSeed(options.seed, "null-graph",
                                    (static_cast<uint64_t>(ni) << 20) + g);
      per_graph.push_back(AllFeatures(options.generator(net.network, s),
                                      options.closeness));
    }
    for (const auto &[b, b_prime] : net.pairs) {
      for (int node : {b, b_prime}) {
        std::vector<std::vector<double>> node_draws;
        for (const auto &features : per_graph) {
          const auto a = features.at(node).AsArray();
          node_draws.emplace_back(a.begin(), a.end());
        }
        draws.push_back(std::move(node_draws));
      }
    }
  }

  const int trials = options.trials;
  std::vector<std::vector<double>> trial_coefs(trials);
  std::vector<int> trial_redraws(trials, 0);
  std::vector<char> trial_ok(trials, 0);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int t = next++; t < trials; t = next++) {
      FeatureMatrix sample = observed;
      for (int attempt = 0; attempt <= options.max_redraws; ++attempt) {
        std::mt19937_64 rng(DeriveSeed(options.seed, "trial",
                                       (static_cast<uint64_t>(t) << 16) + attempt));
        std::uniform_int_distribution<int> pick(0, k - 1);
        for (size_t r = 0; r < sample.rows.size(); ++r) {
          sample.rows[r].values = draws[r][pick(rng)];
        }
        if (FitScaled(sample, &trial_coefs[t])) {
          trial_ok[t] = 1;
          break;
        }
        ++trial_redraws[t];
      }
    }
  };
  const int jobs = std::max(1, std::min(options.jobs, trials));
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }

  out.coefficients.assign(cols, {});
  for (int t = 0; t < trials; ++t) {
    out.redraws += trial_redraws[t];
    if (!trial_ok[t]) {
      ++out.failed_trials;
      continue;
    }
    ++out.completed_trials;
    for (int c = 0; c < cols; ++c) out.coefficients[c].push_back(trial_coefs[t][c]);
  }
  if (out.redraws > 0 || out.failed_trials > 0) {
    spdlog::info("randomization: {} separated resamples redrawn, {} trials failed",
                 out.redraws, out.failed_trials);
  }
  for (int c = 0; c < cols; ++c) {
    out.p_values.push_back(
        EmpiricalPValue(out.observed.coefficients[c], out.coefficients[c]));
  }
  return out;
}

}  // namespace infoprop
