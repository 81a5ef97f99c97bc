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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "infoprop/csv.h"
#include "infoprop/feature_matrix.h"
#include "infoprop/logistic.h"
#include "infoprop/null_model.h"

namespace infoprop {
namespace {

FeatureMatrix Matrix(std::vector<std::string> columns,
                     std::vector<std::pair<int, std::vector<double>>> rows) {
  FeatureMatrix m;
  m.columns = std::move(columns);
  int id = 0;
  for (auto &[label, values] : rows) {
    m.rows.push_back({label, std::move(values), "b", id, id});
    ++id;
  }
  return m;
}

TEST(MinMaxScale, MapsToUnitInterval) {
  const auto m = Matrix({"x", "k"}, {{0, {2, 5}}, {1, {4, 5}}, {1, {6, 5}}});
  const ScaledMatrix s = MinMaxScale(m);
  EXPECT_EQ(s.matrix.columns, std::vector<std::string>{"x"});
  EXPECT_EQ(s.constant_columns, std::vector<std::string>{"k"});
  ASSERT_EQ(s.matrix.rows.size(), 3u);
  EXPECT_DOUBLE_EQ(s.matrix.rows[0].values[0], 0.0);
  EXPECT_DOUBLE_EQ(s.matrix.rows[1].values[0], 0.5);
  EXPECT_DOUBLE_EQ(s.matrix.rows[2].values[0], 1.0);
  EXPECT_EQ(s.ranges[0], (std::pair<double, double>{2, 6}));
}

TEST(MinMaxScale, PropertyBoundsAndOrder) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(3, 10);
  for (int trial = 0; trial < 50; ++trial) {
    FeatureMatrix m;
    m.columns = {"a", "b"};
    for (int i = 0; i < 20; ++i) m.rows.push_back({i % 2, {normal(rng), normal(rng)}});
    const ScaledMatrix s = MinMaxScale(m);
    for (size_t i = 0; i < m.rows.size(); ++i) {
      for (size_t c = 0; c < 2; ++c) {
        EXPECT_GE(s.matrix.rows[i].values[c], 0.0);
        EXPECT_LE(s.matrix.rows[i].values[c], 1.0);
        for (size_t j = 0; j < m.rows.size(); ++j) {
          EXPECT_EQ(m.rows[i].values[c] < m.rows[j].values[c],
                    s.matrix.rows[i].values[c] < s.matrix.rows[j].values[c]);
        }
      }
    }
  }
}

TEST(FeatureMatrixCsv, RoundTrip) {
  auto m = Matrix({"closeness", "triangles"}, {{1, {0.25, 3}}, {0, {1.0 / 3, 0}}});
  m.rows[1].book_id = "a,b";
  EXPECT_EQ(FeatureMatrixFromCsv(FeatureMatrixToCsv(m)), m);
  EXPECT_THROW(FeatureMatrixFromCsv("x\n"), std::runtime_error);
  EXPECT_THROW(FeatureMatrixFromCsv("book_id,entity_id,event_id,label,x\nb,1,1,1\n"),
               std::runtime_error);
}

TEST(Csv, QuotingAndParsing) {
  EXPECT_EQ(CsvField("plain"), "plain");
  EXPECT_EQ(CsvField("a,b"), "\"a,b\"");
  EXPECT_EQ(CsvField("say \"hi\""), "\"say \"\"hi\"\"\"");
  const auto rows = ParseCsv("a,\"b,c\",\"d\"\"e\"\n1,2,3\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(std::stod(CsvNumber(1.0 / 3)), 1.0 / 3);
}

// One binary predictor: the MLE is the log odds ratio and its standard
// error is sqrt(1/a + 1/b + 1/c + 1/d).
TEST(FitLogistic, TwoByTwoTableClosedForm) {
  std::vector<std::pair<int, std::vector<double>>> rows;
  auto add = [&](double x, int label, int count) {
    for (int i = 0; i < count; ++i) rows.push_back({label, {x}});
  };
  add(0, 1, 30);
  add(0, 0, 20);
  add(1, 1, 10);
  add(1, 0, 40);
  const RegressionResult r = FitLogistic(Matrix({"x"}, rows));
  ASSERT_TRUE(r.converged);
  EXPECT_FALSE(r.separated);
  EXPECT_NEAR(r.intercept, std::log(30.0 / 20), 1e-9);
  EXPECT_NEAR(r.coefficients[0], std::log((10.0 / 40) / (30.0 / 20)), 1e-9);
  const double se = std::sqrt(1.0 / 30 + 1.0 / 20 + 1.0 / 10 + 1.0 / 40);
  EXPECT_NEAR(r.std_errors[0], se, 1e-9);
  const double z = r.coefficients[0] / se;
  EXPECT_NEAR(r.p_values[0], std::erfc(std::abs(z) / std::sqrt(2.0)), 1e-12);
  EXPECT_TRUE(r.Significant(0));
}

TEST(FitLogistic, RecoversSimulatedCoefficients) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  const std::vector<double> beta = {1.0, -0.5, 0.0};
  const double intercept = -0.3;
  const int n = 10000;
  Eigen::MatrixXd x(n, 3);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    double eta = intercept;
    for (int j = 0; j < 3; ++j) {
      x(i, j) = normal(rng);
      eta += beta[j] * x(i, j);
    }
    y[i] = unit(rng) < 1 / (1 + std::exp(-eta)) ? 1 : 0;
  }
  const RegressionResult r = FitLogistic(x, y, {"a", "b", "c"});
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.intercept, intercept, 0.1);
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(r.coefficients[j], beta[j], 0.1);
  EXPECT_LT(r.p_values[0], 1e-6);
  EXPECT_LT(r.p_values[1], 1e-6);
}

TEST(FitLogistic, PerfectSeparationIsFlagged) {
  const auto m = Matrix({"x"}, {{0, {0.0}}, {0, {0.1}}, {0, {0.2}}, {1, {0.8}},
                                {1, {0.9}}, {1, {1.0}}});
  const RegressionResult r = FitLogistic(m);
  EXPECT_TRUE(r.separated);
  EXPECT_FALSE(r.converged);
  EXPECT_TRUE(r.p_values.empty());
  EXPECT_FALSE(r.Significant(0));
}

TEST(FitLogistic, SingleLabelThrows) {
  EXPECT_THROW(FitLogistic(Matrix({"x"}, {{1, {0.0}}, {1, {1.0}}})), LogisticError);
  EXPECT_THROW(FitLogistic(Matrix({"x"}, {})), LogisticError);
}

TEST(FitLogistic, CollinearDesignThrows) {
  const auto m = Matrix({"x", "y"}, {{0, {0, 0}}, {1, {1, 2}}, {0, {2, 4}},
                                     {1, {3, 6}}, {1, {1, 2}}, {0, {2, 4}}});
  EXPECT_THROW(FitLogistic(m), LogisticError);
}

TEST(FitScaledLogistic, ConstantColumnsReportZeroAndNoInference) {
  auto m = Matrix({"x", "k"}, {});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit;
  for (int i = 0; i < 200; ++i) {
    const double x = unit(rng);
    m.rows.push_back({unit(rng) < x ? 1 : 0, {x * 10, 7.0}});
  }
  const RegressionResult r = FitScaledLogistic(m);
  ASSERT_EQ(r.names, m.columns);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.coefficients[1], 0.0);
  EXPECT_TRUE(std::isnan(r.p_values[1]));
  EXPECT_TRUE(std::isnan(r.std_errors[1]));
  EXPECT_FALSE(std::isnan(r.p_values[0]));
}

TEST(DeriveSeed, StableAndTagSensitive) {
  EXPECT_EQ(DeriveSeed(1, "a"), DeriveSeed(1, "a"));
  EXPECT_NE(DeriveSeed(1, "a"), DeriveSeed(1, "b"));
  EXPECT_NE(DeriveSeed(1, "a"), DeriveSeed(2, "a"));
  EXPECT_NE(DeriveSeed(1, "a", 0), DeriveSeed(1, "a", 1));
}

TEST(ExpectedDegreeGraph, ZeroWeightsGiveIsolatedNodes) {
  const std::vector<double> w = {0, 0, 3, 3, 0};
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const CharacterNetwork g = ExpectedDegreeGraph(w, seed);
    EXPECT_EQ(g.num_nodes(), 5);
    for (int v : {0, 1, 4}) EXPECT_EQ(g.Degree(v), 0);
  }
  EXPECT_EQ(ExpectedDegreeGraph(std::vector<double>{0, 0}, 1).num_edges(), 0);
  EXPECT_THROW(ExpectedDegreeGraph(std::vector<double>{-1, 2}, 1), std::invalid_argument);
}

TEST(ExpectedDegreeGraph, DeterministicPerSeed) {
  const std::vector<double> w = {1, 2, 3, 2, 1, 4, 2};
  EXPECT_EQ(ExpectedDegreeGraph(w, 9), ExpectedDegreeGraph(w, 9));
}

TEST(ExpectedDegreeGraph, MeanDegreesMatchWeights) {
  std::vector<double> w;
  for (int i = 0; i < 40; ++i) w.push_back(2 + (i % 5));
  std::vector<double> mean(w.size(), 0);
  const int samples = 8000;
  for (int s = 0; s < samples; ++s) {
    const CharacterNetwork g = ExpectedDegreeGraph(w, DeriveSeed(3, "mc", s));
    for (size_t v = 0; v < w.size(); ++v) mean[v] += g.Degree(static_cast<int>(v));
  }
  // Without self-loops a node's expectation is w_v (1 - w_v / total).
  double total = 0;
  for (double x : w) total += x;
  for (size_t v = 0; v < w.size(); ++v) {
    EXPECT_NEAR(mean[v] / samples, w[v] * (1 - w[v] / total), 0.15) << v;
  }
}

TEST(DegreeMatchedNull, KeepsNodeLabels) {
  CharacterNetwork g;
  g.AddEdge(10, 20, 5);
  g.AddEdge(20, 30);
  g.AddNode(40);
  const CharacterNetwork null = DegreeMatchedNull(g, 1);
  EXPECT_EQ(null.Nodes(), g.Nodes());
  for (const auto &e : null.Edges()) EXPECT_EQ(e.weight, 1);
}

TEST(EmpiricalPValue, CountsAtLeastAsExtreme) {
  EXPECT_DOUBLE_EQ(EmpiricalPValue(0.5, std::vector<double>{0.1, -0.6, 0.5, 0.2}), 0.5);
  EXPECT_DOUBLE_EQ(EmpiricalPValue(-2, std::vector<double>{0.1, 0.2}), 0.0);
  EXPECT_TRUE(std::isnan(EmpiricalPValue(1, std::vector<double>{})));
}

// Two random networks with random (propagating, non-propagating) pairs.
std::vector<NetworkPairs> RandomNetworks(uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NetworkPairs> out;
  for (int b = 0; b < 2; ++b) {
    NetworkPairs net;
    net.book_id = "book" + std::to_string(b);
    const int n = 25;
    std::bernoulli_distribution edge(0.15);
    for (int i = 0; i < n; ++i) {
      net.network.AddNode(i);
      for (int j = i + 1; j < n; ++j) {
        if (edge(rng)) net.network.AddEdge(i, j);
      }
    }
    std::uniform_int_distribution<int> node(0, n - 1);
    for (int k = 0; k < 30; ++k) {
      const int x = node(rng);
      int y = node(rng);
      while (y == x) y = node(rng);
      net.pairs.emplace_back(x, y);
    }
    out.push_back(std::move(net));
  }
  return out;
}

TEST(RandomizationTest, IdenticalNullGivesPValueOne) {
  const auto nets = RandomNetworks(1);
  RandomizationOptions options;
  options.trials = 20;
  options.graphs_per_network = 2;
  options.generator = [](const CharacterNetwork &g, uint64_t) { return g; };
  const NullDistribution d = RandomizationTest(nets, options);
  EXPECT_EQ(d.completed_trials, 20);
  for (size_t c = 0; c < d.names.size(); ++c) {
    EXPECT_DOUBLE_EQ(d.p_values[c], 1.0) << d.names[c];
    for (double v : d.coefficients[c]) EXPECT_DOUBLE_EQ(v, d.observed.coefficients[c]);
  }
}

TEST(RandomizationTest, SingleTrialIsReproducible) {
  const auto nets = RandomNetworks(2);
  RandomizationOptions options;
  options.trials = 1;
  options.seed = 77;
  const NullDistribution x = RandomizationTest(nets, options);
  const NullDistribution y = RandomizationTest(nets, options);
  EXPECT_EQ(x.completed_trials + x.failed_trials, 1);
  EXPECT_EQ(x.coefficients, y.coefficients);
  options.seed = 78;
  const NullDistribution z = RandomizationTest(nets, options);
  if (x.completed_trials == 1 && z.completed_trials == 1) {
    EXPECT_NE(x.coefficients, z.coefficients);
  }
}

TEST(RandomizationTest, JobCountDoesNotChangeResults) {
  const auto nets = RandomNetworks(3);
  RandomizationOptions options;
  options.trials = 40;
  options.seed = 5;
  options.jobs = 1;
  const NullDistribution one = RandomizationTest(nets, options);
  options.jobs = 4;
  const NullDistribution four = RandomizationTest(nets, options);
  EXPECT_EQ(one.coefficients, four.coefficients);
  EXPECT_EQ(one.p_values, four.p_values);
  EXPECT_EQ(one.redraws, four.redraws);
  for (double p : one.p_values) {
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

TEST(ObservedFeatures, TwoRowsPerPair) {
  const auto nets = RandomNetworks(4);
  const FeatureMatrix m = ObservedFeatures(nets);
  ASSERT_EQ(m.rows.size(), 120u);
  EXPECT_EQ(m.rows[0].label, 1);
  EXPECT_EQ(m.rows[1].label, 0);
  EXPECT_EQ(m.rows[0].event_id, m.rows[1].event_id);
  EXPECT_EQ(m.rows[0].entity_id, nets[0].pairs[0].first);
  EXPECT_EQ(m.rows[119].book_id, "book1");
}

}  // namespace
}  // namespace infoprop
