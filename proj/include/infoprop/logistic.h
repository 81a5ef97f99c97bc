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

// Unregularized logistic regression fitted by iteratively reweighted
// least squares, with Wald standard errors.

#ifndef INFOPROP_LOGISTIC_H_
#define INFOPROP_LOGISTIC_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "Eigen/Dense"
#include "infoprop/feature_matrix.h"

namespace infoprop {

struct LogisticOptions {
  int max_iterations = 100;
  double tolerance = 1e-8;  // on the change in log-likelihood
  // Coefficients beyond this magnitude are treated as diverging.
  double divergence_norm = 1e3;
  // A Newton step this large at the point where the likelihood stalls
  // means the optimum lies at infinity.
  double divergence_step = 0.05;
};

struct RegressionResult {
  std::vector<std::string> names;
  std::vector<double> coefficients;
  double intercept = 0;
  // Empty when the data are separated.
  std::vector<double> std_errors;
  std::vector<double> p_values;
  bool converged = false;
  bool separated = false;
  int iterations = 0;
  double log_likelihood = 0;

  // Wald test at level alpha; false when no p-values are available.
  bool Significant(size_t feature, double alpha = 0.01) const;
};

class LogisticError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// `x` holds one row per observation without an intercept column; labels
// are 0/1. Throws LogisticError when only one label is present or the
// design is singular.
RegressionResult FitLogistic(const Eigen::MatrixXd &x, const Eigen::VectorXd &y,
                             std::vector<std::string> names,
                             const LogisticOptions &options = {});
RegressionResult FitLogistic(const FeatureMatrix &m,
                             const LogisticOptions &options = {});

// Decision value (log-odds) of a fitted model for one feature vector.
double LogOdds(const RegressionResult &r, const std::vector<double> &x);

}  // namespace infoprop

#endif  // INFOPROP_LOGISTIC_H_
