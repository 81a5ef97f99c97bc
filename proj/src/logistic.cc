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

#include "infoprop/logistic.h"

#include <cmath>

namespace infoprop {
namespace {

// log(1 + exp(t)) without overflow.
double Log1pExp(double t) {
  return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

double LogLikelihood(const Eigen::VectorXd &eta, const Eigen::VectorXd &y) {
  double ll = 0;
  for (Eigen::Index i = 0; i < eta.size(); ++i) {
    ll += y[i] * eta[i] - Log1pExp(eta[i]);
  }
  return ll;
}

}  // namespace

bool RegressionResult::Significant(size_t feature, double alpha) const {
  return feature < p_values.size() && p_values[feature] < alpha;
}

RegressionResult FitLogistic(const Eigen::MatrixXd &x, const Eigen::VectorXd &y,
                             std::vector<std::string> names,
                             const LogisticOptions &options) {
  const Eigen::Index n = x.rows();
  const Eigen::Index k = x.cols();
  if (y.size() != n) throw LogisticError("label count does not match rows");
  const double positives = y.sum();
  if (n == 0 || positives == 0 || positives == static_cast<double>(n)) {
    throw LogisticError("logistic regression needs both labels");
  }

  Eigen::MatrixXd design(n, k + 1);
  design.col(0).setOnes();
  design.rightCols(k) = x;

  RegressionResult result;
  result.names = std::move(names);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(k + 1);
  Eigen::VectorXd eta = design * beta;
  double ll = LogLikelihood(eta, y);
  Eigen::MatrixXd hessian;

  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    result.iterations = iter;
    Eigen::VectorXd p(n), w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p[i] = 1.0 / (1.0 + std::exp(-eta[i]));
      w[i] = p[i] * (1.0 - p[i]);
    }
    hessian = design.transpose() * w.asDiagonal() * design;
    const Eigen::VectorXd gradient = design.transpose() * (y - p);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(hessian);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        ldlt.rcond() < 1e-14) {
      // Vanishing weights on a full-rank design mean the fit is running
      // off to infinity.
      if (beta.norm() > 10) {
        result.separated = true;
        break;
      }
      throw LogisticError("singular design matrix");
    }
    const Eigen::VectorXd step = ldlt.solve(gradient);
    beta += step;
    eta = design * beta;
    const double next_ll = LogLikelihood(eta, y);
    const double change = std::abs(next_ll - ll);
    ll = next_ll;
    if (beta.cwiseAbs().maxCoeff() > options.divergence_norm) {
      result.separated = true;
      break;
    }
    if (change < options.tolerance) {
      if (step.cwiseAbs().maxCoeff() > options.divergence_step) {
        result.separated = true;
      } else {
        result.converged = true;
      }
      break;
    }
  }

  result.log_likelihood = ll;
  result.intercept = beta[0];
  result.coefficients.assign(beta.data() + 1, beta.data() + k + 1);
  if (result.converged && !result.separated) {
    Eigen::VectorXd p(n), w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p[i] = 1.0 / (1.0 + std::exp(-eta[i]));
      w[i] = p[i] * (1.0 - p[i]);
    }
    hessian = design.transpose() * w.asDiagonal() * design;
    const Eigen::MatrixXd cov = hessian.inverse();
    for (Eigen::Index j = 1; j <= k; ++j) {
      const double se = std::sqrt(cov(j, j));
      result.std_errors.push_back(se);
      const double z = beta[j] / se;
      result.p_values.push_back(std::erfc(std::abs(z) / std::sqrt(2.0)));
    }
  }
  return result;
}

RegressionResult FitLogistic(const FeatureMatrix &m,
                             const LogisticOptions &options) {
  const Eigen::Index n = static_cast<Eigen::Index>(m.rows.size());
  const Eigen::Index k = static_cast<Eigen::Index>(m.columns.size());
  Eigen::MatrixXd x(n, k);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto &row = m.rows[i];
    for (Eigen::Index j = 0; j < k; ++j) x(i, j) = row.values[j];
    y[i] = row.label;
  }
  return FitLogistic(x, y, m.columns, options);
}

double LogOdds(const RegressionResult &r, const std::vector<double> &x) {
  double t = r.intercept;
  for (size_t j = 0; j < r.coefficients.size(); ++j) {
    t += r.coefficients[j] * x[j];
  }
  return t;
}

}  // namespace infoprop
