// Copyright 2026 The unicomp Authors. All Rights Reserved.
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

#include "unicomp/problem.hpp"

#include <cmath>

#include "unicomp/error.hpp"
#include "unicomp/random.hpp"

namespace unicomp {
namespace {

Mat random_orthogonal(CounterRng& rng, int d) {
  Mat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  // Fix column signs so the factor is a deterministic function of g.
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

double log1p_exp_neg(double z) {
  // log(1 + exp(-z))
  return z > 0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
}

double sigmoid_neg(double z) {
  // 1 / (1 + exp(z))
  if (z >= 0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

double spectral_radius_sym(const Mat& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  require(es.info() == Eigen::Success, ErrorKind::kNumericalFailure, "eigen solve failed");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

double Problem::local_value(int agent, const Vec& x) const {
  require(agent >= 0 && agent < n_, ErrorKind::kIndexOutOfRange, "agent index out of range");
  require(x.size() == d_, ErrorKind::kDimensionMismatch, "point has wrong dimension");
  return value_impl(agent, x);
}

Vec Problem::local_gradient(int agent, const Vec& x) const {
  require(agent >= 0 && agent < n_, ErrorKind::kIndexOutOfRange, "agent index out of range");
  require(x.size() == d_, ErrorKind::kDimensionMismatch, "point has wrong dimension");
  return gradient_impl(agent, x);
}

double Problem::value(const Vec& x) const {
  require(x.size() == d_, ErrorKind::kDimensionMismatch, "point has wrong dimension");
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += value_impl(i, x);
  return acc / n_;
}

Vec Problem::gradient(const Vec& x) const {
  require(x.size() == d_, ErrorKind::kDimensionMismatch, "point has wrong dimension");
  Vec g = Vec::Zero(d_);
  for (int i = 0; i < n_; ++i) g += gradient_impl(i, x);
  return g / n_;
}

QuadraticProblem::QuadraticProblem(std::vector<Mat> A, std::vector<Vec> b)
    : Problem(static_cast<int>(A.size()), A.empty() ? 0 : static_cast<int>(A[0].cols())),
      A_(std::move(A)),
      b_(std::move(b)) {
  require(n_ >= 1 && d_ >= 1, ErrorKind::kInvalidArgument, "empty quadratic instance");
  require(b_.size() == A_.size(), ErrorKind::kDimensionMismatch, "A and b counts differ");
  Mat H = Mat::Zero(d_, d_);
  Vec rhs = Vec::Zero(d_);
  ell_ = 0.0;
  for (int i = 0; i < n_; ++i) {
    require(A_[i].cols() == d_ && A_[i].rows() == b_[i].size(), ErrorKind::kDimensionMismatch,
            "inconsistent quadratic block sizes");
    const Mat AtA = A_[i].transpose() * A_[i];
    ell_ = std::max(ell_, spectral_radius_sym(AtA));
    H += AtA;
    rhs += A_[i].transpose() * b_[i];
  }
  H /= n_;
  rhs /= n_;
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  require(es.info() == Eigen::Success, ErrorKind::kNumericalFailure, "eigen solve failed");
  const double lmin = es.eigenvalues()(0);
  const double lmax = es.eigenvalues()(d_ - 1);
  require(lmin > 1e-12 * std::max(1.0, lmax), ErrorKind::kSingularSystem,
          "aggregate Hessian is singular");
  pl_nu_ = lmin;
  x_star_ = H.ldlt().solve(rhs);
  f_star_ = value(*x_star_);
  f_low_ = 0.0;
}

double QuadraticProblem::value_impl(int agent, const Vec& x) const {
  return 0.5 * (A_[agent] * x - b_[agent]).squaredNorm();
}

Vec QuadraticProblem::gradient_impl(int agent, const Vec& x) const {
  return A_[agent].transpose() * (A_[agent] * x - b_[agent]);
}

LogisticProblem::LogisticProblem(std::vector<Mat> features, std::vector<Vec> labels,
                                 double lambda)
    : Problem(static_cast<int>(features.size()),
              features.empty() ? 0 : static_cast<int>(features[0].cols())),
      features_(std::move(features)),
      labels_(std::move(labels)),
      lambda_(lambda) {
  require(n_ >= 1 && d_ >= 1, ErrorKind::kInvalidArgument, "empty logistic instance");
  require(labels_.size() == features_.size(), ErrorKind::kDimensionMismatch,
          "feature and label counts differ");
  require(lambda_ >= 0.0, ErrorKind::kInvalidArgument, "lambda must be nonnegative");
  ell_ = 0.0;
  for (int i = 0; i < n_; ++i) {
    const Mat& a = features_[i];
    require(a.cols() == d_ && a.rows() == labels_[i].size() && a.rows() >= 1,
            ErrorKind::kDimensionMismatch, "inconsistent logistic block sizes");
    const double m = static_cast<double>(a.rows());
    ell_ = std::max(ell_, 0.25 * spectral_radius_sym(a.transpose() * a / m) + 2.0 * lambda_);
  }
  f_low_ = 0.0;
}

double LogisticProblem::value_impl(int agent, const Vec& x) const {
  const Mat& a = features_[agent];
  const Vec& y = labels_[agent];
  const Vec z = a * x;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) acc += log1p_exp_neg(y(j) * z(j));
  acc /= static_cast<double>(z.size());
  for (Eigen::Index l = 0; l < x.size(); ++l) acc += lambda_ * x(l) * x(l) / (1.0 + x(l) * x(l));
  return acc;
}

Vec LogisticProblem::gradient_impl(int agent, const Vec& x) const {
  const Mat& a = features_[agent];
  const Vec& y = labels_[agent];
  const Vec z = a * x;
  Vec w(z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) w(j) = -y(j) * sigmoid_neg(y(j) * z(j));
  Vec g = a.transpose() * w / static_cast<double>(z.size());
  for (Eigen::Index l = 0; l < x.size(); ++l) {
    const double t = 1.0 + x(l) * x(l);
    g(l) += lambda_ * 2.0 * x(l) / (t * t);
  }
  return g;
}

ProblemPtr make_quadratic(int n, int d, std::uint64_t seed, double condition_number) {
  require(n >= 1 && d >= 1, ErrorKind::kInvalidArgument, "n and d must be positive");
  require(condition_number >= 1.0, ErrorKind::kInvalidArgument,
          "condition number must be at least 1");
  std::vector<Mat> A;
  std::vector<Vec> b;
  for (int i = 0; i < n; ++i) {
    CounterRng rng(seed, Stream::kProblem, static_cast<std::uint64_t>(i), 0);
    const Mat U = random_orthogonal(rng, d);
    const Mat V = random_orthogonal(rng, d);
    Vec sigma(d);
    for (int j = 0; j < d; ++j) {
      const double t = d > 1 ? static_cast<double>(j) / (d - 1) : 0.0;
      sigma(j) = std::pow(condition_number, -0.5 * t);
    }
    A.push_back(U * sigma.asDiagonal() * V.transpose());
    Vec bi(d);
    for (int j = 0; j < d; ++j) bi(j) = rng.normal();
    b.push_back(bi);
  }
  return std::make_shared<QuadraticProblem>(std::move(A), std::move(b));
}

ProblemPtr make_nonconvex(int n, int d, std::uint64_t seed, double lambda,
                          int samples_per_agent) {
  require(n >= 1 && d >= 1 && samples_per_agent >= 1, ErrorKind::kInvalidArgument,
          "n, d and m must be positive");
  CounterRng teacher_rng(seed, Stream::kProblem, 0, 1);
  Vec teacher(d);
  for (int j = 0; j < d; ++j) teacher(j) = teacher_rng.normal();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Mat> features;
  std::vector<Vec> labels;
  for (int i = 0; i < n; ++i) {
    CounterRng rng(seed, Stream::kProblem, static_cast<std::uint64_t>(i), 2);
    Vec shift(d);
    for (int j = 0; j < d; ++j) shift(j) = 0.5 * rng.normal();
    Mat a(samples_per_agent, d);
    Vec y(samples_per_agent);
    for (int s = 0; s < samples_per_agent; ++s) {
      for (int j = 0; j < d; ++j) a(s, j) = scale * (rng.normal() + shift(j));
      const double margin = a.row(s).dot(teacher) + 0.5 * rng.normal();
      y(s) = margin >= 0 ? 1.0 : -1.0;
    }
    features.push_back(a);
    labels.push_back(y);
  }
  return std::make_shared<LogisticProblem>(std::move(features), std::move(labels), lambda);
}

Vec gradient_descent(const Problem& problem, Vec x0, double step, double grad_tol,
                     long max_iter) {
  for (long it = 0; it < max_iter; ++it) {
    const Vec g = problem.gradient(x0);
    if (g.norm() <= grad_tol) break;
    x0 -= step * g;
  }
  return x0;
}

}  // namespace unicomp
