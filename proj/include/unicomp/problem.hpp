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

#ifndef UNICOMP_PROBLEM_HPP_
#define UNICOMP_PROBLEM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unicomp/linalg.hpp"

namespace unicomp {

class Problem {
 public:
  virtual ~Problem() = default;

  int n() const { return n_; }
  int d() const { return d_; }
  double ell() const { return ell_; }
  double f_low() const { return f_low_; }
  const std::optional<double>& pl_nu() const { return pl_nu_; }
  const std::optional<double>& f_star() const { return f_star_; }
  const std::optional<Vec>& x_star() const { return x_star_; }
  virtual std::string family() const = 0;

  double local_value(int agent, const Vec& x) const;
  Vec local_gradient(int agent, const Vec& x) const;
  // Global objective f = (1/n) sum_i f_i and its gradient.
  double value(const Vec& x) const;
  Vec gradient(const Vec& x) const;

 protected:
  Problem(int n, int d) : n_(n), d_(d) {}
  virtual double value_impl(int agent, const Vec& x) const = 0;
  virtual Vec gradient_impl(int agent, const Vec& x) const = 0;

  int n_;
  int d_;
  double ell_ = 1.0;
  double f_low_ = 0.0;
  std::optional<double> pl_nu_;
  std::optional<double> f_star_;
  std::optional<Vec> x_star_;
};

using ProblemPtr = std::shared_ptr<const Problem>;

// f_i(x) = 0.5 ||A_i x - b_i||^2
class QuadraticProblem : public Problem {
 public:
  QuadraticProblem(std::vector<Mat> A, std::vector<Vec> b);
  std::string family() const override { return "quadratic"; }
  const Mat& A(int i) const { return A_[i]; }
  const Vec& b(int i) const { return b_[i]; }

 private:
  double value_impl(int agent, const Vec& x) const override;
  Vec gradient_impl(int agent, const Vec& x) const override;
  std::vector<Mat> A_;
  std::vector<Vec> b_;
};

// f_i(x) = (1/m) sum_j log(1 + exp(-y_j a_j^T x)) + lambda sum_l x_l^2 / (1 + x_l^2)
class LogisticProblem : public Problem {
 public:
  LogisticProblem(std::vector<Mat> features, std::vector<Vec> labels, double lambda);
  std::string family() const override { return "nonconvex"; }
  double lambda() const { return lambda_; }

 private:
  double value_impl(int agent, const Vec& x) const override;
  Vec gradient_impl(int agent, const Vec& x) const override;
  std::vector<Mat> features_;  // m x d per agent
  std::vector<Vec> labels_;    // entries in {-1, +1}
  double lambda_;
};

ProblemPtr make_quadratic(int n, int d, std::uint64_t seed, double condition_number);
ProblemPtr make_nonconvex(int n, int d, std::uint64_t seed, double lambda = 0.1,
                          int samples_per_agent = 20);

// Centralized gradient descent from x0; used as a stationarity reference.
Vec gradient_descent(const Problem& problem, Vec x0, double step, double grad_tol,
                     long max_iter);

}  // namespace unicomp

#endif  // UNICOMP_PROBLEM_HPP_
