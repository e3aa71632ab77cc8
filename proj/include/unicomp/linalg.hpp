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

#ifndef UNICOMP_LINALG_HPP_
#define UNICOMP_LINALG_HPP_

#include <Eigen/Dense>
#include <cmath>
#include <limits>

namespace unicomp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
// Agent-major state: row i holds agent i's vector.
using StateMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

template <typename Derived>
double p_norm(const Eigen::MatrixBase<Derived>& x, double p) {
  if (x.size() == 0) return 0.0;
  if (std::isinf(p)) return x.cwiseAbs().maxCoeff();
  if (p == 1.0) return x.cwiseAbs().sum();
  if (p == 2.0) return x.norm();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < x.size(); ++j) acc += std::pow(std::abs(x(j)), p);
  return std::pow(acc, 1.0 / p);
}

struct NormContext {
  double p = 2.0;
  int d = 1;
  double d_hat = 1.0;
  double d_tilde = 1.0;
};

NormContext make_norm_context(double p, int d);

}  // namespace unicomp

#endif  // UNICOMP_LINALG_HPP_
