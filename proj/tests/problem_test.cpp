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

#include <gtest/gtest.h>

#include "unicomp/error.hpp"
#include "unicomp/problem.hpp"
#include "unicomp/random.hpp"

namespace unicomp {
namespace {

QuadraticProblem hand_quadratic() {
  Mat A1 = Mat::Identity(2, 2);
  Mat A2(2, 2);
  A2 << 2, 0, 0, 1;
  Vec b1(2), b2(2);
  b1 << 1, 0;
  b2 << 0, 1;
  return QuadraticProblem({A1, A2}, {b1, b2});
}

Vec random_vec(CounterRng& rng, int d, double scale = 1.0) {
  Vec x(d);
  for (int j = 0; j < d; ++j) x(j) = scale * rng.normal();
  return x;
}

TEST(Quadratic, HandInstanceOracles) {
  const QuadraticProblem p = hand_quadratic();
  // H = diag(2.5, 1), mean A^T b = (0.5, 0.5).
  EXPECT_NEAR((*p.x_star())(0), 0.2, 1e-15);
  EXPECT_NEAR((*p.x_star())(1), 0.5, 1e-15);
  EXPECT_NEAR(*p.f_star(), 0.325, 1e-15);
  EXPECT_NEAR(*p.pl_nu(), 1.0, 1e-14);
  EXPECT_NEAR(p.ell(), 4.0, 1e-14);
  EXPECT_LT(p.gradient(*p.x_star()).norm(), 1e-14);
}

TEST(Quadratic, PLInequalityHolds) {
  const ProblemPtr p = make_quadratic(5, 4, 3, 20.0);
  CounterRng rng(1, Stream::kVerify, 0, 0);
  for (int t = 0; t < 200; ++t) {
    const Vec x = random_vec(rng, 4, 3.0);
    const double lhs = 0.5 * p->gradient(x).squaredNorm();
    EXPECT_GE(lhs * (1 + 1e-12) + 1e-14, *p->pl_nu() * (p->value(x) - *p->f_star()));
  }
}

TEST(Problems, GradientsMatchFiniteDifferences) {
  const ProblemPtr ps[] = {make_quadratic(3, 5, 1, 10.0), make_nonconvex(3, 5, 1, 0.1, 15)};
  CounterRng rng(2, Stream::kVerify, 0, 0);
  for (const ProblemPtr& p : ps) {
    for (int agent = 0; agent < 3; ++agent) {
      const Vec x = random_vec(rng, 5);
      const Vec g = p->local_gradient(agent, x);
      for (int j = 0; j < 5; ++j) {
        Vec e = Vec::Zero(5);
        e(j) = 1e-6;
        const double fd = (p->local_value(agent, x + e) - p->local_value(agent, x - e)) / 2e-6;
        EXPECT_NEAR(g(j), fd, 1e-6) << p->family();
      }
    }
  }
}

TEST(Problems, SmoothnessConstantBoundsGradientVariation) {
  const ProblemPtr ps[] = {make_quadratic(4, 6, 5, 50.0), make_nonconvex(4, 6, 5, 0.2, 10)};
  CounterRng rng(3, Stream::kVerify, 0, 0);
  for (const ProblemPtr& p : ps)
    for (int t = 0; t < 100; ++t) {
      const int agent = t % 4;
      const Vec x = random_vec(rng, 6, 2.0), y = random_vec(rng, 6, 2.0);
      EXPECT_LE((p->local_gradient(agent, x) - p->local_gradient(agent, y)).norm(),
                p->ell() * (x - y).norm() * (1 + 1e-12));
    }
}

TEST(Problems, GlobalIsAgentMean) {
  const ProblemPtr p = make_nonconvex(4, 3, 8);
  const Vec x = Vec::LinSpaced(3, -1.0, 1.0);
  double f = 0;
  Vec g = Vec::Zero(3);
  for (int i = 0; i < 4; ++i) {
    f += p->local_value(i, x) / 4;
    g += p->local_gradient(i, x) / 4;
  }
  EXPECT_NEAR(p->value(x), f, 1e-15);
  EXPECT_LT((p->gradient(x) - g).norm(), 1e-15);
}

TEST(Problems, NonconvexMetadata) {
  const ProblemPtr p = make_nonconvex(3, 4, 2);
  EXPECT_EQ(p->family(), "nonconvex");
  EXPECT_FALSE(p->pl_nu().has_value());
  EXPECT_FALSE(p->f_star().has_value());
  EXPECT_EQ(p->f_low(), 0.0);
  EXPECT_GE(p->value(Vec::Zero(4)), p->f_low());
}

TEST(Problems, SeededConstruction) {
  const ProblemPtr a = make_quadratic(3, 3, 42, 5.0), b = make_quadratic(3, 3, 42, 5.0);
  const Vec x = Vec::Ones(3);
  EXPECT_EQ(a->value(x), b->value(x));
  const ProblemPtr c = make_quadratic(3, 3, 43, 5.0);
  EXPECT_NE(a->value(x), c->value(x));
}

TEST(Problems, Errors) {
  const ProblemPtr p = make_quadratic(2, 3, 1, 2.0);
  try {
    p->local_gradient(2, Vec::Zero(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIndexOutOfRange);
  }
  try {
    p->value(Vec::Zero(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  try {
    QuadraticProblem({Mat::Zero(2, 2)}, {Vec::Zero(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSingularSystem);
  }
}

TEST(Problems, GradientDescentReachesStationarity) {
  const ProblemPtr p = make_nonconvex(3, 4, 6);
  const Vec x = gradient_descent(*p, Vec::Zero(4), 1.0 / p->ell(), 1e-8, 100000);
  EXPECT_LE(p->gradient(x).norm(), 1e-8);
}

}  // namespace
}  // namespace unicomp
