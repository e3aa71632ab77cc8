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

#include <cmath>
#include <numbers>

#include "unicomp/error.hpp"
#include "unicomp/graph.hpp"

namespace unicomp {
namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvalidArgument;
}

TEST(Graph, RingSpectrumMatchesClosedForm) {
  const int n = 7;
  const NetworkGraph g = build_graph({Topology::kRing}, n);
  EXPECT_EQ(g.edges.size(), 7u);
  for (int k = 0; k < n; ++k) {
    // Ring eigenvalues are 2 - 2 cos(2 pi k / n).
    std::vector<double> expect;
    for (int j = 0; j < n; ++j) expect.push_back(2.0 - 2.0 * std::cos(2.0 * kPi * j / n));
    std::sort(expect.begin(), expect.end());
    EXPECT_NEAR(g.eigenvalues(k), expect[k], 1e-12);
  }
  EXPECT_NEAR(g.rho2, 2.0 - 2.0 * std::cos(2.0 * kPi / n), 1e-12);
  EXPECT_NEAR(g.rho, 2.0 - 2.0 * std::cos(2.0 * kPi * 3 / n), 1e-12);
}

TEST(Graph, PathAndCompleteSpectra) {
  const NetworkGraph p = build_graph({Topology::kPath}, 3);
  EXPECT_NEAR(p.rho2, 1.0, 1e-12);
  EXPECT_NEAR(p.rho, 3.0, 1e-12);
  const NetworkGraph c = build_graph({Topology::kComplete}, 5);
  EXPECT_NEAR(c.rho2, 5.0, 1e-12);
  EXPECT_NEAR(c.rho, 5.0, 1e-12);
  EXPECT_EQ(c.edges.size(), 10u);
}

TEST(Graph, LaplacianStructure) {
  for (Topology t : {Topology::kRing, Topology::kPath, Topology::kComplete}) {
    const NetworkGraph g = build_graph({t}, 6);
    EXPECT_LT((g.laplacian - g.laplacian.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((g.laplacian * Vec::Ones(6)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(g.eigenvalues(0), 0.0, 1e-12);
    for (int k = 1; k < 6; ++k) EXPECT_GE(g.eigenvalues(k), g.eigenvalues(k - 1));
  }
}

TEST(Graph, FSatisfiesCompanionIdentities) {
  for (Topology t : {Topology::kRing, Topology::kPath, Topology::kComplete, Topology::kErdosRenyi}) {
    TopologySpec spec{t, 0.6, 3};
    const NetworkGraph g = build_graph(spec, 8);
    const Mat E = Mat::Identity(8, 8) - Mat::Constant(8, 8, 1.0 / 8);
    EXPECT_LT((g.E - E).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((g.F * g.laplacian - E).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((g.F - g.F.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    // F is positive definite.
    Eigen::SelfAdjointEigenSolver<Mat> es(g.F);
    EXPECT_GT(es.eigenvalues().minCoeff(), 0.0);
  }
}

TEST(Graph, ErdosRenyiIsSeededAndConnected) {
  const NetworkGraph a = build_graph({Topology::kErdosRenyi, 0.3, 11}, 12);
  const NetworkGraph b = build_graph({Topology::kErdosRenyi, 0.3, 11}, 12);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_GT(a.rho2, 0.0);
}

TEST(Graph, Errors) {
  EXPECT_EQ(kind_of([] { build_graph({Topology::kRing}, 2); }), ErrorKind::kInvalidTopology);
  EXPECT_EQ(kind_of([] { build_graph({Topology::kPath}, 1); }), ErrorKind::kInvalidTopology);
  EXPECT_EQ(kind_of([] { graph_from_edges(4, {{0, 1}, {2, 3}}); }), ErrorKind::kDisconnectedGraph);
  EXPECT_EQ(kind_of([] { graph_from_edges(3, {{0, 1}, {0, 1}, {1, 2}}); }), ErrorKind::kInvalidTopology);
  EXPECT_EQ(kind_of([] { graph_from_edges(3, {{0, 3}}); }), ErrorKind::kInvalidTopology);
  EXPECT_EQ(kind_of([] { parse_topology("star"); }), ErrorKind::kInvalidTopology);
  EXPECT_EQ(kind_of([] { build_graph({Topology::kErdosRenyi, 1e-9, 1}, 10); }),
            ErrorKind::kDisconnectedGraph);
}

TEST(Graph, TopologyNamesRoundTrip) {
  for (Topology t : {Topology::kRing, Topology::kPath, Topology::kComplete, Topology::kErdosRenyi})
    EXPECT_EQ(parse_topology(topology_name(t)), t);
}

TEST(Graph, MonotoneConstantsAcrossFamilies) {
  // Adding edges never decreases algebraic connectivity.
  const double path = build_graph({Topology::kPath}, 6).rho2;
  const double ring = build_graph({Topology::kRing}, 6).rho2;
  const double full = build_graph({Topology::kComplete}, 6).rho2;
  EXPECT_LE(path, ring);
  EXPECT_LE(ring, full);
}

}  // namespace
}  // namespace unicomp
