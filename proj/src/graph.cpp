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

#include "unicomp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "unicomp/error.hpp"
#include "unicomp/random.hpp"

namespace unicomp {
namespace {

constexpr double kResidualTol = 1e-10;
constexpr int kMaxResample = 100;

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int count = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int w : adj[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        frontier.push(w);
      }
    }
  }
  return count == n;
}

std::vector<std::pair<int, int>> sample_erdos_renyi(int n, double prob,
                                                    std::uint64_t seed,
                                                    int attempt) {
  CounterRng rng(seed, Stream::kGraph, 0, static_cast<std::uint64_t>(attempt));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform() < prob) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

Topology parse_topology(const std::string& name) {
  if (name == "ring") return Topology::kRing;
  if (name == "path") return Topology::kPath;
  if (name == "complete") return Topology::kComplete;
  if (name == "erdos_renyi" || name == "er") return Topology::kErdosRenyi;
  fail(ErrorKind::kInvalidTopology, "unknown topology '" + name + "'");
}

std::string topology_name(Topology t) {
  switch (t) {
    case Topology::kRing: return "ring";
    case Topology::kPath: return "path";
    case Topology::kComplete: return "complete";
    case Topology::kErdosRenyi: return "erdos_renyi";
  }
  return "unknown";
}

NetworkGraph build_graph(const TopologySpec& topology, int n) {
  require(n >= 2, ErrorKind::kInvalidTopology, "graph needs at least 2 agents");
  std::vector<std::pair<int, int>> edges;
  switch (topology.kind) {
    case Topology::kRing:
      require(n >= 3, ErrorKind::kInvalidTopology, "ring needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n),
                                                     std::max(i, (i + 1) % n));
      break;
    case Topology::kPath:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Topology::kComplete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Topology::kErdosRenyi: {
      require(topology.prob > 0.0 && topology.prob <= 1.0,
              ErrorKind::kInvalidTopology, "edge probability must lie in (0, 1]");
      bool ok = false;
      for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        edges = sample_erdos_renyi(n, topology.prob, topology.seed, attempt);
        if (is_connected(n, edges)) {
          ok = true;
          break;
        }
      }
      require(ok, ErrorKind::kDisconnectedGraph,
              "no connected Erdos-Renyi sample in 100 attempts");
      break;
    }
  }
  return graph_from_edges(n, edges);
}

NetworkGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  require(n >= 2, ErrorKind::kInvalidTopology, "graph needs at least 2 agents");
  NetworkGraph g;
  g.n = n;
  g.adjacency = Mat::Zero(n, n);
  for (auto [a, b] : edges) {
    require(a >= 0 && b >= 0 && a < n && b < n && a != b,
            ErrorKind::kInvalidTopology, "edge endpoint out of range or self loop");
    require(g.adjacency(a, b) == 0.0, ErrorKind::kInvalidTopology, "duplicate edge");
    g.adjacency(a, b) = g.adjacency(b, a) = 1.0;
    g.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  require(is_connected(n, g.edges), ErrorKind::kDisconnectedGraph, "graph is disconnected");
  g.laplacian = Mat(g.adjacency.rowwise().sum().asDiagonal()) - g.adjacency;

  Eigen::SelfAdjointEigenSolver<Mat> solver(g.laplacian);
  require(solver.info() == Eigen::Success, ErrorKind::kNumericalFailure,
          "Laplacian eigendecomposition failed");
  g.eigenvalues = solver.eigenvalues();
  g.eigenvectors = solver.eigenvectors();
  for (int k = 0; k < n; ++k) {
    double res = (g.laplacian * g.eigenvectors.col(k) -
                  g.eigenvalues(k) * g.eigenvectors.col(k)).cwiseAbs().maxCoeff();
    require(res <= kResidualTol, ErrorKind::kNumericalFailure,
            "eigenpair residual above tolerance");
  }
  g.rho = g.eigenvalues(n - 1);
  g.rho2 = g.eigenvalues(1);
  require(g.rho2 > kResidualTol, ErrorKind::kDisconnectedGraph, "algebraic connectivity is zero");
  g.E = Mat::Identity(n, n) - Mat::Constant(n, n, 1.0 / n);
  g.F = build_F(g);
  return g;
}

Mat build_F(const NetworkGraph& graph) {
  const int n = graph.n;
  Vec q = Vec::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  Mat F = (q * q.transpose()) / graph.rho2;
  for (int k = 1; k < n; ++k) {
    const auto col = graph.eigenvectors.col(k);
    F += (col * col.transpose()) / graph.eigenvalues(k);
  }
  Mat Fs = 0.5 * (F + F.transpose());
  double res = (Fs * graph.laplacian - graph.E).cwiseAbs().maxCoeff();
  require(res <= kResidualTol, ErrorKind::kNumericalFailure, "F L deviates from E");
  return Fs;
}

}  // namespace unicomp
