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

#ifndef UNICOMP_GRAPH_HPP_
#define UNICOMP_GRAPH_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unicomp/linalg.hpp"

namespace unicomp {

enum class Topology { kRing, kPath, kComplete, kErdosRenyi };

struct TopologySpec {
  Topology kind = Topology::kRing;
  double prob = 0.5;        // Erdos-Renyi edge probability
  std::uint64_t seed = 0;   // Erdos-Renyi sampling seed
};

Topology parse_topology(const std::string& name);
std::string topology_name(Topology t);

struct NetworkGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  Mat adjacency;
  Mat laplacian;
  Vec eigenvalues;   // ascending
  Mat eigenvectors;  // columns, matching eigenvalues
  double rho = 0.0;   // largest Laplacian eigenvalue
  double rho2 = 0.0;  // smallest positive Laplacian eigenvalue
  Mat E;              // I - 11^T/n
  Mat F;              // pseudo-inverse-like companion with F L = E
};

NetworkGraph build_graph(const TopologySpec& topology, int n);
NetworkGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);
Mat build_F(const NetworkGraph& graph);

}  // namespace unicomp

#endif  // UNICOMP_GRAPH_HPP_
