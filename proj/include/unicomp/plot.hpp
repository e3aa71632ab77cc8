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

#ifndef UNICOMP_PLOT_HPP_
#define UNICOMP_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "unicomp/algorithm.hpp"

namespace unicomp {

struct Panel {
  std::string title;
  std::vector<std::pair<double, double>> points;
};

// Grid of line charts with log-scaled y axes; nonpositive values are dropped.
std::string svg_panels(const std::vector<Panel>& panels, const std::string& x_label,
                       bool log_x = false);

// f_bar, grad_sq, consensus and e5 against k (by_bits = false) or bits_cum.
std::string trace_svg(const RunTrace& trace, bool by_bits);

}  // namespace unicomp

#endif  // UNICOMP_PLOT_HPP_
