// Copyright 2026 The cliffinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFINIT_TOOLS_CLI_SVG_HPP_
#define CLIFFINIT_TOOLS_CLI_SVG_HPP_

#include <string>
#include <vector>

namespace cli {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

std::string line_plot_svg(const std::vector<Series>& series, const std::string& x_label, const std::string& y_label);

// values[iy][ix]; NaN cells are left blank.
std::string heat_map_svg(const std::vector<double>& xs, const std::vector<double>& ys,
                         const std::vector<std::vector<double>>& values, const std::string& x_label,
                         const std::string& y_label);

}  // namespace cli

#endif  // CLIFFINIT_TOOLS_CLI_SVG_HPP_
