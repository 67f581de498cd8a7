// Copyright 2026 The Trustmax Authors.
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

#ifndef TRUSTMAX_SVG_H_
#define TRUSTMAX_SVG_H_

#include <string>
#include <vector>

namespace trustmax {

struct ChartSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool right_axis = false;  // dashed, scaled against the right axis
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::string y2_label;
  std::vector<ChartSeries> series;
};

// Self-contained SVG with axes, tick labels, polylines and a legend.
std::string RenderSvg(const LineChart& chart);

}  // namespace trustmax

#endif  // TRUSTMAX_SVG_H_
