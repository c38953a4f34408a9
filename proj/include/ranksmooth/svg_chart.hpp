// Copyright 2026 The ranksmooth Authors.
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

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ranksmooth::svg {

struct Series {
  std::string name;
  std::vector<double> xs;
  std::vector<double> ys;
  // Index of the point to mark with a cross.
  std::optional<std::size_t> marker;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Standalone SVG document. Each marker is emitted as
// <g class="optimum" data-series=".." data-x=".." data-y=".."> with the
// exact data coordinates in round-trip form.
std::string render(const LineChart& chart);

std::string escape(const std::string& text);

}  // namespace ranksmooth::svg
