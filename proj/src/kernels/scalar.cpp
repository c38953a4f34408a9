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

#include "ranksmooth/kernels.hpp"

#include <cmath>

namespace ranksmooth::kernels {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double l1_distance_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

void scale_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void blend_scalar(double alpha, const double* local, const double* global,
                  double* out, std::size_t n) {
  const double beta = 1.0 - alpha;
  for (std::size_t i = 0; i < n; ++i) {
    const double l = alpha * local[i];
    const double g = beta * global[i];
    out[i] = l + g;
  }
}

}  // namespace

namespace detail {
const KernelTable kScalarTable = {axpy_scalar, sum_scalar, l1_distance_scalar,
                                  scale_scalar, blend_scalar};
}  // namespace detail

}  // namespace ranksmooth::kernels
