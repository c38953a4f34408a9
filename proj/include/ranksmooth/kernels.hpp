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

// Dense double-precision kernels used by the inner loops of the library
// (power iteration, target blending, reductions). Each kernel has a scalar
// reference implementation and optional SIMD variants; the variant is chosen
// once at runtime from CPU features and can be overridden with the
// RANKSMOOTH_SIMD environment variable (scalar, avx2, neon).
//
// Elementwise kernels (blend, scale) are bit-identical across variants.
// axpy may use fused multiply-add and reductions reassociate, so those agree
// with the scalar reference only to rounding.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ranksmooth::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

struct KernelTable {
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  // sum |a_i - b_i|
  double (*l1_distance)(const double* a, const double* b, std::size_t n);
  // x *= a
  void (*scale)(double a, double* x, std::size_t n);
  // out = alpha * local + (1 - alpha) * global
  void (*blend)(double alpha, const double* local, const double* global,
                double* out, std::size_t n);
};

const KernelTable& table_for(Isa isa);

// ISAs this binary was built with and the running CPU supports.
std::vector<Isa> available_isas();

// Currently selected ISA. Defaults to the widest available one unless
// RANKSMOOTH_SIMD names another available ISA.
Isa active_isa();
void set_active_isa(Isa isa);

const KernelTable& active();

inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline double sum(std::span<const double> x) {
  return active().sum(x.data(), x.size());
}
inline double l1_distance(std::span<const double> a, std::span<const double> b) {
  return active().l1_distance(a.data(), b.data(), a.size());
}
inline void scale(double a, std::span<double> x) {
  active().scale(a, x.data(), x.size());
}
inline void blend(double alpha, std::span<const double> local,
                  std::span<const double> global, std::span<double> out) {
  active().blend(alpha, local.data(), global.data(), out.data(), out.size());
}

namespace detail {
extern const KernelTable kScalarTable;
// Null entries when the variant is not compiled for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();
bool cpu_has_avx2();
}  // namespace detail

}  // namespace ranksmooth::kernels
