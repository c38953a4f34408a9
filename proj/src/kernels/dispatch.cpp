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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ranksmooth/kernels.hpp"

namespace ranksmooth::kernels {
namespace {

Isa detect_default() {
  const auto isas = available_isas();
  Isa best = isas.back();
  if (const char* env = std::getenv("RANKSMOOTH_SIMD"); env != nullptr && *env) {
    auto requested = parse_isa(env);
    if (requested) {
      for (Isa isa : isas) {
        if (isa == *requested) return isa;
      }
    }
  }
  return best;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{&table_for(detect_default())};
  return slot;
}

std::atomic<Isa>& active_isa_slot() {
  static std::atomic<Isa> slot{detect_default()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  if (name == "neon") return Isa::kNeon;
  return std::nullopt;
}

const KernelTable& table_for(Isa isa) {
  const KernelTable* table = nullptr;
  switch (isa) {
    case Isa::kScalar: table = &detail::kScalarTable; break;
    case Isa::kAvx2: table = detail::cpu_has_avx2() ? detail::avx2_table() : nullptr; break;
    case Isa::kNeon: table = detail::neon_table(); break;
  }
  if (table == nullptr) {
    throw std::invalid_argument("kernel variant not available: " +
                                std::string(isa_name(isa)));
  }
  return *table;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> isas{Isa::kScalar};
  if (detail::avx2_table() != nullptr && detail::cpu_has_avx2()) isas.push_back(Isa::kAvx2);
  if (detail::neon_table() != nullptr) isas.push_back(Isa::kNeon);
  return isas;
}

Isa active_isa() { return active_isa_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  const KernelTable& table = table_for(isa);
  active_slot().store(&table, std::memory_order_relaxed);
  active_isa_slot().store(isa, std::memory_order_relaxed);
}

const KernelTable& active() { return *active_slot().load(std::memory_order_relaxed); }

}  // namespace ranksmooth::kernels
