// Copyright 2026 The cofsieve Authors
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

#include "core/qpoly.hpp"

namespace cofsieve {

/// Φ_e(q). Results are cached; safe to call concurrently.
const QPoly& cyclotomic(int e);

/// An element of Z[q]/Φ_e(q), i.e. an exact value at a primitive e-th root
/// of unity.
struct CyclotomicValue {
  int order = 1;
  QPoly residue;

  /// The integer c when the residue is the constant c.
  std::optional<BigInt> as_integer() const;
  bool is_integer() const { return as_integer().has_value(); }

  friend CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b);
  friend CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b);
  friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

/// f(ξ) for ξ a primitive e-th root of unity, computed as f mod Φ_e.
CyclotomicValue eval_at_unity(const QPoly& f, int e);

/// Checks the q-Lucas congruence for [n k]_q modulo Φ_d.
bool q_lucas_check(int n, int k, int d);

}  // namespace cofsieve
