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

#include <string>
#include <vector>

#include "fillings/filling.hpp"
#include "symfunc/sympoly.hpp"

namespace cofsieve {

/// Column lengths of a skew shape, α_j = λ'_j - μ'_j.
Composition column_content(const SkewShape& shape);

/// Σ_{T ∈ SSYT(ν, α)} q^{charge_{μ'}(rw T)}.
QPoly kq_coefficient(const SkewShape& shape, const Partition& nu);

/// Σ_ν K^ν(q) s_{ν'}, in the Schur basis with m variables
/// (m defaults to the number of cells).
SymPoly schur_expansion_via_charge(const SkewShape& shape, int m = 0);

struct LrCheckRow {
  Partition nu;
  QPoly coefficient;
  BigInt lr_coefficient;  // c^λ_{μ ν'} by multiplying Schur polynomials
  BigInt kostka;          // K_{ν α}
  bool ok = false;
};

/// For every ν: constant term of K^ν equals c^λ_{μν'} and K^ν(1) = K_{να}.
std::vector<LrCheckRow> lr_checks(const SkewShape& shape);

/// E_λ · E_μ equals the expansion of the skew shape (λ + c^r, μ)/c^r with
/// c = μ_1 and r = ℓ(λ), compared in |λ|+|μ| variables.
bool product_check(const Partition& lambda, const Partition& mu);

/// Σ_{σ ∈ S_n} q^{charge_{μ'}(σ)} against n!·∏[λ_i-μ_i]_q!/(λ_i-μ_i)! where
/// λ'_j = μ'_j + 1 for j <= n and λ'_j = μ'_j beyond.
struct MahonianResult {
  QPoly lhs, rhs;
  Partition lambda;
  bool ok = false;
};
MahonianResult mahonian_check(const Partition& mu, int n);

}  // namespace cofsieve
