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

#include <utility>
#include <vector>

#include "core/partition.hpp"
#include "core/qpoly.hpp"
#include "symfunc/sympoly.hpp"

namespace cofsieve {

/// K_{λμ}(q) = Σ_{T ∈ SSYT(λ,μ)} q^{charge(T)}. SizeMismatch when |λ| ≠ |μ|.
QPoly kostka_foulkes(const Partition& lambda, const Partition& mu);
/// Weak composition content is sorted first; Kostka coefficients are
/// symmetric in the content.
QPoly kostka_foulkes(const Partition& lambda, const Composition& mu);

/// Q'_μ(x;q) = Σ_λ K_{λμ}(q) s_λ in the Schur basis. Keys longer than m are
/// kept formally.
SymPoly transformed_hl(const Partition& mu, int m);

/// to_schur(E_λ(x;q,0)) == ω Q'_{λ'} in m variables. Needs m ≥ ℓ(λ)
/// (TooFewVariables otherwise).
bool verify_e_as_hl(const Partition& lambda, int m);

struct RefinedCoefficient {
  QPoly lhs;  // [m_ν] E_λ, summed over fillings
  QPoly rhs;  // Σ_μ K_{μν}(1) K_{μ'λ'}(q)
  bool ok() const { return lhs == rhs; }
};
RefinedCoefficient refined_coefficient(const Partition& lambda, const Composition& nu);
bool refined_coefficient_check(const Partition& lambda, const Composition& nu);

/// Every coefficient reduced modulo Φ_d, i.e. the polynomial at q = ξ for a
/// primitive d-th root of unity ξ.
SymPoly reduce_at_unity(const SymPoly& f, int d);

/// The data of the factorization at a primitive d-th root of unity:
/// m_j(λ) = d·m'_j + r_j, λ̃ = (1^{r_1} 2^{r_2} …) and the rectangles (j^d)
/// with multiplicity m'_j.
struct HlFactorization {
  Partition lambda;
  int d = 1;
  Partition tilde;
  std::vector<std::pair<Partition, int>> rectangles;
  SymPoly lhs{1, Basis::Monomial};  // Q'_λ(x;ξ)
  SymPoly rhs{1, Basis::Monomial};  // Q'_λ̃(x;ξ) ∏ Q'_{(j^d)}(x;ξ)^{m'_j}
  bool ok() const { return lhs == rhs; }
};
HlFactorization hl_root_factorization(const Partition& lambda, int d, int m);

/// Q'_{k^n}(x;ξ) == (-1)^{k(n-1)} p_n[h_k] for ξ a primitive n-th root.
bool hl_rectangle_check(int k, int n, int m);

/// Both of the above.
bool hl_root_factorization_check(const Partition& lambda, int d, int m);

}  // namespace cofsieve
