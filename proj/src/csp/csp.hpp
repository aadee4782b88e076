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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/cyclotomic.hpp"
#include "core/qpoly.hpp"
#include "fillings/filling.hpp"

namespace cofsieve {

/// Rotates the column sets of every block of n consecutive columns one step
/// to the right and rebuilds the filling. Requires equal column heights inside
/// each block (ShapeNotDivisible otherwise).
Filling phi(const Filling& f, int n);

/// Orbits of φ on COF(shape, m) (or on the fillings of the given content),
/// each listed from its least element in enumeration order; orbits are
/// ordered by their least elements.
std::vector<std::vector<Filling>> orbits(const SkewShape& shape, int n, int m,
                                         const std::optional<Composition>& content = {});

/// Number of fillings fixed by φ^d, counted block by block: the fixed
/// fillings are listed as tuples of column sets invariant under rotating each
/// block by d. With `content` only tuples of that weight are counted.
BigInt count_fixed_by_blocks(const SkewShape& shape, int n, int d, int m,
                             const std::optional<Composition>& content = {});

/// The same count for every weight at once, keyed by exponent vectors of
/// length m.
std::map<std::vector<int>, BigInt> fixed_counts_by_weight(const SkewShape& shape, int n, int d,
                                                          int m);

struct CspCheck {
  int d = 0;
  BigInt fixed;
  CyclotomicValue f_at_root;
  bool ok = false;
};

struct LyndonCheck {
  int d = 0;          // divisor of n
  BigInt smaller;     // f_{n/d}(1)
  CyclotomicValue f_at_root;  // f_n at a primitive d-th root
  bool ok = false;
};

struct CspReport {
  std::string action = "phi";
  std::string shape;
  int n = 1;
  int m = 0;
  std::optional<Composition> content;
  QPoly poly;
  /// For the σ action: the polynomial before dividing out its lowest power
  /// of q, and whether it alone would have satisfied every check.
  std::optional<QPoly> unnormalized;
  bool unnormalized_ok = true;
  std::string method;  // "orbits" or "blocks"
  bool applicable = true;
  std::string note;
  std::vector<CspCheck> checks;
  std::vector<LyndonCheck> lyndon;

  bool pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Fixed points of φ^d on COF(shape, m) (of the given content) against
/// poly(ξ^d) for d = 1..n, ξ a primitive n-th root of unity. Fixed points are
/// found from the orbits when the set is small and block by block otherwise.
CspReport verify_csp(const SkewShape& shape, int n, int m, const std::optional<Composition>& content,
                     const QPoly& poly);

/// COF(nλ/nμ, m) with f = E_{nλ/nμ}(1^m; q, 0), including the Lyndon-like
/// comparison with the (n/d)-instances for every d | n.
CspReport macdonald_csp_suite(const SkewShape& base, int n, int m);

/// Fillings of nλ of weight ν with f = [m_{sort ν}] E_{nλ}.
CspReport refined_csp_suite(const SkewShape& base, int n, const Composition& nu);

/// Every weight with at most m parts at once; returns the failing weights.
std::vector<Composition> refined_csp_sweep(const SkewShape& base, int n, int m);

/// 0/1 matrix; entry (i, j) is 1 when column j of the filling holds i+1.
struct BinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<int>> entries;

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;
  /// Rotates each block of n columns one step to the right.
  BinaryMatrix rotate_blocks(int n) const;
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;
};

BinaryMatrix filling_to_matrix(const Filling& f, int rows);
/// ContentMismatch unless the column sums are the column heights of shape.
Filling matrix_to_filling(const BinaryMatrix& m, const SkewShape& shape);

/// A permutation of [m] in one-line notation: sigma[i-1] is the image of i.
using Permutation = std::vector<int>;
/// Accepts cycle notation "(1234567)", "(1,2)(3,4)" or one-line "2,3,1";
/// `m` pads cycle notation with fixed points.
Permutation parse_permutation(const std::string& text, int m);
int permutation_order(const Permutation& sigma);
/// Nearly free: all cycles have the same length except at most one fixed point.
bool acts_nearly_freely(const Permutation& sigma);

/// Relabels entries by sigma and rebuilds from the column sets.
Filling sigma_action(const Filling& f, const Permutation& sigma);

/// CSP for ⟨σ⟩ on COF(λ, m). The polynomial is E_λ(1, q, …, q^{m-1}; 1, 0)
/// divided by its lowest power of q, which is ∏_j [m, λ'_j]_q; the raw
/// specialization carries a factor q^{Σ C(λ'_j, 2)} that can break the
/// comparison (λ = (1,1), σ = (12)). When σ does not act nearly freely the
/// comparison is still carried out, but the report is marked not applicable.
CspReport sigma_csp_suite(const SkewShape& shape, int m, const Permutation& sigma);

/// Exponent e_j of C(m, j) in E_{nμ}(1^m; ξ^d, 0) = ∏_j C(m, j)^{e_j}, d | n.
std::map<int, int> unity_exponents(const Partition& mu, int d);
BigInt unity_formula(const Partition& mu, int n, int d, int m);

}  // namespace cofsieve
