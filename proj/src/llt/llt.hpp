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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fillings/filling.hpp"
#include "symfunc/sympoly.hpp"

namespace cofsieve {

/// The column 1^top / 1^bottom; its cells are rows bottom+1 .. top.
struct VStrip {
  int top = 0;
  int bottom = 0;
  int size() const noexcept { return top - bottom; }
  friend bool operator==(const VStrip&, const VStrip&) = default;
};

class VStripTuple {
 public:
  VStripTuple() = default;
  explicit VStripTuple(std::vector<VStrip> strips);
  /// "3/0,3/1,2/1,3/0" is (1³/∅, 1³/1, 1²/1, 1³/∅).
  static VStripTuple parse(std::string_view text);

  const std::vector<VStrip>& strips() const noexcept { return strips_; }
  int size() const noexcept { return static_cast<int>(strips_.size()); }
  int total_cells() const noexcept;
  std::string to_string() const;
  friend bool operator==(const VStripTuple&, const VStripTuple&) = default;

 private:
  std::vector<VStrip> strips_;
};

/// Content c - r of row `row` (1-based) of strip `strip` (0-based); every strip sits in
/// column 1, so the content is 1 - row.
int content_of_cell(const VStripTuple& nu, int strip, int row);

/// values[s][k] is the entry in row bottom+1+k of strip s; entries strictly
/// increase with the row.
struct TupleFilling {
  std::vector<std::vector<int>> values;
};

bool is_valid(const VStripTuple& nu, const TupleFilling& t);
int inv_count(const VStripTuple& nu, const TupleFilling& t);

/// Σ_T q^inv(T) x^T over fillings with entries in [m], as exponent vectors.
std::map<std::vector<int>, QPoly> llt_exponents(const VStripTuple& nu, int m);
/// The same polynomial in the monomial basis (only dominant weights are
/// visited; symmetry is a theorem, checked separately through llt_exponents).
SymPoly llt_poly(const VStripTuple& nu, int m);

/// Least inv over all fillings; entries up to the total cell count suffice.
int mininv(const VStripTuple& nu);

/// ν_j = 1^{λ_j}/1^{μ_j} for every row j and α_j = λ_j - μ_j. ColumnTooTall
/// when some column of the shape has more than two cells.
std::pair<VStripTuple, Composition> strips_from_skew(const SkewShape& shape);

struct LltReport {
  SkewShape shape;  // λ/μ
  VStripTuple strips;
  int mininv = 0;
  SymPoly e{1, Basis::Monomial};    // E_{λ'/μ'}(x; q, 0)
  SymPoly llt{1, Basis::Monomial};  // LLT_ν(x; q)
  bool theorem_ok = false;  // E = q^{-mininv} LLT
  bool charge_ok = false;   // Schur(LLT) = q^{mininv} · charge expansion of λ'/μ'
  bool ok() const noexcept { return theorem_ok && charge_ok; }
};

LltReport verify_llt_theorem(const SkewShape& shape, int m);

}  // namespace cofsieve
