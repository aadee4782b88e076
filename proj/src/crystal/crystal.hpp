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
#include <string>
#include <tuple>
#include <vector>

#include "fillings/filling.hpp"
#include "rsk_charge/rsk.hpp"

namespace cofsieve {

/// Bracket rule: every i+1 is an opening and every i a closing bracket;
/// ẽ_i turns the leftmost unmatched i+1 into i, f̃_i the rightmost unmatched
/// i into i+1. nullopt when there is no such letter.
std::optional<Word> word_e(int i, const Word& w);
std::optional<Word> word_f(int i, const Word& w);
/// Index of the letter ẽ_i / f̃_i would change.
std::optional<std::size_t> word_e_position(int i, const Word& w);
std::optional<std::size_t> word_f_position(int i, const Word& w);

/// Biletters (value, column) of a filling, sorted decreasingly on the column
/// and then on the value. The operators act on the row of values.
class CrystalBiword {
 public:
  explicit CrystalBiword(std::vector<Biletter> letters);

  const std::vector<Biletter>& letters() const noexcept { return letters_; }
  Word values_row() const;
  Word columns_row() const;
  std::string to_json() const;
  friend bool operator==(const CrystalBiword&, const CrystalBiword&) = default;

 private:
  std::vector<Biletter> letters_;
};

CrystalBiword crystal_biword(const Filling& f);

std::optional<Filling> cof_e(int i, const Filling& f);
std::optional<Filling> cof_f(int i, const Filling& f);
/// Lascoux–Schützenberger type involution swapping the multiplicities of
/// i and i+1.
Filling s_involution(int i, const Filling& f);

/// The operators on recording tableaux: act on the reading word of the
/// (semistandard) transpose and transpose back.
std::optional<Tableau> recording_e(int i, const Tableau& q);
std::optional<Tableau> recording_f(int i, const Tableau& q);

struct CrystalGraph {
  std::vector<Filling> nodes;
  std::vector<std::tuple<int, int, int>> edges;  // (u, f̃_i(u), i)

  /// Component index of every node, numbered in order of first appearance.
  std::vector<int> components() const;
  std::vector<int> component_sizes() const;
  std::string to_dot() const;
  std::string to_json() const;
};

CrystalGraph crystal_graph(const SkewShape& shape, int m);

struct EquivarianceReport {
  int checked = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// For every F and i with ẽ_i(F) defined: P is unchanged and Q moves by
/// recording_e.
EquivarianceReport rsk_equivariance_check(const SkewShape& shape, int m);

}  // namespace cofsieve
