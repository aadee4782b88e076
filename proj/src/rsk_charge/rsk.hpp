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
#include <string_view>
#include <utility>
#include <vector>

#include "core/partition.hpp"
#include "fillings/filling.hpp"

namespace cofsieve {

using Word = std::vector<int>;

struct Biletter {
  int top;
  int bottom;
  friend bool operator==(const Biletter&, const Biletter&) = default;
};

/// Two-line array sorted increasingly on top and, within equal tops,
/// decreasingly on bottom; biletters are distinct.
class BurgeWord {
 public:
  BurgeWord() = default;
  /// Sorts into canonical order; throws InvalidArgument on repeated biletters
  /// or non-positive letters.
  static BurgeWord from_biletters(std::vector<Biletter> letters);
  /// Accepts rows that must already be in canonical order.
  static BurgeWord from_rows(const Word& top, const Word& bottom);
  /// Parses JSON {"top":[...],"bottom":[...]} or two whitespace-separated
  /// lines of comma- or space-separated integers.
  static BurgeWord parse(std::string_view text);

  const std::vector<Biletter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Word top() const;
  Word bottom() const;

  std::string to_json() const;
  friend bool operator==(const BurgeWord&, const BurgeWord&) = default;

 private:
  std::vector<Biletter> letters_;
};

/// Tableau of straight shape. When `transposed` is set the transpose is
/// semistandard (recording tableaux of the RSK variant).
struct Tableau {
  std::vector<std::vector<int>> rows;
  bool transposed = false;

  Partition shape() const;
  /// Rows bottom to top, each left to right.
  Word reading_word() const;
  Tableau transpose() const;
  bool is_valid() const;
  Composition content() const;

  std::string to_string() const;  // "113/24/35/4"
  std::string to_json() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Biletter (value, column index) for every cell; columns are 1-based.
BurgeWord burge_word(const Filling& f);
/// The bottom row of burge_word(f): column indices read in value order.
Word charge_word(const Filling& f);

/// Row insertion of the bottom letters (bumping the leftmost strictly larger
/// entry), recording top letters.
std::pair<Tableau, Tableau> rsk(const BurgeWord& w);
/// Insertion of a plain word, returning P only.
Tableau insert_word(const Word& w);
/// Inverse of rsk; throws InvalidArgument for pairs outside its image.
BurgeWord rsk_inverse(const Tableau& p, const Tableau& q);

/// Σ_{i ∉ Des(σ⁻¹)} (k - i) for a permutation word of 1..k.
int charge_perm(const Word& sigma);
/// Standard subwords of a word with partition content, in extraction order.
std::vector<Word> standard_subwords(const Word& w);
int charge_word(const Word& w);
int charge_tableau(const Tableau& t);
/// charge(w · ℓ^{μ_ℓ} ⋯ 1^{μ_1}); content(w) + μ must be a partition.
int postfix_charge(const Partition& mu, const Word& w);

}  // namespace cofsieve
