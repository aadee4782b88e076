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

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/partition.hpp"
#include "core/qpoly.hpp"
#include "symfunc/sympoly.hpp"

namespace cofsieve {

/// Skew shape outer/inner. Rows and columns are 0-based internally; row i
/// occupies columns inner[i] .. outer[i]-1.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {});

  /// Parses "4,2,1/2,1" or a straight shape "4,2,1".
  static SkewShape parse(std::string_view text);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  bool is_straight() const noexcept { return inner_.empty(); }
  int num_rows() const noexcept { return outer_.length(); }
  int num_cols() const noexcept { return outer_[0]; }
  int size() const noexcept { return outer_.size() - inner_.size(); }

  int row_begin(int i) const noexcept { return inner_[i]; }
  int row_end(int i) const noexcept { return outer_[i]; }
  bool contains(int i, int j) const noexcept {
    return i >= 0 && i < num_rows() && j >= inner_[i] && j < outer_[i];
  }
  /// First and one-past-last row of column j.
  int col_begin(int j) const noexcept { return inner_conj_[j]; }
  int col_end(int j) const noexcept { return outer_conj_[j]; }
  int col_height(int j) const noexcept { return outer_conj_[j] - inner_conj_[j]; }
  std::vector<int> column_heights() const;
  int max_column_height() const;

  /// The shape n·outer / n·inner.
  SkewShape scaled(int n) const;
  /// The conjugate skew shape outer'/inner'.
  SkewShape conjugate() const;

  std::string to_string() const;
  friend bool operator==(const SkewShape& a, const SkewShape& b) {
    return a.outer_ == b.outer_ && a.inner_ == b.inner_;
  }

 private:
  Partition outer_, inner_;
  std::vector<int> outer_conj_, inner_conj_;  // padded to num_cols()
};

/// A filling of a skew shape with positive integers.
class Filling {
 public:
  Filling() = default;
  /// rows[i] lists the entries of row i left to right, skipping inner cells.
  Filling(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int at(int i, int j) const { return rows_[i][j - shape_.row_begin(i)]; }
  void set(int i, int j, int v) { rows_[i][j - shape_.row_begin(i)] = v; }

  /// Entries of column j, top to bottom.
  std::vector<int> column(int j) const;
  /// Entries of each column, sorted increasingly.
  std::vector<std::vector<int>> column_sets() const;
  int max_entry() const;

  /// Row-wise text, rows separated by '/', e.g. "21/1" (commas between
  /// entries once any entry exceeds 9).
  std::string to_string() const;
  std::string to_json() const;
  static Filling from_json(std::string_view text);

  friend bool operator==(const Filling&, const Filling&) = default;
  friend auto operator<=>(const Filling& a, const Filling& b) { return a.rows_ <=> b.rows_; }

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

bool is_cof(const Filling& f);

/// Descent cells (row, col), 0-based, in row-major order.
std::vector<std::pair<int, int>> descents(const Filling& f);
int maj(const Filling& f);
/// Occurrence counts of 1..len (len defaults to the largest entry).
Composition weight(const Filling& f, int len = 0);

/// The unique coinversion-free filling with the given column sets.
Filling from_column_sets(const SkewShape& shape, const std::vector<std::vector<int>>& sets);

/// Visits COF(shape, m) in lexicographic order of column-set sequences.
void for_each_cof(const SkewShape& shape, int m, const std::function<void(const Filling&)>& visit);
std::vector<Filling> enumerate_cof(const SkewShape& shape, int m);
/// Fillings with the given weight (value v+1 occurs content[v] times).
std::vector<Filling> enumerate_cof_content(const SkewShape& shape, const Composition& content);

/// Σ_F q^maj(F) x^F over COF(shape, m), via a column-by-column transfer.
SymPoly macdonald_e(const SkewShape& shape, int m);
/// Same polynomial by plain enumeration; kept as an independent check.
SymPoly macdonald_e_enumerated(const SkewShape& shape, int m);
/// Σ_F q^maj(F) over COF(shape, m), i.e. the specialization x_i = 1.
QPoly macdonald_e_at_ones(const SkewShape& shape, int m);

/// Straight-shape filling where inner cells of row i hold big - i (1-based i).
Filling extended_filling(const Filling& f, int big);

}  // namespace cofsieve
