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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace cofsieve {

/// Integer partition. Trailing zeros are stripped on construction; any other
/// non-increasing or negative input is rejected rather than sorted.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Parses `4,2,1`. The empty string and `0` both denote the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept;

  /// Part i (0-based); zero past the end.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  Partition conjugate() const;
  Partition scaled(int n) const;
  int mult_count(int j) const noexcept;

  /// Dominance order on partitions of the same size.
  bool dominates(const Partition& other) const noexcept;

  std::string to_string() const;  // "4,2,1"
  std::string to_bracket_string() const;  // "[4,2,1]"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// Weak composition: non-negative parts, zeros allowed anywhere.
struct Composition {
  std::vector<int> parts;

  static Composition parse(std::string_view text);

  int size() const noexcept;
  int length() const noexcept { return static_cast<int>(parts.size()); }
  int operator[](std::size_t i) const noexcept {
    return i < parts.size() ? parts[i] : 0;
  }
  /// The partition obtained by sorting the parts decreasingly.
  Partition sorted() const;
  bool is_partition() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// All partitions of n with at most max_len parts.
std::vector<Partition> partitions_of(int n, int max_len);

/// All weak compositions of n into exactly k parts, lexicographic order.
std::vector<Composition> weak_compositions(int n, int k);

/// Parses a comma separated list of integers (whitespace tolerated).
std::vector<int> parse_int_list(std::string_view text);

}  // namespace cofsieve
