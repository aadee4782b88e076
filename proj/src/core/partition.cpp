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

#include "core/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "core/error.hpp"

namespace cofsieve {

const char* error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NonSymmetricInput: return "NonSymmetricInput";
    case ErrorKind::MixedParameters: return "MixedParameters";
    case ErrorKind::NoValidFilling: return "NoValidFilling";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::NonPartitionContent: return "NonPartitionContent";
    case ErrorKind::ContentMismatch: return "ContentMismatch";
    case ErrorKind::ShapeNotDivisible: return "ShapeNotDivisible";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::ColumnTooTall: return "ColumnTooTall";
    case ErrorKind::TooFewVariables: return "TooFewVariables";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Error";
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto tok = trim(text.substr(pos, comma == std::string_view::npos
                                         ? std::string_view::npos
                                         : comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      fail(ErrorKind::Parse, "expected an integer, got '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      fail(ErrorKind::NotAPartition, "parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      fail(ErrorKind::NotAPartition, "parts must be weakly decreasing: " + to_string());
  }
}

Partition Partition::parse(std::string_view text) {
  try {
    return Partition(parse_int_list(text));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAPartition) fail(ErrorKind::Parse, e.what());
    throw;
  }
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

Partition Partition::scaled(int n) const {
  if (n < 1) fail(ErrorKind::InvalidArgument, "scale factor must be positive");
  std::vector<int> out(parts_);
  for (int& p : out) p *= n;
  return Partition(std::move(out));
}

int Partition::mult_count(int j) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

bool Partition::dominates(const Partition& other) const noexcept {
  int a = 0, b = 0;
  const auto n = std::max(parts_.size(), other.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return a == b;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string Partition::to_bracket_string() const { return "[" + to_string() + "]"; }

Composition Composition::parse(std::string_view text) {
  Composition c{parse_int_list(text)};
  for (int p : c.parts)
    if (p < 0) fail(ErrorKind::Parse, "composition parts must be non-negative");
  return c;
}

int Composition::size() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Partition Composition::sorted() const {
  std::vector<int> p(parts);
  std::sort(p.begin(), p.end(), std::greater<>());
  return Partition(std::move(p));
}

bool Composition::is_partition() const noexcept {
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > parts[i - 1]) return false;
  return true;
}

std::string Composition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_len) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Composition> weak_compositions(int n, int k) {
  std::vector<Composition> out;
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur(k, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == k - 1) {
      cur[i] = left;
      out.push_back({cur});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace cofsieve
