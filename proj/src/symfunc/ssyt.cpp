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

#include "symfunc/ssyt.hpp"

#include <map>
#include <mutex>

#include "core/error.hpp"

namespace cofsieve {
namespace {

// All ways to grow `cur` (padded to outer's length) by a horizontal strip of
// exactly `size` cells while staying inside `outer`.
void horizontal_strips(const std::vector<int>& cur, const std::vector<int>& outer,
                       int size, const std::function<void(const std::vector<int>&)>& out) {
  std::vector<int> next(cur);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == cur.size()) {
      if (left == 0) out(next);
      return;
    }
    int hi = outer[i];
    if (i > 0) hi = std::min(hi, cur[i - 1]);
    for (int v = cur[i]; v <= hi && v - cur[i] <= left; ++v) {
      next[i] = v;
      rec(i + 1, left - (v - cur[i]));
    }
    next[i] = cur[i];
  };
  rec(0, size);
}

std::vector<int> padded(const Partition& p, std::size_t len) {
  std::vector<int> v(len, 0);
  for (std::size_t i = 0; i < len; ++i) v[i] = p[i];
  return v;
}

void check_skew(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length())
    fail(ErrorKind::InvalidArgument, "inner shape not contained in outer shape");
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i])
      fail(ErrorKind::InvalidArgument, "inner shape not contained in outer shape");
}

}  // namespace

void for_each_ssyt(const Partition& outer, const Partition& inner,
                   const std::vector<int>& content,
                   const std::function<void(const TableauRows&)>& visit) {
  check_skew(outer, inner);
  int total = 0;
  for (int c : content) total += c;
  if (total != outer.size() - inner.size()) return;
  const std::size_t len = outer.length();
  const auto out = padded(outer, len);
  TableauRows rows(len);
  std::function<void(std::size_t, const std::vector<int>&)> rec =
      [&](std::size_t v, const std::vector<int>& cur) {
        if (v == content.size()) {
          visit(rows);
          return;
        }
        horizontal_strips(cur, out, content[v], [&](const std::vector<int>& next) {
          for (std::size_t i = 0; i < len; ++i)
            rows[i].insert(rows[i].end(), next[i] - cur[i], static_cast<int>(v) + 1);
          rec(v + 1, next);
          for (std::size_t i = 0; i < len; ++i) rows[i].resize(rows[i].size() - (next[i] - cur[i]));
        });
      };
  rec(0, padded(inner, len));
}

BigInt count_ssyt(const Partition& outer, const Partition& inner,
                  const std::vector<int>& content) {
  check_skew(outer, inner);
  int total = 0;
  for (int c : content) total += c;
  if (total != outer.size() - inner.size()) return 0;
  const std::size_t len = outer.length();
  const auto out = padded(outer, len);
  // Transfer counts level by level over intermediate shapes.
  std::map<std::vector<int>, BigInt> layer{{padded(inner, len), 1}};
  for (int c : content) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [shape, n] : layer)
      horizontal_strips(shape, out, c, [&](const std::vector<int>& s) { next[s] += n; });
    layer = std::move(next);
  }
  BigInt r = 0;
  for (const auto& [shape, n] : layer) r += n;
  return r;
}

BigInt kostka_number(const Partition& lambda, const Partition& nu) {
  if (lambda.size() != nu.size()) return 0;
  static std::mutex mu;
  static std::map<std::pair<Partition, Partition>, BigInt> cache;
  auto key = std::make_pair(lambda, nu);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  BigInt r = count_ssyt(lambda, Partition(), nu.parts());
  std::lock_guard lock(mu);
  cache.emplace(std::move(key), r);
  return r;
}

BigInt count_ssyt_bounded(const Partition& outer, const Partition& inner, int m) {
  check_skew(outer, inner);
  const std::size_t len = outer.length();
  const auto out = padded(outer, len);
  std::map<std::vector<int>, BigInt> layer{{padded(inner, len), 1}};
  const int cells = outer.size() - inner.size();
  for (int v = 0; v < m; ++v) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [shape, n] : layer)
      for (int c = 0; c <= cells; ++c)
        horizontal_strips(shape, out, c, [&](const std::vector<int>& s) { next[s] += n; });
    layer = std::move(next);
  }
  auto it = layer.find(out);
  return it == layer.end() ? BigInt(0) : it->second;
}

}  // namespace cofsieve
