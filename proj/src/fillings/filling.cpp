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

#include "fillings/filling.hpp"

#include <algorithm>
#include <climits>
#include <json.hpp>
#include <map>

#include "core/error.hpp"

namespace cofsieve {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (inner_.length() > outer_.length())
    fail(ErrorKind::InvalidArgument, "inner shape has more rows than outer shape");
  for (int i = 0; i < inner_.length(); ++i)
    if (inner_[i] > outer_[i])
      fail(ErrorKind::InvalidArgument, "inner shape not contained in outer shape");
  const Partition oc = outer_.conjugate(), ic = inner_.conjugate();
  outer_conj_.assign(num_cols(), 0);
  inner_conj_.assign(num_cols(), 0);
  for (int j = 0; j < num_cols(); ++j) {
    outer_conj_[j] = oc[j];
    inner_conj_[j] = ic[j];
  }
}

SkewShape SkewShape::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
  if (text.find('/', slash + 1) != std::string_view::npos)
    fail(ErrorKind::Parse, "skew shape has more than one '/'");
  try {
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, e.what());
    throw;
  }
}

std::vector<int> SkewShape::column_heights() const {
  std::vector<int> h(num_cols());
  for (int j = 0; j < num_cols(); ++j) h[j] = col_height(j);
  return h;
}

int SkewShape::max_column_height() const {
  int h = 0;
  for (int j = 0; j < num_cols(); ++j) h = std::max(h, col_height(j));
  return h;
}

SkewShape SkewShape::scaled(int n) const { return {outer_.scaled(n), inner_.scaled(n)}; }

SkewShape SkewShape::conjugate() const { return {outer_.conjugate(), inner_.conjugate()}; }

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

Filling::Filling(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.num_rows())
    fail(ErrorKind::InvalidArgument, "filling has the wrong number of rows");
  for (int i = 0; i < shape_.num_rows(); ++i) {
    if (static_cast<int>(rows_[i].size()) != shape_.row_end(i) - shape_.row_begin(i))
      fail(ErrorKind::InvalidArgument, "row " + std::to_string(i + 1) + " has the wrong length");
    for (int v : rows_[i])
      if (v < 1) fail(ErrorKind::InvalidArgument, "filling entries must be positive");
  }
}

std::vector<int> Filling::column(int j) const {
  std::vector<int> c;
  for (int i = shape_.col_begin(j); i < shape_.col_end(j); ++i) c.push_back(at(i, j));
  return c;
}

std::vector<std::vector<int>> Filling::column_sets() const {
  std::vector<std::vector<int>> out;
  for (int j = 0; j < shape_.num_cols(); ++j) {
    auto c = column(j);
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

int Filling::max_entry() const {
  int m = 0;
  for (const auto& r : rows_)
    for (int v : r) m = std::max(m, v);
  return m;
}

std::string Filling::to_string() const {
  const bool wide = max_entry() > 9;
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += '/';
    for (std::size_t k = 0; k < rows_[i].size(); ++k) {
      if (wide && k) s += ',';
      s += std::to_string(rows_[i][k]);
    }
  }
  return s;
}

std::string Filling::to_json() const {
  nlohmann::ordered_json j;
  j["outer"] = shape_.outer().parts();
  j["inner"] = shape_.inner().parts();
  j["rows"] = rows_;
  return j.dump();
}

Filling Filling::from_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    Partition outer(j.at("outer").get<std::vector<int>>());
    Partition inner(j.value("inner", std::vector<int>{}));
    return Filling(SkewShape(outer, inner), j.at("rows").get<std::vector<std::vector<int>>>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad filling JSON: ") + e.what());
  } catch (const Error& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

namespace {

constexpr int kInfinity = INT_MAX;

// Entries compared as (value, role); on ties the role decides, a > c > b.
struct Entry {
  int value;
  int role;  // b = 1, c = 2, a = 3
  bool operator<(const Entry& o) const {
    return value != o.value ? value < o.value : role < o.role;
  }
};

bool inversion_triple(int a, int b, int c) {
  Entry A{a, 3}, B{b, 1}, C{c, 2};
  return (A < C && C < B) || (C < B && B < A) || (B < A && A < C);
}

// Triples whose b and c cells lie in column j.
bool column_ok(const SkewShape& sh, int j, const std::vector<int>& left,
               const std::vector<int>& col) {
  const int top = sh.col_begin(j);
  for (std::size_t x = 0; x < col.size(); ++x) {
    const int i = top + static_cast<int>(x);
    const int a = sh.contains(i, j - 1) ? left[i - sh.col_begin(j - 1)] : kInfinity;
    for (std::size_t y = x + 1; y < col.size(); ++y) {
      if (col[x] == col[y]) return false;
      if (!inversion_triple(a, col[x], col[y])) return false;
    }
  }
  return true;
}

// Places the (sorted, distinct) set in column j given the column to its left.
// Returns false when the greedy placement violates a triple.
bool arrange_column(const SkewShape& sh, int j, const std::vector<int>& left,
                    const std::vector<int>& set, std::vector<int>& out) {
  out.clear();
  std::vector<bool> used(set.size(), false);
  const int top = sh.col_begin(j);
  for (int i = top; i < sh.col_end(j); ++i) {
    const int bound = sh.contains(i, j - 1) ? left[i - sh.col_begin(j - 1)] : kInfinity;
    int pick = -1;
    for (int k = static_cast<int>(set.size()) - 1; k >= 0; --k)
      if (!used[k] && set[k] <= bound) {
        pick = k;
        break;
      }
    if (pick < 0)
      for (int k = static_cast<int>(set.size()) - 1; k >= 0; --k)
        if (!used[k]) {
          pick = k;
          break;
        }
    used[pick] = true;
    out.push_back(set[pick]);
  }
  return column_ok(sh, j, left, out);
}

// maj contribution of column j.
int column_maj(const SkewShape& sh, int j, const std::vector<int>& left,
               const std::vector<int>& col) {
  int s = 0;
  const int top = sh.col_begin(j);
  for (std::size_t x = 0; x < col.size(); ++x) {
    const int i = top + static_cast<int>(x);
    if (sh.contains(i, j - 1) && left[i - sh.col_begin(j - 1)] < col[x])
      s += sh.row_end(i) - j;
  }
  return s;
}

std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == m - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

Filling assemble(const SkewShape& sh, const std::vector<std::vector<int>>& cols) {
  std::vector<std::vector<int>> rows(sh.num_rows());
  for (int i = 0; i < sh.num_rows(); ++i)
    for (int j = sh.row_begin(i); j < sh.row_end(i); ++j)
      rows[i].push_back(cols[j][i - sh.col_begin(j)]);
  return Filling(sh, std::move(rows));
}

void require_enough_values(const SkewShape& sh, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
  if (sh.max_column_height() > m)
    fail(ErrorKind::ColumnTooTall, "a column of " + sh.to_string() + " is taller than m=" +
                                       std::to_string(m));
}

}  // namespace

bool is_cof(const Filling& f) {
  const auto& sh = f.shape();
  std::vector<int> left;
  for (int j = 0; j < sh.num_cols(); ++j) {
    auto col = f.column(j);
    if (!column_ok(sh, j, left, col)) return false;
    left = std::move(col);
  }
  return true;
}

std::vector<std::pair<int, int>> descents(const Filling& f) {
  const auto& sh = f.shape();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < sh.num_rows(); ++i)
    for (int j = sh.row_begin(i) + 1; j < sh.row_end(i); ++j)
      if (f.at(i, j - 1) < f.at(i, j)) out.emplace_back(i, j);
  return out;
}

int maj(const Filling& f) {
  int s = 0;
  for (auto [i, j] : descents(f)) s += f.shape().row_end(i) - j;
  return s;
}

Composition weight(const Filling& f, int len) {
  Composition w{std::vector<int>(std::max(len, f.max_entry()), 0)};
  for (const auto& r : f.rows())
    for (int v : r) ++w.parts[v - 1];
  return w;
}

Filling from_column_sets(const SkewShape& shape, const std::vector<std::vector<int>>& sets) {
  if (static_cast<int>(sets.size()) != shape.num_cols())
    fail(ErrorKind::InvalidArgument, "expected one set per column");
  std::vector<std::vector<int>> cols(shape.num_cols());
  std::vector<int> left;
  for (int j = 0; j < shape.num_cols(); ++j) {
    std::vector<int> s(sets[j]);
    std::sort(s.begin(), s.end());
    if (static_cast<int>(s.size()) != shape.col_height(j))
      fail(ErrorKind::InvalidArgument, "column " + std::to_string(j + 1) + " set has the wrong size");
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && s.front() < 1))
      fail(ErrorKind::InvalidArgument, "column sets must hold distinct positive integers");
    if (!arrange_column(shape, j, left, s, cols[j]))
      fail(ErrorKind::NoValidFilling, "no coinversion-free arrangement of column " +
                                          std::to_string(j + 1) + " of " + shape.to_string());
    left = cols[j];
  }
  return assemble(shape, cols);
}

namespace {

void cof_dfs(const SkewShape& sh, int m, std::vector<int>* remaining,
             const std::function<void(const Filling&)>& visit) {
  const int ncols = sh.num_cols();
  std::vector<std::vector<std::vector<int>>> choices(ncols);
  for (int j = 0; j < ncols; ++j) choices[j] = combinations(m, sh.col_height(j));
  std::vector<std::vector<int>> cols(ncols);
  std::function<void(int)> rec = [&](int j) {
    if (j == ncols) {
      if (remaining && std::any_of(remaining->begin(), remaining->end(), [](int r) { return r; }))
        return;
      visit(assemble(sh, cols));
      return;
    }
    static const std::vector<int> kNone;
    const auto& left = j > 0 ? cols[j - 1] : kNone;
    for (const auto& set : choices[j]) {
      if (remaining) {
        bool ok = true;
        for (int v : set) ok = ok && (*remaining)[v - 1] > 0;
        if (!ok) continue;
      }
      if (!arrange_column(sh, j, left, set, cols[j]))
        fail(ErrorKind::NoValidFilling, "greedy placement failed on " + sh.to_string());
      if (remaining)
        for (int v : set) --(*remaining)[v - 1];
      rec(j + 1);
      if (remaining)
        for (int v : set) ++(*remaining)[v - 1];
    }
  };
  rec(0);
}

}  // namespace

void for_each_cof(const SkewShape& shape, int m, const std::function<void(const Filling&)>& visit) {
  require_enough_values(shape, m);
  cof_dfs(shape, m, nullptr, visit);
}

std::vector<Filling> enumerate_cof(const SkewShape& shape, int m) {
  std::vector<Filling> out;
  for_each_cof(shape, m, [&](const Filling& f) { out.push_back(f); });
  return out;
}

std::vector<Filling> enumerate_cof_content(const SkewShape& shape, const Composition& content) {
  if (content.size() != shape.size()) return {};
  std::vector<int> remaining(content.parts);
  const int m = content.length();
  if (shape.max_column_height() > m) return {};
  std::vector<Filling> out;
  cof_dfs(shape, m, &remaining, [&](const Filling& f) { out.push_back(f); });
  return out;
}

namespace {

// maj histogram with overflow-checked 64-bit counts.
struct Hist {
  std::vector<long long> c;
  void add_shifted(const Hist& o, int shift) {
    if (c.size() < o.c.size() + shift) c.resize(o.c.size() + shift, 0);
    for (std::size_t k = 0; k < o.c.size(); ++k)
      if (__builtin_add_overflow(c[k + shift], o.c[k], &c[k + shift]))
        fail(ErrorKind::Overflow, "filling count exceeds 64 bits");
  }
  QPoly to_qpoly() const {
    std::vector<BigInt> v;
    for (long long x : c) v.emplace_back(static_cast<long>(x));
    return QPoly(std::move(v));
  }
};

struct Step {
  std::vector<int> set, col;
  int maj;
};

// All admissible (set, arrangement) pairs for column j after `left`.
std::vector<Step> steps_after(const SkewShape& sh, int j, const std::vector<int>& left,
                              const std::vector<std::vector<int>>& choices) {
  std::vector<Step> out;
  for (const auto& set : choices) {
    Step s{set, {}, 0};
    if (!arrange_column(sh, j, left, set, s.col))
      fail(ErrorKind::NoValidFilling, "greedy placement failed on " + sh.to_string());
    s.maj = column_maj(sh, j, left, s.col);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

SymPoly macdonald_e(const SkewShape& shape, int m) {
  require_enough_values(shape, m);
  using Inner = std::map<std::vector<int>, Hist>;  // weight -> maj histogram
  std::map<std::vector<int>, Inner> layer;         // previous column -> ...
  layer[{}][std::vector<int>(m, 0)] = Hist{{1}};
  for (int j = 0; j < shape.num_cols(); ++j) {
    const auto choices = combinations(m, shape.col_height(j));
    std::map<std::vector<int>, Inner> next;
    for (const auto& [left, inner] : layer)
      for (const auto& step : steps_after(shape, j, left, choices)) {
        auto& dst = next[step.col];
        for (const auto& [w, h] : inner) {
          auto w2 = w;
          for (int v : step.set) ++w2[v - 1];
          dst[w2].add_shifted(h, step.maj);
        }
      }
    layer = std::move(next);
  }
  std::map<std::vector<int>, QPoly> terms;
  for (const auto& [col, inner] : layer)
    for (const auto& [w, h] : inner) terms[w] += h.to_qpoly();
  return SymPoly::from_exponents(m, terms);
}

SymPoly macdonald_e_enumerated(const SkewShape& shape, int m) {
  std::map<std::vector<int>, QPoly> terms;
  for_each_cof(shape, m, [&](const Filling& f) {
    terms[weight(f, m).parts] += QPoly::monomial(maj(f));
  });
  return SymPoly::from_exponents(m, terms);
}

QPoly macdonald_e_at_ones(const SkewShape& shape, int m) {
  require_enough_values(shape, m);
  std::map<std::vector<int>, Hist> layer;
  layer[{}] = Hist{{1}};
  for (int j = 0; j < shape.num_cols(); ++j) {
    const auto choices = combinations(m, shape.col_height(j));
    std::map<std::vector<int>, Hist> next;
    for (const auto& [left, h] : layer)
      for (const auto& step : steps_after(shape, j, left, choices))
        next[step.col].add_shifted(h, step.maj);
    layer = std::move(next);
  }
  QPoly out;
  for (const auto& [col, h] : layer) out += h.to_qpoly();
  return out;
}

Filling extended_filling(const Filling& f, int big) {
  const auto& sh = f.shape();
  if (big <= f.max_entry() + sh.num_rows())
    fail(ErrorKind::InvalidArgument, "M must exceed the largest entry plus the number of rows");
  std::vector<std::vector<int>> rows(sh.num_rows());
  for (int i = 0; i < sh.num_rows(); ++i) {
    rows[i].assign(sh.row_begin(i), big - (i + 1));
    rows[i].insert(rows[i].end(), f.rows()[i].begin(), f.rows()[i].end());
  }
  return Filling(SkewShape(sh.outer()), std::move(rows));
}

}  // namespace cofsieve
