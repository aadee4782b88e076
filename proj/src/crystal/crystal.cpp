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

#include "crystal/crystal.hpp"

#include <algorithm>
#include <map>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace cofsieve {

namespace {

// Unmatched closings (i) come first, unmatched openings (i+1) last.
void unmatched(int i, const Word& w, std::vector<std::size_t>& closes,
               std::vector<std::size_t>& opens) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1) {
      opens.push_back(k);
    } else if (w[k] == i) {
      if (!opens.empty())
        opens.pop_back();
      else
        closes.push_back(k);
    }
  }
}

void check_index(int i) {
  if (i < 1) fail(ErrorKind::InvalidArgument, "operator index must be at least 1");
}

}  // namespace

std::optional<std::size_t> word_e_position(int i, const Word& w) {
  check_index(i);
  std::vector<std::size_t> closes, opens;
  unmatched(i, w, closes, opens);
  if (opens.empty()) return std::nullopt;
  return opens.front();
}

std::optional<std::size_t> word_f_position(int i, const Word& w) {
  check_index(i);
  std::vector<std::size_t> closes, opens;
  unmatched(i, w, closes, opens);
  if (closes.empty()) return std::nullopt;
  return closes.back();
}

std::optional<Word> word_e(int i, const Word& w) {
  auto pos = word_e_position(i, w);
  if (!pos) return std::nullopt;
  Word out(w);
  out[*pos] = i;
  return out;
}

std::optional<Word> word_f(int i, const Word& w) {
  auto pos = word_f_position(i, w);
  if (!pos) return std::nullopt;
  Word out(w);
  out[*pos] = i + 1;
  return out;
}

CrystalBiword::CrystalBiword(std::vector<Biletter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end(), [](const Biletter& a, const Biletter& b) {
    return std::pair(a.bottom, a.top) > std::pair(b.bottom, b.top);
  });
}

Word CrystalBiword::values_row() const {
  Word w;
  for (const auto& b : letters_) w.push_back(b.top);
  return w;
}

Word CrystalBiword::columns_row() const {
  Word w;
  for (const auto& b : letters_) w.push_back(b.bottom);
  return w;
}

std::string CrystalBiword::to_json() const {
  return nlohmann::ordered_json{{"top", values_row()}, {"bottom", columns_row()}}.dump();
}

CrystalBiword crystal_biword(const Filling& f) { return CrystalBiword(burge_word(f).letters()); }

namespace {

std::optional<Filling> apply_on_values(const Filling& f, int i, bool raise) {
  CrystalBiword w = crystal_biword(f);
  Word values = w.values_row();
  auto pos = raise ? word_e_position(i, values) : word_f_position(i, values);
  if (!pos) return std::nullopt;
  const auto& shape = f.shape();
  std::vector<std::vector<int>> sets(shape.num_cols());
  for (std::size_t k = 0; k < w.letters().size(); ++k) {
    const auto& b = w.letters()[k];
    int v = b.top;
    if (k == *pos) v = raise ? i : i + 1;
    sets[b.bottom - 1].push_back(v);
  }
  for (auto& s : sets) std::sort(s.begin(), s.end());
  return from_column_sets(shape, sets);
}

}  // namespace

std::optional<Filling> cof_e(int i, const Filling& f) { return apply_on_values(f, i, true); }
std::optional<Filling> cof_f(int i, const Filling& f) { return apply_on_values(f, i, false); }

Filling s_involution(int i, const Filling& f) {
  check_index(i);
  Composition wt = weight(f, i + 1);
  int diff = wt[i] - wt[i - 1];
  Filling g = f;
  for (; diff > 0; --diff) g = *cof_e(i, g);
  for (; diff < 0; ++diff) g = *cof_f(i, g);
  return g;
}

namespace {

std::optional<Tableau> recording_op(int i, const Tableau& q, bool raise) {
  Tableau t = q.transpose();
  Word rw = t.reading_word();
  auto pos = raise ? word_e_position(i, rw) : word_f_position(i, rw);
  if (!pos) return std::nullopt;
  // Reading word runs over rows bottom to top.
  std::size_t k = *pos;
  for (auto row = t.rows.rbegin(); row != t.rows.rend(); ++row) {
    if (k < row->size()) {
      (*row)[k] = raise ? i : i + 1;
      break;
    }
    k -= row->size();
  }
  return t.transpose();
}

}  // namespace

std::optional<Tableau> recording_e(int i, const Tableau& q) { return recording_op(i, q, true); }
std::optional<Tableau> recording_f(int i, const Tableau& q) { return recording_op(i, q, false); }

std::vector<int> CrystalGraph::components() const {
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v, i] : edges) parent[find(u)] = find(v);
  std::map<int, int> label;
  std::vector<int> out(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    int r = find(static_cast<int>(k));
    auto it = label.try_emplace(r, static_cast<int>(label.size())).first;
    out[k] = it->second;
  }
  return out;
}

std::vector<int> CrystalGraph::component_sizes() const {
  std::vector<int> sizes;
  for (int c : components()) {
    if (c >= static_cast<int>(sizes.size())) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  return sizes;
}

std::string CrystalGraph::to_dot() const {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < nodes.size(); ++k)
    os << "  n" << k << " [label=\"" << nodes[k].to_string() << "\"];\n";
  for (const auto& [u, v, i] : edges)
    os << "  n" << u << " -> n" << v << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string CrystalGraph::to_json() const {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& f : nodes) j["nodes"].push_back(f.to_string());
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v, i] : edges) j["edges"].push_back({u, v, i});
  return j.dump();
}

CrystalGraph crystal_graph(const SkewShape& shape, int m) {
  CrystalGraph g;
  g.nodes = enumerate_cof(shape, m);
  std::map<Filling, int> index;
  for (std::size_t k = 0; k < g.nodes.size(); ++k) index.emplace(g.nodes[k], static_cast<int>(k));
  for (std::size_t k = 0; k < g.nodes.size(); ++k)
    for (int i = 1; i < m; ++i)
      if (auto img = cof_f(i, g.nodes[k])) g.edges.emplace_back(static_cast<int>(k), index.at(*img), i);
  return g;
}

EquivarianceReport rsk_equivariance_check(const SkewShape& shape, int m) {
  EquivarianceReport rep;
  for_each_cof(shape, m, [&](const Filling& f) {
    auto [p, q] = rsk(burge_word(f));
    for (int i = 1; i < m; ++i) {
      auto img = cof_e(i, f);
      if (!img) continue;
      ++rep.checked;
      auto [p2, q2] = rsk(burge_word(*img));
      auto expect = recording_e(i, q);
      if (p2 != p)
        rep.violations.push_back(f.to_string() + ": e_" + std::to_string(i) + " changes P");
      else if (!expect || *expect != q2)
        rep.violations.push_back(f.to_string() + ": e_" + std::to_string(i) +
                                 " moves Q to " + q2.to_string());
    }
  });
  return rep;
}

}  // namespace cofsieve
