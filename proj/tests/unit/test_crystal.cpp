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

#include <doctest.h>

#include <set>

#include "core/error.hpp"
#include "crystal/crystal.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cofsieve;

namespace {

Word W(const char* s) {
  Word w;
  for (const char* c = s; *c; ++c) w.push_back(*c - '0');
  return w;
}

// Signature oracle: write the bracket string and delete "()" pairs until none
// remain, then read off the leftmost '(' / rightmost ')'.
std::optional<Word> oracle_op(int i, const Word& w, bool raise) {
  std::vector<std::pair<char, std::size_t>> sig;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == i + 1) sig.push_back({'(', k});
    if (w[k] == i) sig.push_back({')', k});
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < sig.size(); ++k)
      if (sig[k].first == '(' && sig[k + 1].first == ')') {
        sig.erase(sig.begin() + k, sig.begin() + k + 2);
        changed = true;
        break;
      }
  }
  Word out(w);
  if (raise) {
    for (auto& [c, k] : sig)
      if (c == '(') {
        out[k] = i;
        return out;
      }
  } else {
    for (auto it = sig.rbegin(); it != sig.rend(); ++it)
      if (it->first == ')') {
        out[it->second] = i + 1;
        return out;
      }
  }
  return std::nullopt;
}

Filling fig_filling() {
  return Filling(SkewShape({5, 3, 2, 2}, {2}), {{2, 1, 3}, {3, 3, 1}, {2, 2}, {1, 4}});
}

std::multiset<std::pair<int, int>> value_cells(const Filling& f) {
  std::multiset<std::pair<int, int>> s;
  const auto& sh = f.shape();
  for (int r = 0; r < sh.num_rows(); ++r)
    for (int c = sh.row_begin(r); c < sh.row_end(r); ++c) s.insert({r * 100 + c, f.at(r, c)});
  return s;
}

}  // namespace

TEST_CASE("word operators") {
  Word w{2, 1, 3, 1, 2, 4, 2, 1, 1, 3, 1, 2, 3, 2, 1, 2, 1};
  CHECK(word_e_position(1, w) == std::optional<std::size_t>(11));
  Word expect = w;
  expect[11] = 1;
  CHECK(word_e(1, w) == expect);
  CHECK_FALSE(word_e(2, W("1111")).has_value());
  CHECK_FALSE(word_f(1, W("21")).has_value());
  CHECK(word_f(1, W("11")) == W("12"));
  CHECK(word_e(1, W("22")) == W("12"));
  CHECK_THROWS_AS(word_e(0, W("1")), Error);
}

TEST_CASE("word operators agree with the signature oracle and invert each other") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& w : oracle::all_words(n, 3))
      for (int i = 1; i <= 2; ++i) {
        auto e = word_e(i, w);
        auto f = word_f(i, w);
        REQUIRE(e == oracle_op(i, w, true));
        REQUIRE(f == oracle_op(i, w, false));
        if (e) REQUIRE(word_f(i, *e) == w);
        if (f) REQUIRE(word_e(i, *f) == w);
      }
}

TEST_CASE("crystal biword of the figure filling") {
  Filling f = fig_filling();
  CrystalBiword w = crystal_biword(f);
  CHECK(w.values_row() == W("3121432321"));
  CHECK(w.columns_row() == W("5433222111"));
  CHECK(w.to_json() == R"({"top":[3,1,2,1,4,3,2,3,2,1],"bottom":[5,4,3,3,2,2,2,1,1,1]})");
  CrystalBiword single = crystal_biword(Filling(SkewShape({1}), {{3}}));
  CHECK(single.letters() == std::vector<Biletter>{{3, 1}});
}

TEST_CASE("raising operator on the figure filling") {
  Filling f = fig_filling();
  auto g = cof_e(1, f);
  REQUIRE(g);
  BurgeWord w = burge_word(*g);
  CHECK(w.top() == W("1111223334"));
  CHECK(w.bottom() == W("4321315212"));
  CHECK(is_cof(*g));
  CHECK(maj(*g) == maj(f));
  CHECK(cof_f(1, *g) == f);

  auto [p, q] = rsk(burge_word(f));
  auto [p2, q2] = rsk(w);
  CHECK(p2 == p);
  // Only the bottom cell of Q changes, from 2 to 1.
  CHECK(q.rows.back() == Word{2});
  CHECK(q2.rows.back() == Word{1});
  CHECK(recording_e(1, q) == q2);

  CHECK_FALSE(cof_e(1, Filling(SkewShape({2}), {{1, 1}})).has_value());
}

TEST_CASE("operators preserve maj and only touch i and i+1") {
  for (const auto& [lam, mu] : testing::skew_pairs(5, 8)) {
    SkewShape sh(lam, mu);
    if (sh.max_column_height() > 4) continue;
    for (const auto& f : enumerate_cof(sh, 4))
      for (int i = 1; i <= 3; ++i)
        for (bool raise : {true, false}) {
          auto g = raise ? cof_e(i, f) : cof_f(i, f);
          if (!g) continue;
          REQUIRE(is_cof(*g));
          REQUIRE(maj(*g) == maj(f));
          REQUIRE((raise ? cof_f(i, *g) : cof_e(i, *g)) == f);
          auto a = value_cells(f), b = value_cells(*g);
          for (auto it = a.begin(), jt = b.begin(); it != a.end(); ++it, ++jt)
            if (*it != *jt) {
              REQUIRE((it->second == i || it->second == i + 1));
              REQUIRE((jt->second == i || jt->second == i + 1));
            }
        }
  }
}

TEST_CASE("maj preserved on the specialized fillings") {
  auto all = enumerate_cof(SkewShape({2, 1}), 3);
  CHECK(all.size() == 9);
  for (const auto& f : all)
    for (int i = 1; i <= 2; ++i)
      if (auto g = cof_e(i, f)) CHECK(maj(*g) == maj(f));
}

TEST_CASE("s involutions") {
  for (const char* s : {"2,1", "2,2"}) {
    SkewShape sh = SkewShape::parse(s);
    for (const auto& f : enumerate_cof(sh, 3)) {
      for (int i = 1; i <= 2; ++i) {
        Filling g = s_involution(i, f);
        CHECK(s_involution(i, g) == f);
        CHECK(maj(g) == maj(f));
        Composition a = weight(f, 3), b = weight(g, 3);
        std::swap(a.parts[i - 1], a.parts[i]);
        CHECK(a == b);
        if (weight(f, 3)[i - 1] == weight(f, 3)[i]) CHECK(g == f);
      }
      CHECK(s_involution(1, s_involution(2, s_involution(1, f))) ==
            s_involution(2, s_involution(1, s_involution(2, f))));
    }
  }
}

TEST_CASE("crystal graph of (3,2)/(1)") {
  CrystalGraph g = crystal_graph(SkewShape({3, 2}, {1}), 3);
  CHECK(g.nodes.size() == 27);
  auto sizes = g.component_sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{3, 3, 6, 15});
  for (const auto& [u, v, i] : g.edges) CHECK(cof_f(i, g.nodes[u]) == g.nodes[v]);

  CrystalGraph path = crystal_graph(SkewShape({1}), 2);
  CHECK(path.nodes.size() == 2);
  REQUIRE(path.edges.size() == 1);
  CHECK(path.edges[0] == std::tuple(0, 1, 1));
  CHECK(path.to_json() == R"({"nodes":["1","2"],"edges":[[0,1,1]]})");
  CHECK(path.to_dot() ==
        "digraph crystal {\n  n0 [label=\"1\"];\n  n1 [label=\"2\"];\n  n0 -> n1 [label=\"1\"];\n}\n");
}

TEST_CASE("components are Schur polynomials") {
  for (const auto& [lam, mu] : testing::skew_pairs(5, 8)) {
    SkewShape sh(lam, mu);
    const int m = 4;
    if (sh.max_column_height() > m) continue;
    CrystalGraph g = crystal_graph(sh, m);
    auto comp = g.components();
    const int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::map<std::vector<int>, QPoly>> gen(nc);
    std::vector<int> highest(nc, -1);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      const Filling& f = g.nodes[k];
      gen[comp[k]][weight(f, m).parts] += QPoly::monomial(maj(f));
      bool hw = true;
      for (int i = 1; i < m; ++i) hw = hw && !cof_e(i, f);
      if (hw) {
        REQUIRE(highest[comp[k]] == -1);
        highest[comp[k]] = static_cast<int>(k);
      }
    }
    for (int c = 0; c < nc; ++c) {
      REQUIRE(highest[c] >= 0);
      const Filling& h = g.nodes[highest[c]];
      // Q^t is semistandard of the conjugate shape, carrying the weight.
      Partition shape = rsk(burge_word(h)).first.shape().conjugate();
      SymPoly expect = SymPoly::schur(shape, m).scaled(QPoly::monomial(maj(h)));
      REQUIRE(SymPoly::from_exponents(m, gen[c]) == expect);
    }
  }
}

TEST_CASE("rsk equivariance") {
  auto rep = rsk_equivariance_check(SkewShape({3, 2}, {1}), 3);
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
  for (const auto& [lam, mu] : testing::skew_pairs(5, 8)) {
    SkewShape sh(lam, mu);
    if (sh.max_column_height() > 4) continue;
    auto r = rsk_equivariance_check(sh, 4);
    INFO(sh.to_string());
    REQUIRE(r.ok());
  }
}
