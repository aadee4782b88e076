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

#include "llt/llt.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "core/error.hpp"
#include "rsk_charge/expansion.hpp"

namespace cofsieve {

VStripTuple::VStripTuple(std::vector<VStrip> strips) : strips_(std::move(strips)) {
  for (const auto& s : strips_)
    if (s.bottom < 0 || s.top < s.bottom)
      fail(ErrorKind::InvalidArgument, "strip 1^" + std::to_string(s.top) + "/1^" +
                                           std::to_string(s.bottom) + " needs top >= bottom >= 0");
}

VStripTuple VStripTuple::parse(std::string_view text) {
  std::vector<VStrip> strips;
  std::size_t pos = 0;
  std::string s(text);
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto slash = tok.find('/');
    if (slash == std::string::npos) fail(ErrorKind::Parse, "expected top/bottom, got '" + tok + "'");
    auto top = parse_int_list(tok.substr(0, slash));
    auto bottom = parse_int_list(tok.substr(slash + 1));
    if (top.size() != 1 || bottom.size() != 1)
      fail(ErrorKind::Parse, "expected top/bottom, got '" + tok + "'");
    if (bottom[0] < 0 || top[0] < bottom[0])
      fail(ErrorKind::Parse, "strip '" + tok + "' needs top >= bottom >= 0");
    strips.push_back({top[0], bottom[0]});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return VStripTuple(std::move(strips));
}

int VStripTuple::total_cells() const noexcept {
  int n = 0;
  for (const auto& s : strips_) n += s.size();
  return n;
}

std::string VStripTuple::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < strips_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(strips_[k].top) + "/" + std::to_string(strips_[k].bottom);
  }
  return out;
}

int content_of_cell(const VStripTuple& nu, int strip, int row) {
  if (strip < 0 || strip >= nu.size()) fail(ErrorKind::InvalidArgument, "no such strip");
  const VStrip& s = nu.strips()[strip];
  if (row <= s.bottom || row > s.top) fail(ErrorKind::InvalidArgument, "row outside the strip");
  return 1 - row;
}

bool is_valid(const VStripTuple& nu, const TupleFilling& t) {
  if (static_cast<int>(t.values.size()) != nu.size()) return false;
  for (int s = 0; s < nu.size(); ++s) {
    const auto& v = t.values[s];
    if (static_cast<int>(v.size()) != nu.strips()[s].size()) return false;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] < 1) return false;
      if (k > 0 && v[k] <= v[k - 1]) return false;
    }
  }
  return true;
}

namespace {

// Inversions between an earlier strip i and a later strip j. Row r of a strip
// has content 1 - r, so equal contents mean equal rows, and c(u) = c(v) - 1
// means u sits one row above v.
int pair_inversions(const VStrip& si, const std::vector<int>& vi, const VStrip& sj,
                    const std::vector<int>& vj) {
  int inv = 0;
  for (int k = 0; k < sj.size(); ++k) {
    const int row = sj.bottom + 1 + k;
    const int x = vj[k];
    // i < j, c(u) = c(v): same row, T^i(u) > T^j(v).
    if (row > si.bottom && row <= si.top && vi[row - si.bottom - 1] > x) ++inv;
    // j > i with u in strip j: c(u) = c(v) - 1, i.e. v one row below u.
    const int below = row - 1;
    if (below > si.bottom && below <= si.top && x > vi[below - si.bottom - 1]) ++inv;
  }
  return inv;
}

// Strictly increasing sequences of length len with entries in [1, m].
void for_each_column(int len, int m, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> v(len);
  std::function<void(int, int)> rec = [&](int k, int lo) {
    if (k == len) {
      visit(v);
      return;
    }
    for (int x = lo; x <= m - (len - k - 1); ++x) {
      v[k] = x;
      rec(k + 1, x + 1);
    }
  };
  rec(0, 1);
}

// Depth-first over strips; `leaf` gets the filling, its weight and inv.
void enumerate(const VStripTuple& nu, int m,
               const std::function<void(const TupleFilling&, const std::vector<int>&, int)>& leaf,
               const std::function<bool(int)>& prune = {}) {
  TupleFilling t;
  t.values.resize(nu.size());
  std::vector<int> wt(m, 0);
  const auto& strips = nu.strips();
  std::function<void(int, int)> rec = [&](int s, int inv) {
    if (prune && prune(inv)) return;
    if (s == nu.size()) {
      leaf(t, wt, inv);
      return;
    }
    for_each_column(strips[s].size(), m, [&](const std::vector<int>& col) {
      t.values[s] = col;
      int add = 0;
      for (int i = 0; i < s; ++i) add += pair_inversions(strips[i], t.values[i], strips[s], col);
      for (int x : col) ++wt[x - 1];
      rec(s + 1, inv + add);
      for (int x : col) --wt[x - 1];
    });
  };
  rec(0, 0);
}

}  // namespace

int inv_count(const VStripTuple& nu, const TupleFilling& t) {
  if (!is_valid(nu, t)) fail(ErrorKind::InvalidArgument, "not a filling of the strip tuple");
  int inv = 0;
  for (int j = 0; j < nu.size(); ++j)
    for (int i = 0; i < j; ++i)
      inv += pair_inversions(nu.strips()[i], t.values[i], nu.strips()[j], t.values[j]);
  return inv;
}

std::map<std::vector<int>, QPoly> llt_exponents(const VStripTuple& nu, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
  std::map<std::vector<int>, QPoly> out;
  enumerate(nu, m, [&](const TupleFilling&, const std::vector<int>& wt, int inv) {
    out[wt] += QPoly::monomial(inv);
  });
  return out;
}

SymPoly llt_poly(const VStripTuple& nu, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "m must be positive");
  std::map<Partition, std::vector<BigInt>> hist;
  enumerate(nu, m, [&](const TupleFilling&, const std::vector<int>& wt, int inv) {
    if (!std::is_sorted(wt.begin(), wt.end(), std::greater<>())) return;
    auto& h = hist[Partition(wt)];
    if (static_cast<int>(h.size()) <= inv) h.resize(inv + 1, 0);
    h[inv] += 1;
  });
  SymPoly f(m, Basis::Monomial);
  for (auto& [key, h] : hist) f.add_term(key, QPoly(std::move(h)));
  return f;
}

int mininv(const VStripTuple& nu) {
  const int m = std::max(1, nu.total_cells());
  int best = INT_MAX;
  enumerate(
      nu, m, [&](const TupleFilling&, const std::vector<int>&, int inv) { best = std::min(best, inv); },
      [&](int inv) { return inv >= best; });
  return best;
}

std::pair<VStripTuple, Composition> strips_from_skew(const SkewShape& shape) {
  if (shape.max_column_height() > 2)
    fail(ErrorKind::ColumnTooTall, "every column of " + shape.to_string() + " must have at most two cells");
  std::vector<VStrip> strips;
  Composition alpha;
  for (int j = 0; j < shape.num_rows(); ++j) {
    strips.push_back({shape.outer()[j], shape.inner()[j]});
    alpha.parts.push_back(shape.outer()[j] - shape.inner()[j]);
  }
  return {VStripTuple(std::move(strips)), alpha};
}

LltReport verify_llt_theorem(const SkewShape& shape, int m) {
  LltReport rep;
  rep.shape = shape;
  rep.strips = strips_from_skew(shape).first;
  rep.mininv = mininv(rep.strips);
  const SkewShape conj = shape.conjugate();
  rep.e = conj.max_column_height() <= m ? macdonald_e(conj, m) : SymPoly(m, Basis::Monomial);
  rep.llt = llt_poly(rep.strips, m);
  const int shift = rep.mininv;
  rep.theorem_ok = rep.llt == rep.e.map_coeffs([shift](const QPoly& c) { return c.shifted(shift); });
  // Schur functions with more than m parts vanish in m variables.
  SymPoly via_charge(m, Basis::Schur);
  const SymPoly charge = schur_expansion_via_charge(conj, m);
  for (const auto& [key, c] : charge.terms())
    if (key.length() <= m) via_charge.add_term(key, c.shifted(shift));
  rep.charge_ok = to_schur(rep.llt) == via_charge;
  return rep;
}

}  // namespace cofsieve
