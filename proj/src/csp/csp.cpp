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

#include "csp/csp.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "core/error.hpp"
#include "symfunc/sympoly.hpp"

namespace cofsieve {

namespace {

// Sets up to this size are handled through explicit orbits.
constexpr long kOrbitLimit = 20000;

void check_blocks(const SkewShape& shape, int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (shape.num_cols() % n != 0)
    fail(ErrorKind::ShapeNotDivisible, "column count of " + shape.to_string() +
                                           " is not a multiple of " + std::to_string(n));
  for (int b = 0; b < shape.num_cols(); b += n)
    for (int k = 1; k < n; ++k)
      if (shape.col_begin(b + k) != shape.col_begin(b) || shape.col_end(b + k) != shape.col_end(b))
        fail(ErrorKind::ShapeNotDivisible, "columns " + std::to_string(b + 1) + ".." +
                                               std::to_string(b + n) + " of " + shape.to_string() +
                                               " differ");
}

std::vector<std::vector<int>> subsets(int m, int h) {
  std::vector<std::vector<int>> out;
  if (h > m || h < 0) return out;
  std::vector<int> s(h);
  std::iota(s.begin(), s.end(), 1);
  while (true) {
    out.push_back(s);
    int i = h - 1;
    while (i >= 0 && s[i] == m - h + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int k = i + 1; k < h; ++k) s[k] = s[k - 1] + 1;
  }
  return out;
}

// Calls visit(weight) for every n-tuple of h-subsets of [m] that is invariant
// under rotation by d. Such a tuple repeats its first gcd(n, d) entries.
template <class Visit>
void for_each_fixed_block(int n, int d, int h, int m, Visit visit) {
  const int g = std::gcd(n, d);
  auto sets = subsets(m, h);
  if (sets.empty()) return;
  std::vector<std::size_t> idx(g, 0);
  std::vector<int> wt(m);
  while (true) {
    std::vector<std::size_t> tuple(n);
    for (int k = 0; k < n; ++k) tuple[k] = idx[k % g];
    for (int k = 0; k < n; ++k)
      if (tuple[(k + d) % n] != tuple[k])
        fail(ErrorKind::InvalidArgument, "internal: periodic tuple not rotation invariant");
    std::fill(wt.begin(), wt.end(), 0);
    for (int k = 0; k < n; ++k)
      for (int v : sets[tuple[k]]) ++wt[v - 1];
    visit(wt);
    int i = g - 1;
    while (i >= 0 && idx[i] + 1 == sets.size()) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
}

BigInt binomial_product(const SkewShape& shape, int m) {
  BigInt p = 1;
  for (int h : shape.column_heights()) p *= binomial(m, h);
  return p;
}

nlohmann::ordered_json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

std::string cyc_text(const CyclotomicValue& v) {
  if (auto i = v.as_integer()) return i->get_str();
  return v.residue.to_string() + " mod Phi_" + std::to_string(v.order);
}

nlohmann::ordered_json cyc_json(const CyclotomicValue& v) {
  if (auto i = v.as_integer()) return big_json(*i);
  return cyc_text(v);
}

bool matches(const CyclotomicValue& v, const BigInt& x) {
  auto i = v.as_integer();
  return i && *i == x;
}

// Fixed points of g^d for d = 1..n from the orbit sizes of a permutation of X.
std::vector<BigInt> fixed_from_orbits(const std::vector<int>& orbit_sizes, int n) {
  std::vector<BigInt> out(n + 1, 0);
  for (int d = 1; d <= n; ++d)
    for (int s : orbit_sizes)
      if (d % s == 0) out[d] += s;
  return out;
}

template <class Act>
std::vector<std::vector<Filling>> orbits_of(const std::vector<Filling>& xs, Act act) {
  std::map<Filling, std::size_t> index;
  for (std::size_t k = 0; k < xs.size(); ++k) index.emplace(xs[k], k);
  std::vector<bool> seen(xs.size(), false);
  std::vector<std::vector<Filling>> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (seen[k]) continue;
    std::vector<Filling> orbit;
    Filling f = xs[k];
    while (true) {
      auto it = index.find(f);
      if (it == index.end())
        fail(ErrorKind::InvalidArgument, "action leaves the set at " + f.to_string());
      if (seen[it->second]) break;
      seen[it->second] = true;
      orbit.push_back(f);
      f = act(f);
    }
    if (f != xs[k]) fail(ErrorKind::InvalidArgument, "action is not a permutation");
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> sizes_of(const std::vector<std::vector<Filling>>& orbs) {
  std::vector<int> s;
  for (const auto& o : orbs) s.push_back(static_cast<int>(o.size()));
  return s;
}

QPoly at_ones_or_zero(const SkewShape& shape, int m) {
  if (shape.max_column_height() > m) return QPoly();
  return macdonald_e_at_ones(shape, m);
}

}  // namespace

Filling phi(const Filling& f, int n) {
  const SkewShape& shape = f.shape();
  check_blocks(shape, n);
  auto sets = f.column_sets();
  std::vector<std::vector<int>> rotated(sets.size());
  for (int b = 0; b < shape.num_cols(); b += n)
    for (int k = 0; k < n; ++k) rotated[b + (k + 1) % n] = sets[b + k];
  return from_column_sets(shape, rotated);
}

std::vector<std::vector<Filling>> orbits(const SkewShape& shape, int n, int m,
                                         const std::optional<Composition>& content) {
  check_blocks(shape, n);
  std::vector<Filling> xs;
  if (content)
    xs = enumerate_cof_content(shape, *content);
  else if (shape.max_column_height() <= m)
    xs = enumerate_cof(shape, m);
  return orbits_of(xs, [n](const Filling& f) { return phi(f, n); });
}

std::map<std::vector<int>, BigInt> fixed_counts_by_weight(const SkewShape& shape, int n, int d,
                                                          int m) {
  check_blocks(shape, n);
  std::map<std::vector<int>, BigInt> acc{{std::vector<int>(m, 0), BigInt(1)}};
  for (int b = 0; b < shape.num_cols(); b += n) {
    std::map<std::vector<int>, BigInt> block;
    for_each_fixed_block(n, d, shape.col_height(b), m,
                         [&](const std::vector<int>& wt) { block[wt] += 1; });
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [w1, c1] : acc)
      for (const auto& [w2, c2] : block) {
        std::vector<int> w(m);
        for (int i = 0; i < m; ++i) w[i] = w1[i] + w2[i];
        next[w] += c1 * c2;
      }
    acc = std::move(next);
  }
  return acc;
}

BigInt count_fixed_by_blocks(const SkewShape& shape, int n, int d, int m,
                             const std::optional<Composition>& content) {
  if (content) {
    auto counts = fixed_counts_by_weight(shape, n, d, content->length());
    auto it = counts.find(content->parts);
    return it == counts.end() ? BigInt(0) : it->second;
  }
  check_blocks(shape, n);
  BigInt total = 1;
  for (int b = 0; b < shape.num_cols(); b += n) {
    BigInt block = 0;
    for_each_fixed_block(n, d, shape.col_height(b), m, [&](const std::vector<int>&) { ++block; });
    total *= block;
  }
  return total;
}

bool CspReport::pass() const {
  if (!applicable) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  for (const auto& l : lyndon)
    if (!l.ok) return false;
  return true;
}

std::string CspReport::to_text() const {
  std::ostringstream os;
  os << "action: " << action << "\nshape: " << shape << "\nn: " << n << "\nm: " << m << '\n';
  if (content) os << "content: " << content->to_string() << '\n';
  os << "f(q) = " << poly.to_string() << '\n';
  if (unnormalized) os << "unnormalized f(q) = " << unnormalized->to_string() << '\n';
  os << "d\tfixed\tf(xi^d)\tok\n";
  for (const auto& c : checks)
    os << c.d << '\t' << c.fixed.get_str() << '\t' << cyc_text(c.f_at_root) << '\t'
       << (c.ok ? "yes" : "no") << '\n';
  for (const auto& l : lyndon)
    os << "lyndon d=" << l.d << ": f_{n/d}(1) = " << l.smaller.get_str()
       << ", f_n at primitive root = " << cyc_text(l.f_at_root) << ' ' << (l.ok ? "ok" : "MISMATCH")
       << '\n';
  if (!note.empty()) os << "note: " << note << '\n';
  os << (applicable ? (pass() ? "PASS" : "FAIL") : "NOT-APPLICABLE") << '\n';
  return os.str();
}

std::string CspReport::to_json() const {
  nlohmann::ordered_json t;
  t["action"] = action;
  t["shape"] = shape;
  t["n"] = n;
  t["m"] = m;
  t["content"] = content ? nlohmann::ordered_json(content->parts) : nlohmann::ordered_json(nullptr);
  t["poly"] = poly.to_string();
  if (unnormalized) t["unnormalized_poly"] = unnormalized->to_string();
  nlohmann::ordered_json j;
  j["triple"] = t;
  j["method"] = method;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back(
        {{"d", c.d}, {"fixed", big_json(c.fixed)}, {"f_at_root", cyc_json(c.f_at_root)}, {"ok", c.ok}});
  if (!lyndon.empty()) {
    j["lyndon"] = nlohmann::ordered_json::array();
    for (const auto& l : lyndon)
      j["lyndon"].push_back({{"d", l.d},
                             {"smaller", big_json(l.smaller)},
                             {"f_at_root", cyc_json(l.f_at_root)},
                             {"ok", l.ok}});
  }
  j["applicable"] = applicable;
  if (!note.empty()) j["note"] = note;
  j["pass"] = pass();
  return j.dump();
}

CspReport verify_csp(const SkewShape& shape, int n, int m, const std::optional<Composition>& content,
                     const QPoly& poly) {
  check_blocks(shape, n);
  CspReport rep;
  rep.shape = shape.to_string();
  rep.n = n;
  rep.m = content ? content->length() : m;
  rep.content = content;
  rep.poly = poly;
  std::vector<BigInt> fixed(n + 1, 0);
  if (binomial_product(shape, rep.m) <= kOrbitLimit) {
    rep.method = "orbits";
    fixed = fixed_from_orbits(sizes_of(orbits(shape, n, rep.m, content)), n);
  } else {
    rep.method = "blocks";
    for (int d = 1; d <= n; ++d) fixed[d] = count_fixed_by_blocks(shape, n, d, rep.m, content);
  }
  for (int d = 1; d <= n; ++d) {
    CspCheck c;
    c.d = d;
    c.fixed = fixed[d];
    c.f_at_root = eval_at_unity(poly, n / std::gcd(n, d));
    c.ok = matches(c.f_at_root, c.fixed);
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

CspReport macdonald_csp_suite(const SkewShape& base, int n, int m) {
  const SkewShape shape = base.scaled(n);
  CspReport rep = verify_csp(shape, n, m, std::nullopt, at_ones_or_zero(shape, m));
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    LyndonCheck l;
    l.d = d;
    l.smaller = at_ones_or_zero(base.scaled(n / d), m).at_one();
    l.f_at_root = eval_at_unity(rep.poly, d);
    l.ok = matches(l.f_at_root, l.smaller);
    rep.lyndon.push_back(std::move(l));
  }
  return rep;
}

CspReport refined_csp_suite(const SkewShape& base, int n, const Composition& nu) {
  const SkewShape shape = base.scaled(n);
  for (int p : nu.parts)
    if (p < 0) fail(ErrorKind::InvalidArgument, "content parts must be non-negative");
  QPoly f;
  if (nu.size() == shape.size() && shape.max_column_height() <= nu.length())
    f = coeff_monomial(macdonald_e(shape, nu.length()), nu.sorted());
  return verify_csp(shape, n, nu.length(), nu, f);
}

std::vector<Composition> refined_csp_sweep(const SkewShape& base, int n, int m) {
  const SkewShape shape = base.scaled(n);
  std::vector<Composition> bad;
  if (shape.max_column_height() > m) return bad;
  SymPoly e = macdonald_e(shape, m);
  std::vector<std::map<std::vector<int>, BigInt>> fixed(n + 1);
  for (int d = 1; d <= n; ++d) fixed[d] = fixed_counts_by_weight(shape, n, d, m);
  for (const auto& alpha : weak_compositions(shape.size(), m)) {
    const QPoly f = e.coeff(alpha.sorted());
    for (int d = 1; d <= n; ++d) {
      auto it = fixed[d].find(alpha.parts);
      const BigInt count = it == fixed[d].end() ? BigInt(0) : it->second;
      if (!matches(eval_at_unity(f, n / std::gcd(n, d)), count)) {
        bad.push_back(alpha);
        break;
      }
    }
  }
  return bad;
}

std::vector<int> BinaryMatrix::row_sums() const {
  std::vector<int> s(rows, 0);
  for (int i = 0; i < rows; ++i) s[i] = std::accumulate(entries[i].begin(), entries[i].end(), 0);
  return s;
}

std::vector<int> BinaryMatrix::col_sums() const {
  std::vector<int> s(cols, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) s[j] += entries[i][j];
  return s;
}

BinaryMatrix BinaryMatrix::rotate_blocks(int n) const {
  if (n < 1 || cols % n != 0)
    fail(ErrorKind::ShapeNotDivisible, "matrix columns are not a multiple of the block size");
  BinaryMatrix out = *this;
  for (int i = 0; i < rows; ++i)
    for (int b = 0; b < cols; b += n)
      for (int k = 0; k < n; ++k) out.entries[i][b + (k + 1) % n] = entries[i][b + k];
  return out;
}

BinaryMatrix filling_to_matrix(const Filling& f, int rows) {
  if (f.max_entry() > rows)
    fail(ErrorKind::InvalidArgument, "filling has entries larger than the row count");
  BinaryMatrix m;
  m.rows = rows;
  m.cols = f.shape().num_cols();
  m.entries.assign(rows, std::vector<int>(m.cols, 0));
  auto sets = f.column_sets();
  for (int j = 0; j < m.cols; ++j)
    for (int v : sets[j]) m.entries[v - 1][j] = 1;
  return m;
}

Filling matrix_to_filling(const BinaryMatrix& m, const SkewShape& shape) {
  if (m.cols != shape.num_cols())
    fail(ErrorKind::ContentMismatch, "matrix has " + std::to_string(m.cols) + " columns, shape has " +
                                         std::to_string(shape.num_cols()));
  auto sums = m.col_sums();
  std::vector<std::vector<int>> sets(m.cols);
  for (int j = 0; j < m.cols; ++j) {
    if (sums[j] != shape.col_height(j))
      fail(ErrorKind::ContentMismatch, "column " + std::to_string(j + 1) + " sum differs from height");
    for (int i = 0; i < m.rows; ++i)
      if (m.entries[i][j]) sets[j].push_back(i + 1);
  }
  return from_column_sets(shape, sets);
}

Permutation parse_permutation(const std::string& text, int m) {
  std::vector<std::vector<int>> cycles;
  const bool cyclic = text.find('(') != std::string::npos;
  if (cyclic) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(') fail(ErrorKind::Parse, "expected '(' in cycle notation: " + text);
      auto close = text.find(')', pos);
      if (close == std::string::npos) fail(ErrorKind::Parse, "unbalanced '(' in " + text);
      std::string body = text.substr(pos + 1, close - pos - 1);
      std::vector<int> cyc;
      if (body.find(',') != std::string::npos) {
        cyc = parse_int_list(body);
      } else {
        for (char c : body) {
          if (std::isspace(static_cast<unsigned char>(c))) continue;
          if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(ErrorKind::Parse, "unexpected character in cycle: " + body);
          cyc.push_back(c - '0');
        }
      }
      cycles.push_back(cyc);
      pos = close + 1;
    }
  }
  Permutation sigma;
  if (cyclic) {
    int top = m;
    for (const auto& c : cycles)
      for (int v : c) top = std::max(top, v);
    if (top > m && m > 0)
      fail(ErrorKind::InvalidArgument, "cycle entry exceeds m = " + std::to_string(m));
    sigma.resize(top);
    std::iota(sigma.begin(), sigma.end(), 1);
    std::vector<bool> used(top + 1, false);
    for (const auto& c : cycles)
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] < 1) fail(ErrorKind::InvalidArgument, "cycle entries must be positive");
        if (used[c[k]]) fail(ErrorKind::NotAPermutation, "repeated entry in cycles: " + text);
        used[c[k]] = true;
        sigma[c[k] - 1] = c[(k + 1) % c.size()];
      }
    return sigma;
  }
  sigma = parse_int_list(text);
  std::vector<int> sorted(sigma);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (sorted[k] != static_cast<int>(k) + 1)
      fail(ErrorKind::NotAPermutation, "not a permutation of 1.." + std::to_string(sorted.size()));
  if (m > 0 && static_cast<int>(sigma.size()) > m)
    fail(ErrorKind::InvalidArgument, "permutation is longer than m = " + std::to_string(m));
  for (int v = static_cast<int>(sigma.size()) + 1; v <= m; ++v) sigma.push_back(v);
  return sigma;
}

namespace {

std::vector<int> cycle_lengths(const Permutation& sigma) {
  std::vector<int> lens;
  std::vector<bool> seen(sigma.size(), false);
  for (std::size_t s = 0; s < sigma.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t k = s; !seen[k]; k = sigma[k] - 1) {
      seen[k] = true;
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

}  // namespace

int permutation_order(const Permutation& sigma) {
  int order = 1;
  for (int len : cycle_lengths(sigma)) order = std::lcm(order, len);
  return order;
}

bool acts_nearly_freely(const Permutation& sigma) {
  const int order = permutation_order(sigma);
  int fixed = 0;
  for (int len : cycle_lengths(sigma)) {
    if (len == order) continue;
    if (len == 1 && ++fixed <= 1) continue;
    return false;
  }
  return true;
}

Filling sigma_action(const Filling& f, const Permutation& sigma) {
  if (f.max_entry() > static_cast<int>(sigma.size()))
    fail(ErrorKind::InvalidArgument, "filling has entries outside the permuted range");
  auto sets = f.column_sets();
  for (auto& s : sets) {
    for (int& v : s) v = sigma[v - 1];
    std::sort(s.begin(), s.end());
  }
  return from_column_sets(f.shape(), sets);
}

CspReport sigma_csp_suite(const SkewShape& shape, int m, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != m)
    fail(ErrorKind::InvalidArgument, "permutation must act on exactly m letters");
  const int n = permutation_order(sigma);
  CspReport rep;
  rep.action = "sigma";
  rep.shape = shape.to_string();
  rep.n = n;
  rep.m = m;
  rep.method = "orbits";
  std::vector<Filling> xs;
  if (shape.max_column_height() <= m) {
    SymPoly e = macdonald_e(shape, m).map_coeffs([](const QPoly& c) { return QPoly(c.at_one()); });
    const QPoly raw = principal_spec(e, SpecMode::Powers);
    rep.poly = raw.shifted(-raw.low_degree().value_or(0));
    if (rep.poly != raw) rep.unnormalized = raw;
    xs = enumerate_cof(shape, m);
  }
  auto fixed =
      fixed_from_orbits(sizes_of(orbits_of(xs, [&](const Filling& f) { return sigma_action(f, sigma); })), n);
  for (int d = 1; d <= n; ++d) {
    CspCheck c;
    c.d = d;
    c.fixed = fixed[d];
    c.f_at_root = eval_at_unity(rep.poly, n / std::gcd(n, d));
    c.ok = matches(c.f_at_root, c.fixed);
    if (rep.unnormalized && !matches(eval_at_unity(*rep.unnormalized, n / std::gcd(n, d)), c.fixed))
      rep.unnormalized_ok = false;
    if (!c.f_at_root.is_integer() && rep.note.empty())
      rep.note = "f(xi^" + std::to_string(d) + ") = " + cyc_text(c.f_at_root) + " is not an integer";
    rep.checks.push_back(std::move(c));
  }
  if (!rep.unnormalized_ok)
    rep.note += std::string(rep.note.empty() ? "" : "; ") + "unnormalized " +
                rep.unnormalized->to_string() + " fails";
  if (!acts_nearly_freely(sigma)) {
    rep.applicable = false;
    std::string why = "permutation does not act nearly freely";
    rep.note = rep.note.empty() ? why : why + "; " + rep.note;
  }
  return rep;
}

std::map<int, int> unity_exponents(const Partition& mu, int d) {
  std::map<int, int> out;
  const Partition conj = mu.conjugate();
  for (int h : conj.parts()) out[h] += d;
  return out;
}

BigInt unity_formula(const Partition& mu, int n, int d, int m) {
  if (d < 1 || n < 1 || n % d != 0) fail(ErrorKind::InvalidArgument, "d must divide n");
  BigInt out = 1;
  for (const auto& [j, e] : unity_exponents(mu, d)) {
    BigInt b = binomial(m, j), p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), e);
    out *= p;
  }
  return out;
}

}  // namespace cofsieve
