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

#include "symfunc/sympoly.hpp"

#include <algorithm>
#include <json.hpp>

#include "core/error.hpp"
#include "symfunc/ssyt.hpp"

namespace cofsieve {

SymPoly::SymPoly(int m, Basis basis) : m_(m), basis_(basis) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "number of variables must be positive");
}

BigInt orbit_size(const Partition& nu, int m) {
  if (nu.length() > m) return 0;
  BigInt r = factorial(m) / factorial(m - nu.length());
  for (int v = 1; v <= nu[0]; ++v) r /= factorial(nu.mult_count(v));
  return r;
}

SymPoly SymPoly::from_exponents(int m, const std::map<std::vector<int>, QPoly>& terms) {
  SymPoly out(m, Basis::Monomial);
  std::map<Partition, BigInt> seen;
  for (const auto& [exps, c] : terms) {
    if (static_cast<int>(exps.size()) != m)
      fail(ErrorKind::InvalidArgument, "exponent vector length differs from m");
    if (c.is_zero()) continue;
    std::vector<int> sorted(exps);
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    Partition key(sorted);
    auto it = terms.find(sorted);
    if (it == terms.end() || !(it->second == c))
      fail(ErrorKind::NonSymmetricInput,
           "coefficient differs across the orbit of " + key.to_bracket_string());
    seen[key] += 1;
    if (exps == sorted) out.terms_.emplace(key, c);
  }
  for (const auto& [key, n] : seen)
    if (n != orbit_size(key, m))
      fail(ErrorKind::NonSymmetricInput, "incomplete orbit for " + key.to_bracket_string());
  return out;
}

SymPoly SymPoly::monomial(const Partition& nu, int m) {
  SymPoly out(m, Basis::Monomial);
  if (nu.length() <= m) out.terms_.emplace(nu, QPoly(1));
  return out;
}

SymPoly SymPoly::schur(const Partition& lambda, int m) {
  SymPoly out(m, Basis::Monomial);
  for (const auto& nu : partitions_of(lambda.size(), m)) {
    BigInt k = kostka_number(lambda, nu);
    if (k != 0) out.terms_.emplace(nu, QPoly(k));
  }
  return out;
}

SymPoly SymPoly::schur_basis(const Partition& lambda, int m) {
  SymPoly out(m, Basis::Schur);
  out.terms_.emplace(lambda, QPoly(1));
  return out;
}

SymPoly SymPoly::elementary(int j, int m) {
  if (j < 0) fail(ErrorKind::InvalidArgument, "negative degree");
  return monomial(Partition(std::vector<int>(j, 1)), m);
}

SymPoly SymPoly::complete(int k, int m) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative degree");
  SymPoly out(m, Basis::Monomial);
  for (const auto& nu : partitions_of(k, m)) out.terms_.emplace(nu, QPoly(1));
  return out;
}

SymPoly SymPoly::power_sum(int k, int m) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "power sum degree must be positive");
  return monomial(Partition{k}, m);
}

QPoly SymPoly::coeff(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QPoly() : it->second;
}

void SymPoly::add_term(const Partition& key, const QPoly& c) {
  if (basis_ == Basis::Monomial && key.length() > m_)
    fail(ErrorKind::InvalidArgument, "monomial key longer than the number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> SymPoly::degree() const {
  std::optional<int> d;
  for (const auto& [key, c] : terms_) {
    if (d && *d != key.size()) return std::nullopt;
    d = key.size();
  }
  return d;
}

namespace {
void require_compatible(const SymPoly& a, const SymPoly& b) {
  if (a.basis() != b.basis() || a.nvars() != b.nvars())
    fail(ErrorKind::InvalidArgument, "operands differ in basis or number of variables");
}
}  // namespace

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_compatible(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SymPoly SymPoly::scaled(const QPoly& c) const {
  return map_coeffs([&](const QPoly& x) { return x * c; });
}

SymPoly SymPoly::map_coeffs(const std::function<QPoly(const QPoly&)>& g) const {
  SymPoly out(m_, basis_);
  for (const auto& [k, c] : terms_) out.add_term(k, g(c));
  return out;
}

SymPoly SymPoly::with_nvars(int m) const {
  SymPoly out(m, basis_);
  for (const auto& [k, c] : terms_) {
    if (basis_ == Basis::Monomial && k.length() > m) continue;
    out.terms_.emplace(k, c);
  }
  return out;
}

namespace {

// Number of pairs (α, β) of rearrangements of a and b with α + β = c, for
// every weakly decreasing c. Positions are chosen left to right so that the
// running sum stays weakly decreasing.
std::map<Partition, BigInt> monomial_product(const Partition& a, const Partition& b, int m) {
  std::map<int, int> ra, rb;
  for (int i = 0; i < m; ++i) {
    ++ra[a[i]];
    ++rb[b[i]];
  }
  std::map<Partition, BigInt> out;
  std::vector<int> sum(m);
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      out[Partition(sum)] += 1;
      return;
    }
    for (auto& [va, na] : ra) {
      if (na == 0) continue;
      for (auto& [vb, nb] : rb) {
        if (nb == 0) continue;
        int s = va + vb;
        if (i > 0 && s > sum[i - 1]) continue;
        sum[i] = s;
        --na;
        --nb;
        rec(i + 1);
        ++na;
        ++nb;
      }
    }
  };
  rec(0);
  return out;
}

}  // namespace

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  require_compatible(a, b);
  if (a.basis() != Basis::Monomial)
    fail(ErrorKind::InvalidArgument, "products are taken in the monomial basis");
  SymPoly out(a.nvars(), Basis::Monomial);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      QPoly c = ca * cb;
      for (const auto& [kc, n] : monomial_product(ka, kb, a.nvars())) out.add_term(kc, c * QPoly(n));
    }
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  const char tag = basis_ == Basis::Schur ? 's' : 'm';
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string key = std::string(1, tag) + k.to_bracket_string();
    bool negative = c.num_terms() == 1 && c.coeffs().back() < 0;
    QPoly shown = negative ? -c : c;
    if (!first) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    first = false;
    if (shown == QPoly(1)) {
      s += key;
    } else if (shown.num_terms() == 1) {
      s += shown.to_string() + "*" + key;
    } else {
      s += "(" + shown.to_string() + ")*" + key;
    }
  }
  return s;
}

std::string SymPoly::to_json() const {
  nlohmann::ordered_json j;
  j["m"] = m_;
  j["basis"] = basis_ == Basis::Schur ? "schur" : "monomial";
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [k, c] : terms_)
    j["terms"].push_back({{"key", k.parts()}, {"coeff", c.to_string()}});
  return j.dump();
}

SymPoly to_schur(const SymPoly& f) {
  if (f.basis() == Basis::Schur) return f;
  SymPoly rest = f;
  SymPoly out(f.nvars(), Basis::Schur);
  while (!rest.is_zero()) {
    const auto [lead, c] = *rest.terms().begin();  // lex-largest key
    if (lead.length() > f.nvars())
      fail(ErrorKind::NonSymmetricInput, "monomial key exceeds the number of variables");
    out.add_term(lead, c);
    rest -= SymPoly::schur(lead, f.nvars()).scaled(c);
    if (!rest.coeff(lead).is_zero())
      fail(ErrorKind::NonSymmetricInput, "elimination failed at " + lead.to_bracket_string());
  }
  return out;
}

SymPoly from_schur(const SymPoly& f) {
  if (f.basis() == Basis::Monomial) return f;
  SymPoly out(f.nvars(), Basis::Monomial);
  for (const auto& [k, c] : f.terms()) {
    if (k.length() > f.nvars()) continue;
    out += SymPoly::schur(k, f.nvars()).scaled(c);
  }
  return out;
}

SymPoly omega_on_schur(const SymPoly& f) {
  if (f.basis() != Basis::Schur) fail(ErrorKind::InvalidArgument, "omega expects the Schur basis");
  SymPoly out(f.nvars(), Basis::Schur);
  for (const auto& [k, c] : f.terms()) out.add_term(k.conjugate(), c);
  return out;
}

SymPoly plethysm_pk(int k, const SymPoly& f) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "plethysm index must be positive");
  if (f.basis() != Basis::Monomial)
    fail(ErrorKind::InvalidArgument, "plethysm expects the monomial basis");
  SymPoly out(f.nvars(), Basis::Monomial);
  for (const auto& [key, c] : f.terms()) out.add_term(key.scaled(k), c);
  return out;
}

bool pleth_omega_check(int k, const SymPoly& f) {
  auto n = f.degree();
  if (!n) return f.is_zero();
  // Enough variables that no Schur function of degree k·n vanishes, so the
  // comparison holds as an identity of symmetric functions.
  const int big = std::max(f.nvars(), k * *n);
  SymPoly fs = to_schur(f).with_nvars(big);
  SymPoly lhs = plethysm_pk(k, from_schur(omega_on_schur(fs)));
  SymPoly rhs = from_schur(omega_on_schur(to_schur(plethysm_pk(k, from_schur(fs)))));
  if (((k + 1) * *n) % 2 != 0) rhs = rhs.scaled(QPoly(-1));
  return lhs == rhs;
}

QPoly principal_spec(const SymPoly& f, SpecMode mode) {
  SymPoly g = from_schur(f);
  const int m = g.nvars();
  QPoly out;
  for (const auto& [key, c] : g.terms()) {
    if (mode == SpecMode::Ones) {
      out += c * QPoly(orbit_size(key, m));
      continue;
    }
    if (!c.is_constant())
      fail(ErrorKind::MixedParameters,
           "substituting x_i = q^(i-1) into q-dependent coefficients");
    std::vector<int> exps(m, 0);
    for (int i = 0; i < key.length(); ++i) exps[i] = key[i];
    std::sort(exps.begin(), exps.end());
    QPoly orbit;
    do {
      int e = 0;
      for (int i = 0; i < m; ++i) e += i * exps[i];
      orbit += QPoly::monomial(e);
    } while (std::next_permutation(exps.begin(), exps.end()));
    out += c * orbit;
  }
  return out;
}

QPoly coeff_monomial(const SymPoly& f, const Partition& nu) {
  if (f.basis() != Basis::Monomial)
    fail(ErrorKind::InvalidArgument, "coeff_monomial expects the monomial basis");
  return f.coeff(nu);
}

}  // namespace cofsieve
