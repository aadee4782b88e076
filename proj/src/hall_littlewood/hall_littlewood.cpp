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

#include "hall_littlewood/hall_littlewood.hpp"

#include "core/cyclotomic.hpp"
#include "core/error.hpp"
#include "fillings/filling.hpp"
#include "rsk_charge/rsk.hpp"
#include "symfunc/ssyt.hpp"

namespace cofsieve {

QPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    fail(ErrorKind::SizeMismatch, "|" + lambda.to_bracket_string() + "| != |" +
                                      mu.to_bracket_string() + "|");
  QPoly out;
  for_each_ssyt(lambda, Partition(), mu.parts(), [&](const TableauRows& rows) {
    out += QPoly::monomial(charge_tableau(Tableau{rows, false}));
  });
  return out;
}

QPoly kostka_foulkes(const Partition& lambda, const Composition& mu) {
  return kostka_foulkes(lambda, mu.sorted());
}

SymPoly transformed_hl(const Partition& mu, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "need at least one variable");
  SymPoly out(m, Basis::Schur);
  for (const auto& lam : partitions_of(mu.size())) out.add_term(lam, kostka_foulkes(lam, mu));
  return out;
}

namespace {

// Schur keys with more than m parts vanish in m variables.
SymPoly drop_long_keys(const SymPoly& f) {
  SymPoly out(f.nvars(), f.basis());
  for (const auto& [key, c] : f.terms())
    if (key.length() <= f.nvars()) out.add_term(key, c);
  return out;
}

}  // namespace

bool verify_e_as_hl(const Partition& lambda, int m) {
  if (m < std::max(1, lambda.length()))
    fail(ErrorKind::TooFewVariables, "need m >= " + std::to_string(lambda.length()));
  const SymPoly lhs = to_schur(macdonald_e(SkewShape(lambda), m));
  const SymPoly rhs = drop_long_keys(omega_on_schur(transformed_hl(lambda.conjugate(), m)));
  return lhs == rhs;
}

RefinedCoefficient refined_coefficient(const Partition& lambda, const Composition& nu) {
  if (lambda.size() != nu.size())
    fail(ErrorKind::SizeMismatch, "|" + lambda.to_bracket_string() + "| != |" + nu.to_string() + "|");
  RefinedCoefficient out;
  // Fillings only exist when every column fits in the available values.
  if (nu.length() >= lambda.length())
    for (const auto& f : enumerate_cof_content(SkewShape(lambda), nu))
      out.lhs += QPoly::monomial(maj(f));
  const Partition sorted = nu.sorted();
  const Partition lc = lambda.conjugate();
  for (const auto& mu : partitions_of(lambda.size())) {
    const BigInt k = kostka_number(mu, sorted);
    if (k == 0) continue;
    out.rhs += kostka_foulkes(mu.conjugate(), lc) * QPoly(k);
  }
  return out;
}

bool refined_coefficient_check(const Partition& lambda, const Composition& nu) {
  return refined_coefficient(lambda, nu).ok();
}

SymPoly reduce_at_unity(const SymPoly& f, int d) {
  const QPoly& phi = cyclotomic(d);
  return f.map_coeffs([&phi](const QPoly& c) { return c.divmod_monic(phi).second; });
}

namespace {

SymPoly hl_at_unity(const Partition& mu, int m, int d) {
  return reduce_at_unity(from_schur(transformed_hl(mu, m)), d);
}

}  // namespace

HlFactorization hl_root_factorization(const Partition& lambda, int d, int m) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be positive");
  HlFactorization out;
  out.lambda = lambda;
  out.d = d;
  std::vector<int> tilde;
  for (int j = lambda.empty() ? 0 : lambda[0]; j >= 1; --j) {
    const int mult = lambda.mult_count(j);
    tilde.insert(tilde.end(), mult % d, j);
    if (mult / d > 0) out.rectangles.emplace_back(Partition(std::vector<int>(d, j)), mult / d);
  }
  out.tilde = Partition(std::move(tilde));
  out.lhs = hl_at_unity(lambda, m, d);
  out.rhs = hl_at_unity(out.tilde, m, d);
  for (const auto& [rect, times] : out.rectangles) {
    const SymPoly factor = hl_at_unity(rect, m, d);
    for (int t = 0; t < times; ++t) out.rhs = reduce_at_unity(out.rhs * factor, d);
  }
  return out;
}

bool hl_rectangle_check(int k, int n, int m) {
  if (k < 1 || n < 1) fail(ErrorKind::InvalidArgument, "k and n must be positive");
  const SymPoly lhs = hl_at_unity(Partition(std::vector<int>(n, k)), m, n);
  SymPoly rhs = plethysm_pk(n, SymPoly::complete(k, m));
  if ((k * (n - 1)) % 2 != 0) rhs = rhs.scaled(QPoly(-1));
  return lhs == reduce_at_unity(rhs, n);
}

bool hl_root_factorization_check(const Partition& lambda, int d, int m) {
  const HlFactorization f = hl_root_factorization(lambda, d, m);
  if (!f.ok()) return false;
  for (const auto& [rect, times] : f.rectangles)
    if (!hl_rectangle_check(rect[0], d, m)) return false;
  return true;
}

}  // namespace cofsieve
