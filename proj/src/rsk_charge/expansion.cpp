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

#include "rsk_charge/expansion.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "rsk_charge/rsk.hpp"
#include "symfunc/ssyt.hpp"

namespace cofsieve {

Composition column_content(const SkewShape& shape) {
  return Composition{shape.column_heights()};
}

QPoly kq_coefficient(const SkewShape& shape, const Partition& nu) {
  const Partition muc = shape.inner().conjugate();
  QPoly out;
  for_each_ssyt(nu, Partition(), column_content(shape).parts, [&](const TableauRows& rows) {
    out += QPoly::monomial(postfix_charge(muc, Tableau{rows, false}.reading_word()));
  });
  return out;
}

SymPoly schur_expansion_via_charge(const SkewShape& shape, int m) {
  if (m <= 0) m = std::max(1, shape.size());
  SymPoly out(m, Basis::Schur);
  for (const auto& nu : partitions_of(shape.size())) out.add_term(nu.conjugate(), kq_coefficient(shape, nu));
  return out;
}

std::vector<LrCheckRow> lr_checks(const SkewShape& shape) {
  const Partition& lam = shape.outer();
  const Partition& mu = shape.inner();
  const int big = std::max(1, lam.size());
  const auto alpha = column_content(shape).parts;
  std::vector<LrCheckRow> out;
  for (const auto& nu : partitions_of(shape.size())) {
    LrCheckRow row;
    row.nu = nu;
    row.coefficient = kq_coefficient(shape, nu);
    SymPoly prod = SymPoly::schur(mu, big) * SymPoly::schur(nu.conjugate(), big);
    row.lr_coefficient = to_schur(prod).coeff(lam).constant_term();
    row.kostka = count_ssyt(nu, Partition(), alpha);
    row.ok = row.coefficient.constant_term() == row.lr_coefficient &&
             row.coefficient.at_one() == row.kostka;
    out.push_back(std::move(row));
  }
  return out;
}

bool product_check(const Partition& lambda, const Partition& mu) {
  const int c = mu[0], r = lambda.length();
  std::vector<int> kappa;
  for (int p : lambda.parts()) kappa.push_back(p + c);
  kappa.insert(kappa.end(), mu.parts().begin(), mu.parts().end());
  SkewShape shape{Partition(kappa), Partition(std::vector<int>(r, c))};
  const int m = std::max(1, lambda.size() + mu.size());
  SymPoly lhs = macdonald_e(SkewShape(lambda), m) * macdonald_e(SkewShape(mu), m);
  return lhs == from_schur(schur_expansion_via_charge(shape, m));
}

MahonianResult mahonian_check(const Partition& mu, int n) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "n must be non-negative");
  const Partition muc = mu.conjugate();
  std::vector<int> lc(std::max(n, muc.length()), 0);
  for (std::size_t j = 0; j < lc.size(); ++j) lc[j] = muc[j] + (static_cast<int>(j) < n ? 1 : 0);
  MahonianResult res;
  res.lambda = Partition(lc).conjugate();
  Word sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  do res.lhs += QPoly::monomial(postfix_charge(muc, sigma));
  while (std::next_permutation(sigma.begin(), sigma.end()));
  std::vector<int> diff;
  QPoly prod(1);
  for (int i = 0; i < res.lambda.length(); ++i) {
    diff.push_back(res.lambda[i] - mu[i]);
    prod *= q_factorial(diff.back());
  }
  // n!/∏(λ_i-μ_i)! is a multinomial coefficient since Σ(λ_i-μ_i) = n.
  BigInt multinomial = factorial(n);
  for (int d : diff) multinomial /= factorial(d);
  res.rhs = prod * QPoly(multinomial);
  res.ok = res.lhs == res.rhs;
  return res;
}

}  // namespace cofsieve
