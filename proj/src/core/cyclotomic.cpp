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

#include "core/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "core/error.hpp"

namespace cofsieve {

const QPoly& cyclotomic(int e) {
  if (e < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, QPoly> cache;  // node-based: references stay valid
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  QPoly p = QPoly::monomial(e) - QPoly(1);
  for (int d = 1; d < e; ++d)
    if (e % d == 0) p = p.exact_div(cyclotomic(d));
  std::lock_guard lock(mu);
  return cache.emplace(e, std::move(p)).first->second;
}

std::optional<BigInt> CyclotomicValue::as_integer() const {
  if (residue.is_constant()) return residue.constant_term();
  return std::nullopt;
}

CyclotomicValue operator*(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.order != b.order) fail(ErrorKind::InvalidArgument, "mismatched root orders");
  return eval_at_unity(a.residue * b.residue, a.order);
}

CyclotomicValue operator+(const CyclotomicValue& a, const CyclotomicValue& b) {
  if (a.order != b.order) fail(ErrorKind::InvalidArgument, "mismatched root orders");
  return eval_at_unity(a.residue + b.residue, a.order);
}

CyclotomicValue eval_at_unity(const QPoly& f, int e) {
  return {e, f.divmod_monic(cyclotomic(e)).second};
}

bool q_lucas_check(int n, int k, int d) {
  if (d < 1) fail(ErrorKind::InvalidArgument, "d must be positive");
  const int n1 = n / d, n0 = n % d, k1 = k / d, k0 = k % d;
  auto lhs = eval_at_unity(q_binomial(n, k), d);
  auto rhs = eval_at_unity(QPoly(binomial(n1, k1)) * q_binomial(n0, k0), d);
  return lhs == rhs;
}

}  // namespace cofsieve
