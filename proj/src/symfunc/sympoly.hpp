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

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/partition.hpp"
#include "core/qpoly.hpp"

namespace cofsieve {

enum class Basis { Monomial, Schur };

/// Symmetric polynomial in m variables with QPoly coefficients.
///
/// Monomial keys always have length <= m. Schur keys may be longer: they are
/// kept formally (so ω stays an involution) and vanish on evaluation, i.e.
/// from_schur drops them.
class SymPoly {
 public:
  using Terms = std::map<Partition, QPoly, std::greater<>>;  // decreasing lex

  SymPoly(int m, Basis basis);

  /// Builds a monomial-basis polynomial from exponent vectors (length m),
  /// checking that the coefficient is constant on every S_m orbit.
  /// Throws NonSymmetricInput otherwise.
  static SymPoly from_exponents(int m, const std::map<std::vector<int>, QPoly>& terms);

  static SymPoly monomial(const Partition& nu, int m);  // m_ν
  static SymPoly schur(const Partition& lambda, int m);  // monomial expansion of s_λ
  static SymPoly schur_basis(const Partition& lambda, int m);  // the single key s_λ
  static SymPoly elementary(int j, int m);
  static SymPoly complete(int k, int m);
  static SymPoly power_sum(int k, int m);

  int nvars() const noexcept { return m_; }
  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  QPoly coeff(const Partition& key) const;
  void add_term(const Partition& key, const QPoly& c);
  /// Common degree of all keys; nullopt when empty or inhomogeneous.
  std::optional<int> degree() const;

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  SymPoly scaled(const QPoly& c) const;
  /// Product of two monomial-basis polynomials in the same number of variables.
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  /// Applies g to every coefficient, dropping zero results.
  SymPoly map_coeffs(const std::function<QPoly(const QPoly&)>& g) const;
  /// Same polynomial, reinterpreted in a different number of variables. Only
  /// meaningful in the Schur basis, or when the monomial keys still fit.
  SymPoly with_nvars(int m) const;

  std::string to_string() const;  // e.g. "s[2,1] + q*s[1,1,1]"
  std::string to_json() const;

 private:
  int m_;
  Basis basis_;
  Terms terms_;
};

SymPoly to_schur(const SymPoly& f);
SymPoly from_schur(const SymPoly& f);
SymPoly omega_on_schur(const SymPoly& f);
SymPoly plethysm_pk(int k, const SymPoly& f);
bool pleth_omega_check(int k, const SymPoly& f);

enum class SpecMode { Ones, Powers };
QPoly principal_spec(const SymPoly& f, SpecMode mode);
QPoly coeff_monomial(const SymPoly& f, const Partition& nu);

/// Number of distinct rearrangements of ν (padded with zeros) in m slots.
BigInt orbit_size(const Partition& nu, int m);

}  // namespace cofsieve
