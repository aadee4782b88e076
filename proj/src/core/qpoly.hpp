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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cofsieve {

using BigInt = mpz_class;

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored densely by degree and kept trimmed, so the zero polynomial has an
/// empty coefficient vector and degree() == std::nullopt.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor): constants promote freely
  QPoly(const BigInt& c);  // NOLINT
  explicit QPoly(std::vector<BigInt> coeffs);

  /// q^k.
  static QPoly monomial(int k, const BigInt& c = 1);
  /// Parses the text form produced by to_string ("1+q+2*q^2", "q^3-q", "0").
  static QPoly parse(std::string_view text);

  std::optional<int> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }
  /// Lowest degree with a nonzero coefficient.
  std::optional<int> low_degree() const noexcept;
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  BigInt constant_term() const { return c_.empty() ? BigInt(0) : c_[0]; }
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const noexcept { return c_; }
  int num_terms() const noexcept;

  BigInt eval(const BigInt& q) const;
  BigInt at_one() const;
  /// True when every coefficient is non-negative.
  bool nonnegative() const;
  /// q^deg f(1/q) == f up to a shift; used for palindromicity checks.
  bool is_palindromic() const;

  /// f(q^k).
  QPoly substitute_power(int k) const;
  /// q^k * f for k >= 0; for k < 0 requires divisibility by q^{-k}.
  QPoly shifted(int k) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator-(QPoly a);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Division by a monic polynomial. Returns {quotient, remainder}.
  std::pair<QPoly, QPoly> divmod_monic(const QPoly& d) const;
  /// Exact division; throws InvalidArgument when d does not divide *this
  /// or d's leading coefficient is not a unit.
  QPoly exact_div(const QPoly& d) const;

  /// Canonical ascending text form, e.g. "2+q-3*q^4"; zero is "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// [n]_q = 1 + q + ... + q^{n-1}; zero for n <= 0.
QPoly q_integer(int n);
/// [n]_q!; zero for n < 0.
QPoly q_factorial(int n);
/// Gaussian binomial; zero unless 0 <= k <= n.
QPoly q_binomial(int n, int k);
/// [n; k_1,...,k_r]_q with n = sum k_i; zero if any part is negative.
QPoly q_multinomial(const std::vector<int>& parts);

BigInt binomial(int n, int k);
BigInt factorial(int n);

}  // namespace cofsieve
