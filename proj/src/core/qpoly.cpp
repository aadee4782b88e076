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

#include "core/qpoly.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace cofsieve {

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const BigInt& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::monomial(int k, const BigInt& c) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

std::optional<int> QPoly::low_degree() const noexcept {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

BigInt QPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

int QPoly::num_terms() const noexcept {
  return static_cast<int>(std::count_if(c_.begin(), c_.end(),
                                        [](const BigInt& x) { return x != 0; }));
}

BigInt QPoly::eval(const BigInt& q) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + *it;
  return r;
}

BigInt QPoly::at_one() const {
  BigInt r = 0;
  for (const auto& x : c_) r += x;
  return r;
}

bool QPoly::nonnegative() const {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& x) { return x >= 0; });
}

bool QPoly::is_palindromic() const {
  auto lo = low_degree();
  if (!lo) return true;
  int a = *lo, b = *degree();
  while (a < b)
    if (c_[a++] != c_[b--]) return false;
  return true;
}

QPoly QPoly::substitute_power(int k) const {
  if (k < 1) fail(ErrorKind::InvalidArgument, "substitute_power needs k >= 1");
  if (c_.empty()) return {};
  std::vector<BigInt> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::shifted(int k) const {
  if (c_.empty()) return {};
  if (k >= 0) {
    std::vector<BigInt> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return QPoly(std::move(v));
  }
  if (*low_degree() < -k) fail(ErrorKind::InvalidArgument, "shift below degree zero");
  return QPoly(std::vector<BigInt>(c_.begin() - k, c_.end()));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(v));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly operator-(QPoly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

std::pair<QPoly, QPoly> QPoly::divmod_monic(const QPoly& d) const {
  if (d.is_zero() || d.c_.back() != 1)
    fail(ErrorKind::InvalidArgument, "divisor must be monic");
  std::vector<BigInt> r(c_);
  const std::size_t dd = d.c_.size() - 1;
  if (r.size() <= dd) return {QPoly(), *this};
  std::vector<BigInt> quo(r.size() - dd);
  for (std::size_t i = r.size(); i-- > dd;) {
    const BigInt t = r[i];
    if (t == 0) continue;
    quo[i - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) r[i - dd + j] -= t * d.c_[j];
  }
  r.resize(dd);
  return {QPoly(std::move(quo)), QPoly(std::move(r))};
}

QPoly QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) fail(ErrorKind::InvalidArgument, "division by zero polynomial");
  const BigInt lead = d.c_.back();
  if (lead != 1 && lead != -1)
    fail(ErrorKind::InvalidArgument, "exact_div needs a unit leading coefficient");
  auto [q, r] = (lead == 1 ? *this : -*this).divmod_monic(lead == 1 ? d : -d);
  if (!r.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division is not exact");
  return q;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigInt& x = c_[i];
    if (x == 0) continue;
    BigInt mag = abs(x);
    if (s.empty()) {
      if (x < 0) s += '-';
    } else {
      s += x < 0 ? '-' : '+';
    }
    if (i == 0) {
      s += mag.get_str();
      continue;
    }
    if (mag != 1) s += mag.get_str() + "*";
    s += 'q';
    if (i > 1) s += '^' + std::to_string(i);
  }
  return s;
}

QPoly QPoly::parse(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) fail(ErrorKind::Parse, "empty polynomial");
  std::size_t i = 0;
  QPoly out;
  auto bad = [&]() { fail(ErrorKind::Parse, "malformed polynomial '" + std::string(text) + "'"); };
  while (i < t.size()) {
    int sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad();
    }
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    BigInt coef = 1;
    bool have_num = i > start;
    if (have_num) coef = BigInt(t.substr(start, i - start));
    int exp = 0;
    if (i < t.size() && t[i] == '*') {
      if (!have_num) bad();
      ++i;
      if (i >= t.size() || t[i] != 'q') bad();
    }
    if (i < t.size() && t[i] == 'q') {
      ++i;
      exp = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        std::size_t es = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == es) bad();
        exp = std::stoi(t.substr(es, i - es));
      }
    } else if (!have_num) {
      bad();
    }
    out += QPoly::monomial(exp, sign * coef);
  }
  return out;
}

BigInt factorial(int n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(std::max(n, 0)));
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

QPoly q_integer(int n) {
  if (n <= 0) return {};
  return QPoly(std::vector<BigInt>(n, BigInt(1)));
}

QPoly q_factorial(int n) {
  if (n < 0) return {};
  QPoly r(1);
  for (int i = 2; i <= n; ++i) r *= q_integer(i);
  return r;
}

QPoly q_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return {};
  // Pascal recurrence keeps every intermediate integral.
  std::vector<QPoly> row{QPoly(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<QPoly> next(i + 1);
    next[0] = QPoly(1);
    next[i] = QPoly(1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j].shifted(j);
    row = std::move(next);
  }
  return row[k];
}

QPoly q_multinomial(const std::vector<int>& parts) {
  int n = 0;
  QPoly r(1);
  for (int p : parts) {
    if (p < 0) return {};
    n += p;
    r *= q_binomial(n, p);
  }
  return r;
}

}  // namespace cofsieve
