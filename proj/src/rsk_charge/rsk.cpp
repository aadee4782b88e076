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

#include "rsk_charge/rsk.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

#include "core/error.hpp"

namespace cofsieve {

BurgeWord BurgeWord::from_biletters(std::vector<Biletter> letters) {
  for (const auto& b : letters)
    if (b.top < 1 || b.bottom < 1) fail(ErrorKind::InvalidArgument, "biletters must be positive");
  std::sort(letters.begin(), letters.end(), [](const Biletter& a, const Biletter& b) {
    return a.top != b.top ? a.top < b.top : a.bottom > b.bottom;
  });
  if (std::adjacent_find(letters.begin(), letters.end()) != letters.end())
    fail(ErrorKind::InvalidArgument, "Burge words cannot repeat a biletter");
  BurgeWord w;
  w.letters_ = std::move(letters);
  return w;
}

BurgeWord BurgeWord::from_rows(const Word& top, const Word& bottom) {
  if (top.size() != bottom.size())
    fail(ErrorKind::InvalidArgument, "Burge word rows differ in length");
  std::vector<Biletter> letters;
  for (std::size_t i = 0; i < top.size(); ++i) letters.push_back({top[i], bottom[i]});
  BurgeWord w = from_biletters(letters);
  if (w.letters_ != letters)
    fail(ErrorKind::InvalidArgument, "biletters are not in Burge order");
  return w;
}

namespace {
Word parse_row(const std::string& line) {
  std::string s(line);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  Word out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad integer '" + tok + "' in Burge word");
    }
  }
  return out;
}
}  // namespace

BurgeWord BurgeWord::parse(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  try {
    if (text[first] == '{') {
      auto j = nlohmann::json::parse(text);
      return from_rows(j.at("top").get<Word>(), j.at("bottom").get<Word>());
    }
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    if (lines.size() != 2) fail(ErrorKind::Parse, "expected two lines (top and bottom rows)");
    return from_rows(parse_row(lines[0]), parse_row(lines[1]));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad Burge word JSON: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(ErrorKind::Parse, e.what());
  }
}

Word BurgeWord::top() const {
  Word w;
  for (const auto& b : letters_) w.push_back(b.top);
  return w;
}

Word BurgeWord::bottom() const {
  Word w;
  for (const auto& b : letters_) w.push_back(b.bottom);
  return w;
}

std::string BurgeWord::to_json() const {
  nlohmann::ordered_json j;
  j["top"] = top();
  j["bottom"] = bottom();
  return j.dump();
}

Partition Tableau::shape() const {
  std::vector<int> p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return Partition(p);
}

Word Tableau::reading_word() const {
  Word w;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

Tableau Tableau::transpose() const {
  Tableau t;
  t.transposed = !transposed;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (t.rows.size() <= j) t.rows.resize(j + 1);
      t.rows[j].push_back(rows[i][j]);
    }
  return t;
}

bool Tableau::is_valid() const {
  if (transposed) return transpose().is_valid();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) return false;
    if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] < 1) return false;
      if (j > 0 && rows[i][j - 1] > rows[i][j]) return false;
      if (i > 0 && rows[i - 1][j] >= rows[i][j]) return false;
    }
  }
  return true;
}

Composition Tableau::content() const {
  Composition c;
  for (const auto& r : rows)
    for (int v : r) {
      if (static_cast<int>(c.parts.size()) < v) c.parts.resize(v, 0);
      ++c.parts[v - 1];
    }
  return c;
}

std::string Tableau::to_string() const {
  bool wide = false;
  for (const auto& r : rows)
    for (int v : r) wide = wide || v > 9;
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += '/';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (wide && j) s += ',';
      s += std::to_string(rows[i][j]);
    }
  }
  return s;
}

std::string Tableau::to_json() const {
  nlohmann::ordered_json j;
  std::vector<int> shape;
  for (const auto& r : rows) shape.push_back(static_cast<int>(r.size()));
  j["outer"] = shape;
  j["inner"] = std::vector<int>{};
  j["rows"] = rows;
  j["transposed"] = transposed;
  return j.dump();
}

BurgeWord burge_word(const Filling& f) {
  std::vector<Biletter> letters;
  const auto& sh = f.shape();
  for (int i = 0; i < sh.num_rows(); ++i)
    for (int j = sh.row_begin(i); j < sh.row_end(i); ++j) letters.push_back({f.at(i, j), j + 1});
  return BurgeWord::from_biletters(std::move(letters));
}

Word charge_word(const Filling& f) { return burge_word(f).bottom(); }

namespace {

// Inserts x into p; returns the row where a new cell was created.
std::size_t row_insert(std::vector<std::vector<int>>& p, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == p.size()) {
      p.push_back({x});
      return r;
    }
    auto& row = p[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return r;
    }
    std::swap(*it, x);
  }
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const BurgeWord& w) {
  Tableau p, q;
  q.transposed = true;
  for (const auto& b : w.letters()) {
    std::size_t r = row_insert(p.rows, b.bottom);
    if (q.rows.size() <= r) q.rows.resize(r + 1);
    q.rows[r].push_back(b.top);
  }
  return {p, q};
}

Tableau insert_word(const Word& w) {
  Tableau p;
  for (int x : w) row_insert(p.rows, x);
  return p;
}

BurgeWord rsk_inverse(const Tableau& p_in, const Tableau& q_in) {
  if (!(p_in.shape() == q_in.shape()))
    fail(ErrorKind::InvalidArgument, "P and Q have different shapes");
  Tableau p = p_in, q = q_in;
  std::vector<Biletter> out;
  while (!q.rows.empty()) {
    // The last insertion recorded the largest top letter, in its lowest cell.
    int tmax = 0;
    std::size_t row = 0;
    for (std::size_t r = 0; r < q.rows.size(); ++r)
      if (q.rows[r].back() >= tmax) {
        tmax = q.rows[r].back();
        row = r;
      }
    q.rows[row].pop_back();
    int y = p.rows[row].back();
    p.rows[row].pop_back();
    for (std::size_t r = row; r-- > 0;) {
      auto& cur = p.rows[r];
      auto it = std::lower_bound(cur.begin(), cur.end(), y);  // first entry >= y
      if (it == cur.begin()) fail(ErrorKind::InvalidArgument, "pair is not an RSK image");
      --it;  // rightmost entry strictly less than y
      std::swap(*it, y);
    }
    if (q.rows[row].empty()) {
      q.rows.pop_back();
      p.rows.pop_back();
    }
    out.push_back({tmax, y});
  }
  std::reverse(out.begin(), out.end());
  BurgeWord w = BurgeWord::from_biletters(out);
  if (w.letters() != out) fail(ErrorKind::InvalidArgument, "pair is not an RSK image");
  return w;
}

int charge_perm(const Word& sigma) {
  const int k = static_cast<int>(sigma.size());
  std::vector<int> inv(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    int v = sigma[i];
    if (v < 1 || v > k || inv[v] != 0)
      fail(ErrorKind::NotAPermutation, "not a permutation of 1.." + std::to_string(k));
    inv[v] = i + 1;
  }
  int c = 0;
  for (int i = 1; i < k; ++i)
    if (inv[i + 1] > inv[i]) c += k - i;  // i is not a descent of σ⁻¹
  return c;
}

namespace {
void require_partition_content(const Word& w) {
  std::vector<int> content;
  for (int v : w) {
    if (v < 1) fail(ErrorKind::NonPartitionContent, "letters must be positive");
    if (static_cast<int>(content.size()) < v) content.resize(v, 0);
    ++content[v - 1];
  }
  for (std::size_t i = 1; i < content.size(); ++i)
    if (content[i] > content[i - 1])
      fail(ErrorKind::NonPartitionContent, "word content is not a partition");
}
}  // namespace

std::vector<Word> standard_subwords(const Word& w) {
  require_partition_content(w);
  std::vector<Word> out;
  std::vector<int> rest(w);
  while (!rest.empty()) {
    const int n = static_cast<int>(rest.size());
    const int k = *std::max_element(rest.begin(), rest.end());
    std::vector<bool> marked(n, false);
    int pos = n;  // scanning starts just right of the end
    for (int v = 1; v <= k; ++v) {
      for (int step = 1; step <= n; ++step) {
        int p = ((pos - step) % n + n) % n;
        if (!marked[p] && rest[p] == v) {
          marked[p] = true;
          pos = p;
          break;
        }
      }
    }
    Word sub, left;
    for (int p = 0; p < n; ++p) (marked[p] ? sub : left).push_back(rest[p]);
    out.push_back(std::move(sub));
    rest = std::move(left);
  }
  return out;
}

int charge_word(const Word& w) {
  int c = 0;
  for (const auto& s : standard_subwords(w)) c += charge_perm(s);
  return c;
}

int charge_tableau(const Tableau& t) { return charge_word(t.reading_word()); }

int postfix_charge(const Partition& mu, const Word& w) {
  std::vector<int> content(mu.length(), 0);
  for (int v : w) {
    if (v < 1) fail(ErrorKind::ContentMismatch, "letters must be positive");
    if (static_cast<int>(content.size()) < v) content.resize(v, 0);
    ++content[v - 1];
  }
  for (std::size_t i = 0; i < content.size(); ++i) {
    content[i] += mu[i];
    if (i > 0 && content[i] > content[i - 1])
      fail(ErrorKind::ContentMismatch, "content of the word plus " + mu.to_bracket_string() +
                                           " is not a partition");
  }
  Word full(w);
  for (int i = mu.length(); i >= 1; --i) full.insert(full.end(), mu[i - 1], i);
  return charge_word(full);
}

}  // namespace cofsieve
