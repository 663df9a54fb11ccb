/* Copyright 2026 The lynpair Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef LYNPAIR_WORD_HPP
#define LYNPAIR_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lynpair/error.hpp"
#include "lynpair/numeric.hpp"

namespace lynpair {

using Letter = std::uint8_t;

// A finite sequence of letter indices. Index order is the alphabet order.
class Word {
 public:
  static constexpr std::size_t npos = std::string::npos;

  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) {
    for (Letter a : letters) letters_.push_back(static_cast<char>(a));
  }

  static Word letter(Letter a) { return Word{a}; }
  static Word power(const Word& w, std::size_t k) {
    Word out;
    for (std::size_t i = 0; i < k; ++i) out += w;
    return out;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  Letter front() const { return static_cast<Letter>(letters_.front()); }
  Letter back() const { return static_cast<Letter>(letters_.back()); }
  const std::string& bytes() const noexcept { return letters_; }

  Word slice(std::size_t pos, std::size_t len = npos) const { return Word(letters_.substr(pos, len)); }
  Word prefix(std::size_t len) const { return slice(0, len); }
  Word suffix_from(std::size_t pos) const { return slice(pos); }

  bool starts_with(const Word& w) const { return letters_.compare(0, w.size(), w.letters_) == 0 && w.size() <= size(); }
  bool ends_with(const Word& w) const {
    return w.size() <= size() && letters_.compare(size() - w.size(), w.size(), w.letters_) == 0;
  }
  std::size_t find(const Word& w, std::size_t pos = 0) const { return letters_.find(w.letters_, pos); }
  bool contains(const Word& w) const { return find(w) != npos; }

  Word reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend())); }

  Word& operator+=(const Word& w) {
    letters_ += w.letters_;
    return *this;
  }
  Word& operator+=(Letter a) {
    letters_.push_back(static_cast<char>(a));
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }

  friend bool operator==(const Word&, const Word&) = default;
  // Lexicographic order; a proper prefix is smaller.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    const int c = a.letters_.compare(b.letters_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  std::string letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.bytes()); }
};

// Per-letter occurrence counts.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t alphabet_size) : counts_(alphabet_size, 0) {}
  MultiDegree(const Word& w, std::size_t alphabet_size) : counts_(alphabet_size, 0) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      require(w[i] < alphabet_size, "letter outside alphabet");
      ++counts_[w[i]];
    }
  }

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint32_t operator[](std::size_t i) const { return counts_[i]; }
  std::uint32_t total() const {
    std::uint32_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  friend bool operator==(const MultiDegree&, const MultiDegree&) = default;
  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<std::uint32_t> counts_;
};

class Alphabet {
 public:
  Alphabet() : Alphabet(std::vector<std::string>{"x", "y"}) {}
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    require(!symbols_.empty(), "alphabet must not be empty");
    require(symbols_.size() <= 255, "alphabet too large");
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      require(!symbols_[i].empty(), "empty symbol name");
      for (char c : symbols_[i])
        require(c != ',' && c != '^' && c != '(' && c != ')' && c != ' ' && !(c >= '0' && c <= '9'),
                "symbol name contains a reserved character: " + symbols_[i]);
      for (std::size_t j = 0; j < i; ++j) require(symbols_[i] != symbols_[j], "duplicate symbol " + symbols_[i]);
    }
  }

  static Alphabet binary() { return Alphabet(); }

  // "x,y,z"
  static Alphabet parse(std::string_view csv) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
      const auto comma = csv.find(',', start);
      const auto end = comma == std::string_view::npos ? csv.size() : comma;
      std::string item(csv.substr(start, end - start));
      item.erase(0, item.find_first_not_of(' '));
      item.erase(item.find_last_not_of(' ') + 1);
      out.push_back(item);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return Alphabet(std::move(out));
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<Letter> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
  }

  void check(const Word& w) const {
    for (std::size_t i = 0; i < w.size(); ++i) require(w[i] < size(), "word uses a letter outside the alphabet");
  }

  // Accepts plain symbol strings and the shorthand "xy^3", "(xy)^2y".
  Word parse_word(std::string_view text) const {
    std::size_t pos = 0;
    Word w = parse_sequence(text, pos, 0);
    require(pos == text.size(), "unbalanced parenthesis in word: " + std::string(text));
    return w;
  }

  std::string format(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) out += symbol(w[i]);
    return out;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  Word parse_sequence(std::string_view text, std::size_t& pos, int depth) const {
    Word out;
    while (pos < text.size()) {
      const char c = text[pos];
      if (c == ')') {
        require(depth > 0, "unbalanced parenthesis in word: " + std::string(text));
        return out;
      }
      Word atom;
      if (c == '(') {
        ++pos;
        atom = parse_sequence(text, pos, depth + 1);
        require(pos < text.size() && text[pos] == ')', "unbalanced parenthesis in word: " + std::string(text));
        ++pos;
      } else {
        std::size_t best = 0;
        Letter best_letter = 0;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
          const auto& s = symbols_[i];
          if (s.size() > best && text.substr(pos, s.size()) == s) {
            best = s.size();
            best_letter = static_cast<Letter>(i);
          }
        }
        require(best > 0, "unknown symbol in word: " + std::string(text));
        pos += best;
        atom = Word::letter(best_letter);
      }
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        const bool braced = pos < text.size() && text[pos] == '{';
        if (braced) ++pos;
        std::size_t k = 0;
        const std::size_t digits_start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') k = 10 * k + static_cast<std::size_t>(text[pos++] - '0');
        require(pos > digits_start, "missing exponent in word: " + std::string(text));
        if (braced) {
          require(pos < text.size() && text[pos] == '}', "unclosed exponent brace in word: " + std::string(text));
          ++pos;
        }
        atom = Word::power(atom, k);
      }
      out += atom;
    }
    require(depth == 0, "unbalanced parenthesis in word: " + std::string(text));
    return out;
  }

  std::vector<std::string> symbols_;
};

// ---------------------------------------------------------------------------
// Orders

inline std::strong_ordering lex_cmp(const Word& u, const Word& v) { return u <=> v; }

inline std::strong_ordering lex_cmp(const Alphabet& alphabet, const Word& u, const Word& v) {
  alphabet.check(u);
  alphabet.check(v);
  return lex_cmp(u, v);
}

// Degree-lexicographic order: shorter is smaller, equal lengths compare by reversed lex.
inline std::strong_ordering deglex_cmp(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return v <=> u;
}

inline std::strong_ordering deglex_cmp(const Alphabet& alphabet, const Word& u, const Word& v) {
  alphabet.check(u);
  alphabet.check(v);
  return deglex_cmp(u, v);
}

inline bool deglex_less(const Word& u, const Word& v) { return deglex_cmp(u, v) < 0; }

// Orders containers from the deg-lex largest word down.
struct DegLexDescending {
  bool operator()(const Word& u, const Word& v) const { return deglex_cmp(u, v) > 0; }
};

// ---------------------------------------------------------------------------
// Factors

inline bool is_factor(const Word& a, const Word& b, bool strict = false) {
  if (strict && a.size() >= b.size()) return false;
  return b.contains(a);
}

// ---------------------------------------------------------------------------
// Lyndon words

// Suffix criterion: w is strictly smaller than each of its proper suffixes.
inline bool is_lyndon(const Word& w) {
  require(!w.empty(), "is_lyndon: empty word");
  const std::string& s = w.bytes();
  const std::size_t n = s.size();
  // Duval scan: w is Lyndon iff the first factor of its factorization is all of w.
  std::size_t i = 0, j = 1;
  while (j < n && s[i] <= s[j]) {
    if (s[i] < s[j])
      i = 0;
    else
      ++i;
    ++j;
  }
  return j == n && i == 0;
}

// Chen-Fox-Lyndon factorization (Duval).
inline std::vector<Word> cfl_factorize(const Word& w) {
  require(!w.empty(), "cfl_factorize: empty word");
  const std::string& s = w.bytes();
  const std::size_t n = s.size();
  std::vector<Word> out;
  std::size_t k = 0;
  while (k < n) {
    std::size_t i = k, j = k + 1;
    while (j < n && s[i] <= s[j]) {
      i = s[i] < s[j] ? k : i + 1;
      ++j;
    }
    const std::size_t period = j - i;
    while (k <= i) {
      out.push_back(w.slice(k, period));
      k += period;
    }
  }
  return out;
}

// All Lyndon words of length <= max_len over an alphabet of the given size, lex-sorted.
inline std::vector<Word> lyndon_words(std::size_t alphabet_size, std::size_t max_len) {
  require(alphabet_size >= 1, "lyndon_words: empty alphabet");
  require(max_len >= 1, "lyndon_words: max_len must be positive");
  std::vector<Word> out;
  std::vector<Letter> w{0};
  const auto top = static_cast<Letter>(alphabet_size - 1);
  while (!w.empty()) {
    out.emplace_back(std::string(w.begin(), w.end()));
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == top) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

inline std::vector<Word> lyndon_words(const Alphabet& alphabet, std::size_t max_len) {
  return lyndon_words(alphabet.size(), max_len);
}

inline int mobius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// Number of Lyndon words of length n over g letters.
inline Integer witt_count(std::size_t g, std::size_t n) {
  require(g >= 1 && n >= 1, "witt_count: g and n must be positive");
  Integer sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), g, n / d);
    sum += mobius(d) * p;
  }
  return sum / static_cast<unsigned long>(n);
}

// (u, v) with v the longest proper Lyndon suffix.
inline std::pair<Word, Word> right_standard_factorization(const Word& w) {
  require(w.size() >= 2, "right_standard_factorization: length must be at least 2");
  require(is_lyndon(w), "right_standard_factorization: word is not Lyndon");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v = w.suffix_from(i);
    if (is_lyndon(v)) return {w.prefix(i), std::move(v)};
  }
  throw Error("right_standard_factorization: unreachable");
}

// (p, q) with p the longest proper Lyndon prefix.
inline std::pair<Word, Word> left_standard_factorization(const Word& w) {
  require(w.size() >= 2, "left_standard_factorization: length must be at least 2");
  require(is_lyndon(w), "left_standard_factorization: word is not Lyndon");
  for (std::size_t len = w.size() - 1; len >= 1; --len) {
    Word p = w.prefix(len);
    if (is_lyndon(p)) return {std::move(p), w.suffix_from(len)};
  }
  throw Error("left_standard_factorization: unreachable");
}

// Distinct Lyndon factors of w, excluding w itself.
inline std::vector<Word> proper_lyndon_factors(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t len = 1; i + len <= w.size(); ++len) {
      if (len == w.size()) continue;
      Word f = w.slice(i, len);
      if (is_lyndon(f)) out.push_back(std::move(f));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lynpair

#endif
