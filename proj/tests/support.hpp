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


// Brute-force oracles and property sweeps shared by the unit tests and the
// acceptance runner. Nothing here calls the library routine it checks.

#ifndef LYNPAIR_TESTS_SUPPORT_HPP
#define LYNPAIR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lynpair/lynpair.hpp"

namespace lynpair::testing {

inline std::string fmt(const Word& w) { return Alphabet::binary().format(w); }

// ---------------------------------------------------------------------------
// Oracles

// All words of the given length, in lex order.
inline std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const Word& w : out)
      for (std::size_t a = 0; a < alphabet_size; ++a) next.push_back(w + Word::letter(static_cast<Letter>(a)));
    out = std::move(next);
  }
  return out;
}

// Strictly smaller than every proper rotation.
inline bool rotation_lyndon(const Word& w) {
  const std::string s = w.bytes();
  if (s.empty()) return false;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (!(s < s.substr(k) + s.substr(0, k))) return false;
  return true;
}

inline bool contains_any(const Word& w, const WordSet& patterns) {
  const std::string s = w.bytes();
  for (const Word& p : patterns)
    if (s.find(p.bytes()) != std::string::npos) return true;
  return false;
}

inline std::vector<Integer> brute_normal_counts(std::size_t alphabet_size, const WordSet& obstructions, std::size_t max_degree) {
  std::vector<Integer> out;
  for (std::size_t m = 0; m <= max_degree; ++m) {
    Integer count = 0;
    for (const Word& w : all_words(alphabet_size, m))
      if (!contains_any(w, obstructions)) ++count;
    out.push_back(count);
  }
  return out;
}

// Lyndon words avoiding the obstructions, up to the given length.
inline WordSet brute_atoms(std::size_t alphabet_size, const WordSet& obstructions, std::size_t max_len) {
  WordSet out;
  for (std::size_t len = 1; len <= max_len; ++len)
    for (const Word& w : all_words(alphabet_size, len))
      if (rotation_lyndon(w) && !contains_any(w, obstructions)) out.insert(w);
  return out;
}

// A Lyndon word outside the atoms all of whose proper Lyndon factors are atoms.
inline bool definitional_obstruction(const Word& w, const WordSet& atoms) {
  if (w.size() < 2 || !rotation_lyndon(w) || atoms.count(w)) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      if (j - i == w.size()) continue;
      const Word f = w.slice(i, j - i);
      if (rotation_lyndon(f) && !atoms.count(f)) return false;
    }
  return true;
}

inline WordSet brute_obstructions(std::size_t alphabet_size, const WordSet& atoms, std::size_t max_len) {
  WordSet out;
  for (std::size_t len = 2; len <= max_len; ++len)
    for (const Word& w : all_words(alphabet_size, len))
      if (definitional_obstruction(w, atoms)) out.insert(w);
  return out;
}

inline WordSet shorter_than(const WordSet& words, std::size_t max_len) {
  WordSet out;
  for (const Word& w : words)
    if (w.size() <= max_len) out.insert(w);
  return out;
}

// n-chains as (word, tail) built literally: extend a chain with tail t by every
// word q such that t q has exactly one obstruction occurrence, which is a
// suffix starting inside t.
inline std::set<std::pair<Word, Word>> brute_chains(std::size_t alphabet_size, const WordSet& obstructions, std::size_t level) {
  std::set<std::pair<Word, Word>> chains;
  for (std::size_t a = 0; a < alphabet_size; ++a) chains.insert({Word::letter(static_cast<Letter>(a)), Word::letter(static_cast<Letter>(a))});
  std::size_t longest = 0;
  for (const Word& w : obstructions) longest = std::max(longest, w.size());
  for (std::size_t n = 0; n < level; ++n) {
    std::set<std::pair<Word, Word>> next;
    for (const auto& [word, tail] : chains)
      for (std::size_t len = 1; len < longest; ++len)
        for (const Word& q : all_words(alphabet_size, len)) {
          const std::string s = (tail + q).bytes();
          std::size_t hits = 0;
          bool suffix_inside_tail = false;
          for (const Word& w : obstructions)
            for (std::size_t pos = s.find(w.bytes()); pos != std::string::npos; pos = s.find(w.bytes(), pos + 1)) {
              ++hits;
              if (pos + w.size() == s.size() && pos < tail.size()) suffix_inside_tail = true;
            }
          if (hits == 1 && suffix_inside_tail) next.insert({word + q, q});
        }
    chains = std::move(next);
  }
  return chains;
}

inline std::optional<std::size_t> brute_global_dimension(std::size_t alphabet_size, const WordSet& obstructions, std::size_t max_level) {
  for (std::size_t n = 0; n <= max_level; ++n)
    if (brute_chains(alphabet_size, obstructions, n).empty()) return n;
  return std::nullopt;
}

// Rank over the rationals by Gaussian elimination; rows are word -> coefficient maps.
inline std::size_t rank(std::vector<std::map<Word, Rational>> rows) {
  std::size_t r = 0;
  std::set<Word> columns;
  for (const auto& row : rows)
    for (const auto& [w, c] : row) columns.insert(w);
  for (const Word& col : columns) {
    std::size_t pivot = r;
    while (pivot < rows.size() && (!rows[pivot].count(col) || rows[pivot][col] == 0)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || !rows[i].count(col) || rows[i][col] == 0) continue;
      const Rational factor = rows[i][col] / rows[r][col];
      for (const auto& [w, c] : rows[r]) rows[i][w] -= factor * c;
    }
    ++r;
  }
  return r;
}

inline std::map<Word, Rational> as_row(const AssocPoly& p) {
  std::map<Word, Rational> row;
  for (const auto& [w, c] : p.terms()) row[w] = c;
  return row;
}

// ---------------------------------------------------------------------------
// Random data

inline LiePoly random_lie(std::mt19937& rng, std::size_t alphabet_size, std::size_t degree, std::size_t max_terms = 3) {
  const auto all = lyndon_words(alphabet_size, degree);
  std::vector<Word> same_degree;
  for (const Word& w : all)
    if (w.size() == degree) same_degree.push_back(w);
  std::uniform_int_distribution<std::size_t> pick(0, same_degree.size() - 1);
  std::uniform_int_distribution<int> coefficient(-4, 4);
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  LiePoly f;
  for (std::size_t k = terms(rng); k > 0; --k) f.add_term(same_degree[pick(rng)], Rational(coefficient(rng)));
  return f;
}

// ---------------------------------------------------------------------------
// Property sweeps. Each returns an empty string on success and a description
// of the first counterexample otherwise.

inline std::string check_round_trip(std::size_t max_len, std::size_t random_trials, unsigned seed) {
  for (const Word& u : lyndon_words(2, max_len))
    if (lyndon_decompose(expand(standard_bracketing(u))) != LiePoly::monomial(u)) return "round trip fails on " + fmt(u);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> degree(1, max_len);
  for (std::size_t i = 0; i < random_trials; ++i) {
    const LiePoly f = random_lie(rng, 2, degree(rng));
    if (lyndon_decompose(expand(f)) != f) return "round trip fails on a random element";
  }
  return {};
}

inline std::string check_triangularity(std::size_t max_len) {
  for (const Word& u : lyndon_words(2, max_len)) {
    const AssocPoly p = expand(standard_bracketing(u));
    for (const auto& [w, c] : p.terms()) {
      if (w < u) return "standard bracketing of " + fmt(u) + " has a lex-smaller word";
      if (w == u && c != 1) return "standard bracketing of " + fmt(u) + " has leading coefficient " + c.get_str();
    }
  }
  return {};
}

// Every Lyndon factor occurrence of every Lyndon word gets a regular bracketing
// whose expansion has the whole word as its lex-least monomial with coefficient 1.
inline std::string check_regular_triangularity(std::size_t max_len) {
  for (const Word& w : lyndon_words(2, max_len))
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j <= w.size(); ++j) {
        const Word u = w.slice(i, j - i);
        if (!rotation_lyndon(u)) continue;
        const Word a = w.prefix(i), b = w.suffix_from(j);
        std::optional<BracketTree> tree;
        try {
          tree = regular_bracketing(a, u, b);
        } catch (const Error& e) {
          return "no regular bracketing for " + fmt(a) + "[" + fmt(u) + "]" + fmt(b) + ": " + e.what();
        }
        if (tree->word() != w) return "regular bracketing spells the wrong word for " + fmt(w);
        const AssocPoly p = expand(*tree);
        if (p.is_zero()) return "regular bracketing of " + fmt(w) + " vanishes";
        for (const auto& [v, c] : p.terms()) {
          if (v < w) return "regular bracketing " + fmt(a) + "[" + fmt(u) + "]" + fmt(b) + " has a lex-smaller word";
          if (v == w && c != 1) return "regular bracketing " + fmt(a) + "[" + fmt(u) + "]" + fmt(b) + " has leading coefficient " + c.get_str();
        }
        if (p.coefficient(w) != 1) return "regular bracketing of " + fmt(w) + " misses the word itself";
      }
  return {};
}

// Antisymmetry and Jacobi through both bracket routes, which must agree.
inline std::string check_jacobi(std::size_t max_total_degree, std::size_t trials, unsigned seed) {
  std::mt19937 rng(seed);
  LyndonBracket engine;
  std::uniform_int_distribution<std::size_t> degree(1, max_total_degree - 2);
  for (std::size_t i = 0; i < trials; ++i) {
    std::size_t da = degree(rng), db = degree(rng), dc = degree(rng);
    while (da + db + dc > max_total_degree) {
      da = degree(rng);
      db = degree(rng);
      dc = degree(rng);
    }
    const LiePoly f = random_lie(rng, 2, da), g = random_lie(rng, 2, db), h = random_lie(rng, 2, dc);
    const LiePoly fg = lie_bracket(f, g);
    if (fg != engine.bracket(f, g)) return "bracket routes disagree";
    if (fg + lie_bracket(g, f) != LiePoly{}) return "antisymmetry fails";
    if (engine.bracket(f, f) != LiePoly{}) return "[f, f] is not zero";
    const LiePoly jacobi = engine.bracket(f, engine.bracket(g, h)) + engine.bracket(g, engine.bracket(h, f)) + engine.bracket(h, engine.bracket(f, g));
    if (!jacobi.is_zero()) return "Jacobi fails";
    if (lie_bracket(f, lie_bracket(g, h)) != engine.bracket(f, engine.bracket(g, h))) return "nested bracket routes disagree";
  }
  return {};
}

inline std::string check_duality(const LyndonPair& pair) {
  const std::size_t n = pair.alphabet().size();
  const AtomSet atoms = atoms_from_obstructions(n, pair.obstructions());
  if (!atoms.finite || atoms.atoms != pair.atoms()) return "atoms_from_obstructions does not recover N";
  if (obstructions_from_atoms(n, pair.atoms()) != pair.obstructions()) return "obstructions_from_atoms does not recover W";
  // exhaustive up to the scan limit, word by word beyond it
  const std::size_t limit = std::min<std::size_t>(2 * pair.m(), 16);
  if (brute_obstructions(n, pair.atoms(), limit) != shorter_than(pair.obstructions(), limit)) return "W differs from the definitional filter";
  if (brute_atoms(n, pair.obstructions(), limit) != shorter_than(pair.atoms(), limit)) return "N differs from the brute-force atom scan";
  for (const Word& w : pair.obstructions())
    if (!definitional_obstruction(w, pair.atoms())) return "obstruction " + fmt(w) + " fails the definition";
  for (const Word& a : pair.atoms())
    if (!rotation_lyndon(a) || contains_any(a, pair.obstructions())) return "atom " + fmt(a) + " is not a normal Lyndon word";
  if (2 * pair.m() > limit)
    for (const Word& a : pair.atoms())
      for (const Word& b : pair.atoms())
        if (a < b && pair.atoms().count(a + b) == 0 && rotation_lyndon(a + b) && !contains_any(a + b, pair.obstructions()))
          return "product " + fmt(a + b) + " is a missing atom";
  for (const Word& w : pair.obstructions())
    for (const Word& f : proper_lyndon_factors(w))
      if (!pair.atoms().count(f)) return "a Lyndon factor of an obstruction is not an atom";
  return {};
}

inline std::string check_canonicalization(const LyndonPair& pair) {
  const LyndonPair c = canonical(pair);
  if (canonical(c) != c) return "canonical is not idempotent";
  if (canonical_key(c) != canonical_key(pair)) return "canonical key moved";
  if (auto image = mirror_pair(pair)) {
    if (canonical(*image) != c) return "mirror image has a different canonical form";
    if (auto back = mirror_pair(*image); !back || *back != pair) return "mirror is not an involution";
  }
  return {};
}

}  // namespace lynpair::testing

#endif
