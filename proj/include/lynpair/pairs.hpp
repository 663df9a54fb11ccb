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

#ifndef LYNPAIR_PAIRS_HPP
#define LYNPAIR_PAIRS_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "lynpair/error.hpp"
#include "lynpair/monomial.hpp"
#include "lynpair/word.hpp"

namespace lynpair {

// Pairwise incomparable under the factor order.
inline bool is_antichain(const WordSet& words) {
  for (const Word& a : words)
    for (const Word& b : words)
      if (a != b && b.contains(a)) return false;
  return true;
}

inline WordSet letters(std::size_t alphabet_size) {
  WordSet out;
  for (std::size_t a = 0; a < alphabet_size; ++a) out.insert(Word::letter(static_cast<Letter>(a)));
  return out;
}

inline void check_obstructions(std::size_t alphabet_size, const WordSet& obstructions) {
  for (const Word& w : obstructions) {
    require(w.size() >= 2, "obstruction set must not contain letters or the empty word");
    for (std::size_t i = 0; i < w.size(); ++i) require(w[i] < alphabet_size, "obstruction uses a letter outside the alphabet");
    require(is_lyndon(w), "obstruction is not a Lyndon word");
  }
  require(is_antichain(obstructions), "obstruction set is not an antichain");
}

struct AtomSet {
  WordSet atoms;
  bool finite = true;
  std::size_t searched_to = 0;  // every atom of length <= searched_to is listed; all of them if finite
};

// Lyndon words avoiding every obstruction. Finiteness is decided exactly: the
// atom set is infinite iff it has an atom of length in [m, 2m-2], m = max |w|.
inline AtomSet atoms_from_obstructions(std::size_t alphabet_size, const WordSet& obstructions,
                                       std::optional<std::size_t> length_bound = std::nullopt) {
  check_obstructions(alphabet_size, obstructions);
  const std::size_t m = max_length(obstructions);
  if (obstructions.empty() && alphabet_size == 1) return {letters(1), true, 1};
  const std::size_t decision = obstructions.empty() ? 1 : std::max<std::size_t>(2 * m - 2, 1);
  const std::size_t search = std::max(decision, length_bound.value_or(decision));
  const FactorAutomaton automaton(alphabet_size, obstructions);

  std::vector<std::vector<Word>> by_length(search + 1);
  for (const Word& a : letters(alphabet_size)) by_length[1].push_back(a);
  for (std::size_t len = 2; len <= search; ++len) {
    auto& bucket = by_length[len];
    for (std::size_t i = 1; i < len; ++i)
      for (const Word& u : by_length[i])
        for (const Word& v : by_length[len - i]) {
          if (!(u < v)) continue;
          Word w = u + v;
          if (automaton.avoids(w) && is_lyndon(w)) bucket.push_back(std::move(w));
        }
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
  }

  AtomSet result;
  result.finite = !obstructions.empty();
  for (std::size_t len = std::max<std::size_t>(m, 1); len <= decision && result.finite; ++len)
    if (!by_length[len].empty()) result.finite = false;
  const std::size_t keep = result.finite ? search : length_bound.value_or(search);
  for (std::size_t len = 1; len <= keep; ++len) result.atoms.insert(by_length[len].begin(), by_length[len].end());
  result.searched_to = keep;
  return result;
}

inline void check_atoms(std::size_t alphabet_size, const WordSet& atoms) {
  for (const Word& a : letters(alphabet_size)) require(atoms.count(a) == 1, "atom set must contain every letter");
  for (const Word& u : atoms) {
    for (std::size_t i = 0; i < u.size(); ++i) require(u[i] < alphabet_size, "atom uses a letter outside the alphabet");
    require(is_lyndon(u), "atom is not a Lyndon word");
    for (const Word& f : proper_lyndon_factors(u)) require(atoms.count(f) == 1, "atom set is not closed under Lyndon factors");
  }
}

// Minimal Lyndon words outside the atom set.
inline WordSet obstructions_from_atoms(std::size_t alphabet_size, const WordSet& atoms) {
  check_atoms(alphabet_size, atoms);
  WordSet out;
  for (const Word& u : atoms)
    for (const Word& v : atoms) {
      if (!(u < v)) continue;
      Word w = u + v;
      if (atoms.count(w) || !is_lyndon(w)) continue;
      bool minimal = true;
      for (const Word& f : proper_lyndon_factors(w))
        if (!atoms.count(f)) {
          minimal = false;
          break;
        }
      if (minimal) out.insert(std::move(w));
    }
  return out;
}

// Atom lengths fill 1..m without gaps.
inline bool is_connected(const WordSet& atoms) {
  const std::size_t m = max_length(atoms);
  std::vector<bool> seen(m + 1, false);
  for (const Word& a : atoms) seen[a.size()] = true;
  for (std::size_t len = 1; len <= m; ++len)
    if (!seen[len]) return false;
  return true;
}

// Atoms shorter than the first missing length.
inline WordSet connected_component(const WordSet& atoms) {
  const std::size_t m = max_length(atoms);
  std::vector<bool> seen(m + 2, false);
  for (const Word& a : atoms) seen[a.size()] = true;
  std::size_t gap = 1;
  while (gap <= m && seen[gap]) ++gap;
  WordSet out;
  for (const Word& a : atoms)
    if (a.size() < gap) out.insert(a);
  return out;
}

struct PairInvariants {
  std::size_t d = 0;
  std::size_t m = 0;
  std::optional<std::size_t> c;
  bool connected = false;
};

// Lyndon atoms N together with their obstructions W; always satisfies the
// duality N = N(W), W = W(N).
class LyndonPair {
 public:
  static LyndonPair from_atoms(Alphabet alphabet, WordSet atoms) {
    WordSet obstructions = obstructions_from_atoms(alphabet.size(), atoms);
    return LyndonPair(std::move(alphabet), std::move(atoms), std::move(obstructions));
  }

  static LyndonPair from_obstructions(Alphabet alphabet, WordSet obstructions) {
    AtomSet atoms = atoms_from_obstructions(alphabet.size(), obstructions);
    require(atoms.finite, "obstruction set has infinitely many atoms");
    return LyndonPair(std::move(alphabet), std::move(atoms.atoms), std::move(obstructions));
  }

  // Both sides given; they must be dual to each other.
  static LyndonPair from_both(Alphabet alphabet, WordSet atoms, WordSet obstructions) {
    require(obstructions_from_atoms(alphabet.size(), atoms) == obstructions, "atoms and obstructions are not dual");
    return LyndonPair(std::move(alphabet), std::move(atoms), std::move(obstructions));
  }

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const WordSet& atoms() const noexcept { return atoms_; }
  const WordSet& obstructions() const noexcept { return obstructions_; }

  std::size_t d() const noexcept { return atoms_.size(); }
  std::size_t m() const { return max_length(atoms_); }

  PairInvariants invariants() const {
    PairInvariants inv;
    inv.d = d();
    inv.m = m();
    const auto chains = two_chains(obstructions_);
    for (const auto& c : chains)
      if (!inv.c || c.omega.size() < *inv.c) inv.c = c.omega.size();
    inv.connected = is_connected(atoms_);
    return inv;
  }

  friend bool operator==(const LyndonPair& a, const LyndonPair& b) {
    return a.alphabet_ == b.alphabet_ && a.atoms_ == b.atoms_ && a.obstructions_ == b.obstructions_;
  }

 private:
  LyndonPair(Alphabet alphabet, WordSet atoms, WordSet obstructions)
      : alphabet_(std::move(alphabet)), atoms_(std::move(atoms)), obstructions_(std::move(obstructions)) {}

  Alphabet alphabet_;
  WordSet atoms_;
  WordSet obstructions_;
};

// Consecutive atoms in lex order multiply to an obstruction.
inline bool adjacent_products_property(const LyndonPair& pair) {
  const auto& atoms = pair.atoms();
  for (auto it = atoms.begin(); std::next(it) != atoms.end(); ++it)
    if (!pair.obstructions().count(*it + *std::next(it))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Isomorphism of monomial algebras

// Word reversal composed with the order-reversing relabeling of the alphabet.
inline Word mirror(const Word& w, std::size_t alphabet_size) {
  Word out;
  for (std::size_t i = w.size(); i-- > 0;) out += static_cast<Letter>(alphabet_size - 1 - w[i]);
  return out;
}

inline WordSet mirror(const WordSet& words, std::size_t alphabet_size) {
  WordSet out;
  for (const Word& w : words) out.insert(mirror(w, alphabet_size));
  return out;
}

// The mirrored pair when the mirror images of atoms and obstructions are all Lyndon.
inline std::optional<LyndonPair> mirror_pair(const LyndonPair& pair) {
  const std::size_t n = pair.alphabet().size();
  WordSet atoms = mirror(pair.atoms(), n);
  WordSet obstructions = mirror(pair.obstructions(), n);
  for (const Word& w : atoms)
    if (!is_lyndon(w)) return std::nullopt;
  for (const Word& w : obstructions)
    if (!is_lyndon(w)) return std::nullopt;
  return LyndonPair::from_both(pair.alphabet(), std::move(atoms), std::move(obstructions));
}

using CanonicalKey = std::vector<Word>;

inline CanonicalKey canonical_key(const LyndonPair& pair) {
  CanonicalKey key(pair.obstructions().begin(), pair.obstructions().end());
  if (auto image = mirror_pair(pair)) {
    CanonicalKey other(image->obstructions().begin(), image->obstructions().end());
    key = std::min(key, other);
  }
  return key;
}

inline LyndonPair canonical(const LyndonPair& pair) {
  const CanonicalKey key = canonical_key(pair);
  if (CanonicalKey(pair.obstructions().begin(), pair.obstructions().end()) == key) return pair;
  return *mirror_pair(pair);
}

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& key) const noexcept {
    std::size_t h = 0;
    for (const Word& w : key) h = h * 1000003u ^ WordHash{}(w);
    return h;
  }
};

// Runs fn(i) for i in [0, n) on up to jobs threads.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t count = std::min<std::size_t>(jobs, n);
  for (std::size_t t = 0; t < count; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += count) fn(i);
    });
  for (auto& w : workers) w.join();
}

using EnumerationProgress = std::function<void(std::size_t d, std::size_t count)>;

// All Lyndon pairs with d atoms up to isomorphism, as canonical representatives
// sorted by canonical key.
inline std::vector<LyndonPair> enumerate_pairs(const Alphabet& alphabet, std::size_t d, unsigned jobs = 1,
                                               const EnumerationProgress& progress = {}) {
  require(alphabet.size() >= 2, "enumeration needs at least two letters");
  require(d >= alphabet.size(), "d must be at least the alphabet size");
  std::vector<LyndonPair> level{canonical(LyndonPair::from_atoms(alphabet, letters(alphabet.size())))};
  if (progress) progress(alphabet.size(), level.size());
  for (std::size_t size = alphabet.size() + 1; size <= d; ++size) {
    std::vector<std::vector<std::pair<CanonicalKey, LyndonPair>>> found(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) {
      // both members of a class: a child of the mirror need not mirror a child
      std::vector<LyndonPair> members{level[i]};
      if (auto image = mirror_pair(level[i]); image && *image != level[i]) members.push_back(std::move(*image));
      for (const LyndonPair& base : members)
        for (const Word& w : base.obstructions()) {
          WordSet atoms = base.atoms();
          atoms.insert(w);
          LyndonPair child = canonical(LyndonPair::from_atoms(alphabet, std::move(atoms)));
          CanonicalKey key(child.obstructions().begin(), child.obstructions().end());
          found[i].emplace_back(std::move(key), std::move(child));
        }
    });
    std::map<CanonicalKey, LyndonPair> merged;
    for (auto& bucket : found)
      for (auto& [key, pair] : bucket) merged.emplace(std::move(key), std::move(pair));
    level.clear();
    for (auto& [key, pair] : merged) level.push_back(std::move(pair));
    if (progress) progress(size, level.size());
  }
  return level;
}

// The unique connected pair with d atoms and d-1 obstructions.
inline LyndonPair minimal_W_classification(std::size_t d) {
  require(d >= 2, "minimal_W_classification: d must be at least 2");
  const Word x = Word::letter(0), y = Word::letter(1);
  WordSet atoms{y};
  for (std::size_t j = 0; j + 2 <= d; ++j) atoms.insert(x + Word::power(y, j));
  return LyndonPair::from_atoms(Alphabet::binary(), std::move(atoms));
}

struct MaximalWCheck {
  bool maximal_size = false;       // |W| = d(d-1)/2
  bool atoms_are_letters = false;  // N = X
  bool quadratic = false;          // W = {ab : a < b letters}

  bool holds() const { return maximal_size; }
  bool consistent() const { return maximal_size == atoms_are_letters && atoms_are_letters == quadratic; }
};

inline MaximalWCheck maximal_W_check(const LyndonPair& pair) {
  MaximalWCheck check;
  const std::size_t d = pair.d();
  const std::size_t n = pair.alphabet().size();
  check.maximal_size = pair.obstructions().size() == d * (d - 1) / 2;
  check.atoms_are_letters = pair.atoms() == letters(n);
  WordSet quadratic;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) quadratic.insert(Word{static_cast<Letter>(a), static_cast<Letter>(b)});
  check.quadratic = pair.obstructions() == quadratic;
  return check;
}

}  // namespace lynpair

#endif
