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

#ifndef LYNPAIR_LIE_HPP
#define LYNPAIR_LIE_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>

#include "lynpair/error.hpp"
#include "lynpair/numeric.hpp"
#include "lynpair/word.hpp"

namespace lynpair {

using TermMap = std::map<Word, Rational, DegLexDescending>;

// Sparse linear combination of words, iterated from the deg-lex largest word.
// With LyndonKeys every key is a Lyndon word standing for its standard bracketing.
template <bool LyndonKeys>
class LinearCombination {
 public:
  LinearCombination() = default;

  static LinearCombination monomial(const Word& w, const Rational& c = 1) {
    LinearCombination p;
    p.add_term(w, c);
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const Word& leading_word() const {
    require(!is_zero(), "leading word of zero");
    return terms_.begin()->first;
  }
  const Rational& leading_coefficient() const {
    require(!is_zero(), "leading coefficient of zero");
    return terms_.begin()->second;
  }
  Rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    if constexpr (LyndonKeys) require(!w.empty() && is_lyndon(w), "Lie polynomial key is not a Lyndon word");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // this += c * other
  void add_scaled(const LinearCombination& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [w, a] : other.terms_) {
      auto [it, inserted] = terms_.try_emplace(w, a * c);
      if (!inserted) {
        it->second += a * c;
        if (it->second == 0) terms_.erase(it);
      }
    }
  }

  LinearCombination& operator+=(const LinearCombination& o) {
    add_scaled(o, 1);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    add_scaled(o, -1);
    return *this;
  }
  LinearCombination& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, a] : terms_) a *= c;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational& c, LinearCombination a) { return a *= c; }

  // Every term has the same length.
  bool is_homogeneous() const {
    for (const auto& [w, c] : terms_)
      if (w.size() != leading_word().size()) return false;
    return true;
  }

  // Every term has the same multidegree.
  bool is_multihomogeneous(std::size_t alphabet_size) const {
    if (is_zero()) return true;
    const MultiDegree first(leading_word(), alphabet_size);
    for (const auto& [w, c] : terms_)
      if (MultiDegree(w, alphabet_size) != first) return false;
    return true;
  }

  bool has_integer_coefficients() const {
    for (const auto& [w, c] : terms_)
      if (c.get_den() != 1) return false;
    return true;
  }

  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

 private:
  TermMap terms_;
};

using AssocPoly = LinearCombination<false>;
using LiePoly = LinearCombination<true>;

// Concatenation product in the free associative algebra.
inline AssocPoly operator*(const AssocPoly& a, const AssocPoly& b) {
  AssocPoly out;
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) out.add_term(u + v, c * d);
  return out;
}

inline AssocPoly commutator(const AssocPoly& a, const AssocPoly& b) { return a * b - b * a; }

inline const Word& leading_lyndon(const LiePoly& f) {
  require(!f.is_zero(), "leading_lyndon: zero polynomial");
  return f.leading_word();
}

// ---------------------------------------------------------------------------
// Bracket trees

class BracketTree {
 public:
  static BracketTree leaf(Letter a) { return BracketTree(std::make_shared<Node>(Node{Word::letter(a), nullptr, nullptr, true, false})); }

  static BracketTree bracket(const BracketTree& left, const BracketTree& right) {
    return BracketTree(std::make_shared<Node>(Node{left.word() + right.word(), left.node_, right.node_, false, false}));
  }

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  Letter letter() const {
    require(is_leaf(), "letter of an inner node");
    return node_->word[0];
  }
  BracketTree left() const {
    require(!is_leaf(), "left of a leaf");
    return BracketTree(node_->left);
  }
  BracketTree right() const {
    require(!is_leaf(), "right of a leaf");
    return BracketTree(node_->right);
  }

  // The word read off the leaves.
  const Word& word() const noexcept { return node_->word; }
  // Built as the right standard bracketing of its word.
  bool is_standard() const noexcept { return node_->standard; }
  // Distinguished subtree of a regular bracketing.
  bool is_marked() const noexcept { return node_->marked; }

  BracketTree with_mark() const {
    auto copy = std::make_shared<Node>(*node_);
    copy->marked = true;
    return BracketTree(copy);
  }
  BracketTree as_standard() const {
    auto copy = std::make_shared<Node>(*node_);
    copy->standard = true;
    return BracketTree(copy);
  }

  std::string format(const Alphabet& alphabet) const {
    if (is_leaf()) return alphabet.format(word());
    return "[" + left().format(alphabet) + "," + right().format(alphabet) + "]";
  }

  friend bool operator==(const BracketTree& a, const BracketTree& b) {
    if (a.is_leaf() || b.is_leaf()) return a.is_leaf() == b.is_leaf() && a.word() == b.word();
    return a.left() == b.left() && a.right() == b.right();
  }

 private:
  struct Node {
    Word word;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    bool standard;
    bool marked;
  };

  explicit BracketTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

inline BracketTree standard_bracketing(const Word& u) {
  require(!u.empty() && is_lyndon(u), "standard_bracketing: word is not Lyndon");
  if (u.size() == 1) return BracketTree::leaf(u[0]);
  const auto [p, q] = right_standard_factorization(u);
  return BracketTree::bracket(standard_bracketing(p), standard_bracketing(q)).as_standard();
}

inline BracketTree left_standard_bracketing(const Word& u) {
  require(!u.empty() && is_lyndon(u), "left_standard_bracketing: word is not Lyndon");
  if (u.size() == 1) return BracketTree::leaf(u[0]);
  const auto [p, q] = left_standard_factorization(u);
  return BracketTree::bracket(left_standard_bracketing(p), left_standard_bracketing(q));
}

// ---------------------------------------------------------------------------
// Associative expansion

inline const AssocPoly& expand_standard(const Word& u) {
  thread_local std::unordered_map<Word, AssocPoly, WordHash> cache;
  if (auto it = cache.find(u); it != cache.end()) return it->second;
  require(!u.empty() && is_lyndon(u), "expand: word is not Lyndon");
  AssocPoly value;
  if (u.size() == 1) {
    value = AssocPoly::monomial(u);
  } else {
    const auto [p, q] = right_standard_factorization(u);
    value = commutator(expand_standard(p), expand_standard(q));
  }
  return cache.emplace(u, std::move(value)).first->second;
}

inline AssocPoly expand(const BracketTree& t) {
  if (t.is_leaf()) return AssocPoly::monomial(t.word());
  if (t.is_standard()) return expand_standard(t.word());
  return commutator(expand(t.left()), expand(t.right()));
}

inline AssocPoly expand(const LiePoly& f) {
  AssocPoly out;
  for (const auto& [w, c] : f.terms()) out.add_scaled(expand_standard(w), c);
  return out;
}

// Coordinates in the Lyndon basis; fails when p is not a Lie element.
inline LiePoly lyndon_decompose(AssocPoly p) {
  LiePoly out;
  while (!p.is_zero()) {
    const Word w = p.leading_word();
    const Rational c = p.leading_coefficient();
    if (!is_lyndon(w)) throw Error("lyndon_decompose: not a Lie element");
    out.add_term(w, c);
    p.add_scaled(expand_standard(w), -c);
  }
  return out;
}

// Bracket through associative expansion.
inline LiePoly lie_bracket(const LiePoly& f, const LiePoly& g) { return lyndon_decompose(commutator(expand(f), expand(g))); }

// ---------------------------------------------------------------------------
// Regular bracketing

// A bracketing of the Lyndon word a u b containing [u] as a marked subtree.
inline BracketTree regular_bracketing(const Word& a, const Word& u, const Word& b) {
  require(!u.empty() && is_lyndon(u), "regular_bracketing: middle word is not Lyndon");
  const Word whole = a + u + b;
  require(is_lyndon(whole), "regular_bracketing: a u b is not Lyndon");
  if (a.empty() && b.empty()) return standard_bracketing(u).with_mark();
  if (a.empty()) {
    const auto [p, q] = left_standard_factorization(whole);
    require(u.size() <= p.size(), "regular_bracketing: prefix straddles the left standard factorization");
    return BracketTree::bracket(regular_bracketing(Word{}, u, p.suffix_from(u.size())), standard_bracketing(q));
  }
  const auto [p, q] = right_standard_factorization(whole);
  if (a.size() + u.size() <= p.size())
    return BracketTree::bracket(regular_bracketing(a, u, p.suffix_from(a.size() + u.size())), standard_bracketing(q));
  require(a.size() >= p.size(), "regular_bracketing: factor straddles the right standard factorization");
  return BracketTree::bracket(standard_bracketing(p), regular_bracketing(a.suffix_from(p.size()), u, b));
}

// ---------------------------------------------------------------------------
// Lyndon basis arithmetic

// Brackets computed directly in Lyndon coordinates by rewriting with the
// Jacobi identity along right standard factorizations. Results are memoized,
// so an instance is not safe for concurrent use.
class LyndonBracket {
 public:
  // [[u], [v]] for Lyndon words u, v.
  const LiePoly& bracket(const Word& u, const Word& v) {
    static const LiePoly zero;
    if (u == v) return zero;
    std::string key = u.bytes();
    key.push_back('\xff');
    key += v.bytes();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    LiePoly value;
    if (v < u) {
      value = bracket(v, u);
      value *= Rational(-1);
    } else if (u.size() == 1 || !(factor(u).second < v)) {
      value = LiePoly::monomial(u + v);
    } else {
      const auto [u1, u2] = factor(u);
      value = bracket(u1, LiePoly(bracket(u2, v)));
      value -= bracket(u2, LiePoly(bracket(u1, v)));
    }
    return memo_.emplace(std::move(key), std::move(value)).first->second;
  }

  LiePoly bracket(const Word& u, const LiePoly& g) {
    LiePoly out;
    for (const auto& [w, c] : g.terms()) out.add_scaled(bracket(u, w), c);
    return out;
  }

  LiePoly bracket(const LiePoly& f, const LiePoly& g) {
    LiePoly out;
    for (const auto& [u, a] : f.terms())
      for (const auto& [v, b] : g.terms()) out.add_scaled(bracket(u, v), a * b);
    return out;
  }

  // Value of a bracket tree; the marked subtree, if any, is replaced by substitute.
  LiePoly evaluate(const BracketTree& t, const LiePoly* substitute = nullptr) {
    if (t.is_marked() && substitute) return *substitute;
    if (t.is_leaf() || t.is_standard()) return LiePoly::monomial(t.word());
    return bracket(evaluate(t.left(), substitute), evaluate(t.right(), substitute));
  }

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  const std::pair<Word, Word>& factor(const Word& u) {
    auto it = factorizations_.find(u);
    if (it == factorizations_.end()) it = factorizations_.emplace(u, right_standard_factorization(u)).first;
    return it->second;
  }

  std::unordered_map<std::string, LiePoly> memo_;
  std::unordered_map<Word, std::pair<Word, Word>, WordHash> factorizations_;
};

}  // namespace lynpair

#endif
