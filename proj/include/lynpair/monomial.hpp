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

#ifndef LYNPAIR_MONOMIAL_HPP
#define LYNPAIR_MONOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "lynpair/error.hpp"
#include "lynpair/numeric.hpp"
#include "lynpair/word.hpp"

namespace lynpair {

using WordSet = std::set<Word>;

// Aho-Corasick automaton over a pattern set. Transitions into a state that
// completes a pattern occurrence are reported as dead, so walking the automaton
// reads exactly the words avoiding every pattern.
class FactorAutomaton {
 public:
  static constexpr std::size_t dead = static_cast<std::size_t>(-1);

  FactorAutomaton(std::size_t alphabet_size, const WordSet& patterns) : alphabet_size_(alphabet_size) {
    require(alphabet_size >= 1, "automaton: empty alphabet");
    nodes_.emplace_back(alphabet_size);
    for (const Word& p : patterns) {
      require(!p.empty(), "automaton: empty pattern");
      std::size_t s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        require(p[i] < alphabet_size, "automaton: pattern letter outside alphabet");
        if (nodes_[s].next[p[i]] == dead) {
          nodes_[s].next[p[i]] = nodes_.size();
          nodes_.emplace_back(alphabet_size);
        }
        s = nodes_[s].next[p[i]];
      }
      nodes_[s].terminal = true;
    }
    std::deque<std::size_t> queue;
    for (std::size_t a = 0; a < alphabet_size; ++a) {
      std::size_t& t = nodes_[0].next[a];
      if (t == dead) {
        t = 0;
      } else {
        nodes_[t].fail = 0;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      nodes_[s].terminal = nodes_[s].terminal || nodes_[nodes_[s].fail].terminal;
      for (std::size_t a = 0; a < alphabet_size; ++a) {
        const std::size_t t = nodes_[s].next[a];
        if (t == dead) {
          nodes_[s].next[a] = nodes_[nodes_[s].fail].next[a];
        } else {
          nodes_[t].fail = nodes_[nodes_[s].fail].next[a];
          queue.push_back(t);
        }
      }
    }
  }

  std::size_t start() const noexcept { return 0; }
  std::size_t state_count() const noexcept { return nodes_.size(); }
  std::size_t alphabet_size() const noexcept { return alphabet_size_; }

  std::size_t step(std::size_t state, Letter a) const {
    const std::size_t t = nodes_[state].next[a];
    return nodes_[t].terminal ? dead : t;
  }

  bool avoids(const Word& w) const {
    std::size_t s = start();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= alphabet_size_) return false;
      s = step(s, w[i]);
      if (s == dead) return false;
    }
    return true;
  }

 private:
  struct Node {
    explicit Node(std::size_t alphabet_size) : next(alphabet_size, dead) {}
    std::vector<std::size_t> next;
    std::size_t fail = 0;
    bool terminal = false;
  };

  std::size_t alphabet_size_;
  std::vector<Node> nodes_;
};

inline std::size_t max_length(const WordSet& words) {
  std::size_t m = 0;
  for (const Word& w : words) m = std::max(m, w.size());
  return m;
}

// ---------------------------------------------------------------------------
// Normal words

inline bool is_normal(const Word& w, const WordSet& obstructions) {
  for (const Word& u : obstructions)
    if (w.contains(u)) return false;
  return true;
}

// Number of normal words of each length 0..max_degree.
inline std::vector<Integer> normal_word_counts(std::size_t alphabet_size, const WordSet& obstructions,
                                               std::size_t max_degree) {
  const FactorAutomaton automaton(alphabet_size, obstructions);
  std::vector<Integer> counts;
  std::vector<Integer> current(automaton.state_count(), 0);
  current[automaton.start()] = 1;
  counts.emplace_back(1);
  for (std::size_t m = 1; m <= max_degree; ++m) {
    std::vector<Integer> next(automaton.state_count(), 0);
    for (std::size_t s = 0; s < current.size(); ++s) {
      if (current[s] == 0) continue;
      for (std::size_t a = 0; a < alphabet_size; ++a) {
        const std::size_t t = automaton.step(s, static_cast<Letter>(a));
        if (t != FactorAutomaton::dead) next[t] += current[s];
      }
    }
    current = std::move(next);
    Integer total = 0;
    for (const auto& c : current) total += c;
    counts.push_back(total);
  }
  return counts;
}

inline Integer count_normal(std::size_t alphabet_size, const WordSet& obstructions, std::size_t m) {
  return normal_word_counts(alphabet_size, obstructions, m).back();
}

// ---------------------------------------------------------------------------
// Anick chains

// omega = left + tail = head + right, where right starts inside left.
struct TwoChain {
  Word omega;
  Word left;
  Word right;
  Word head;
  Word tail;

  friend bool operator==(const TwoChain&, const TwoChain&) = default;
};

inline std::vector<TwoChain> two_chains(const WordSet& obstructions, std::optional<std::size_t> max_len = std::nullopt) {
  std::vector<TwoChain> prechains;
  for (const Word& u : obstructions)
    for (const Word& v : obstructions)
      for (std::size_t k = 1; k < u.size() && k < v.size(); ++k) {
        if (u.suffix_from(u.size() - k) != v.prefix(k)) continue;
        TwoChain c{u + v.suffix_from(k), u, v, u.prefix(u.size() - k), v.suffix_from(k)};
        if (max_len && c.omega.size() > *max_len) continue;
        prechains.push_back(std::move(c));
      }
  std::vector<TwoChain> chains;
  for (const TwoChain& c : prechains) {
    // minimal: no other obstruction occurrence starting inside the first one ends earlier
    bool minimal = true;
    for (const Word& t : obstructions) {
      for (std::size_t start = 1; start < c.left.size() && minimal; ++start) {
        const std::size_t end = start + t.size();
        if (end >= c.omega.size() || end <= c.left.size()) continue;
        if (c.omega.slice(start, t.size()) == t) minimal = false;
      }
      if (!minimal) break;
    }
    if (minimal) chains.push_back(c);
  }
  std::sort(chains.begin(), chains.end(), [](const TwoChain& a, const TwoChain& b) {
    if (deglex_cmp(a.omega, b.omega) != 0) return deglex_less(a.omega, b.omega);
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });
  chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
  return chains;
}

// Chains are explored level by level. A chain is determined, for the purpose
// of extension, by its tail: the suffix added by its last extension (for
// level 0, the letter itself).
class ChainGraph {
 public:
  ChainGraph(std::size_t alphabet_size, WordSet obstructions)
      : alphabet_size_(alphabet_size), obstructions_(std::move(obstructions)) {
    for (const Word& w : obstructions_) require(w.size() >= 2, "chains: obstructions must have length >= 2");
  }

  // Level-0 chains: one per letter.
  std::map<Word, Word> initial_level() const {
    std::map<Word, Word> level;
    for (std::size_t a = 0; a < alphabet_size_; ++a) level.emplace(Word::letter(static_cast<Letter>(a)), Word::letter(static_cast<Letter>(a)));
    return level;
  }

  // Tails of the chains extending a chain with the given tail.
  const std::vector<Word>& extensions(const Word& tail) const {
    auto it = cache_.find(tail);
    if (it != cache_.end()) return it->second;
    std::vector<Word> candidates;
    for (const Word& t : obstructions_)
      for (std::size_t k = 0; k < tail.size(); ++k) {
        const std::size_t overlap = tail.size() - k;
        if (overlap >= t.size()) continue;
        if (t.prefix(overlap) == tail.suffix_from(k)) candidates.push_back(t.suffix_from(overlap));
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Word> minimal;
    for (const Word& q : candidates) {
      bool keep = true;
      for (const Word& r : candidates)
        if (r.size() < q.size() && q.starts_with(r)) keep = false;
      if (keep) minimal.push_back(q);
    }
    return cache_.emplace(tail, std::move(minimal)).first->second;
  }

  // tail -> shortest chain word found with that tail
  std::map<Word, Word> next_level(const std::map<Word, Word>& level) const {
    std::map<Word, Word> out;
    for (const auto& [tail, witness] : level)
      for (const Word& q : extensions(tail)) {
        Word chain = witness + q;
        auto it = out.find(q);
        if (it == out.end())
          out.emplace(q, std::move(chain));
        else if (deglex_less(chain, it->second))
          it->second = std::move(chain);
      }
    return out;
  }

  // Whether a cycle is reachable from the letters (infinitely many chain levels).
  bool has_cycle() const {
    std::map<Word, int> color;
    std::vector<std::pair<Word, std::size_t>> stack;
    for (const auto& [tail, _] : initial_level()) {
      if (color[tail] != 0) continue;
      stack.emplace_back(tail, 0);
      color[tail] = 1;
      while (!stack.empty()) {
        auto& [node, index] = stack.back();
        const auto& next = extensions(node);
        if (index == next.size()) {
          color[node] = 2;
          stack.pop_back();
          continue;
        }
        const Word child = next[index++];
        const int c = color[child];
        if (c == 1) return true;
        if (c == 0) {
          color[child] = 1;
          stack.emplace_back(child, 0);
        }
      }
    }
    return false;
  }

  const WordSet& obstructions() const noexcept { return obstructions_; }

 private:
  std::size_t alphabet_size_;
  WordSet obstructions_;
  mutable std::map<Word, std::vector<Word>> cache_;
};

struct ChainSearchResult {
  bool exists = false;
  std::optional<Word> witness;
  bool bound_hit = false;
};

// Whether an n-chain exists whose chain word has length <= search_bound.
inline ChainSearchResult n_chain_exists(std::size_t alphabet_size, const WordSet& obstructions, std::size_t n,
                                        std::optional<std::size_t> search_bound = std::nullopt) {
  const ChainGraph graph(alphabet_size, obstructions);
  auto level = graph.initial_level();
  ChainSearchResult result;
  for (std::size_t i = 0; i < n && !level.empty(); ++i) {
    level = graph.next_level(level);
    if (search_bound)
      for (auto it = level.begin(); it != level.end();) {
        if (it->second.size() > *search_bound) {
          result.bound_hit = true;
          it = level.erase(it);
        } else {
          ++it;
        }
      }
  }
  if (!level.empty()) {
    result.exists = true;
    auto best = level.begin();
    for (auto it = level.begin(); it != level.end(); ++it)
      if (deglex_less(it->second, best->second)) best = it;
    result.witness = best->second;
  }
  return result;
}

struct GlobalDimension {
  std::optional<std::size_t> value;  // set when finite and found within the bound
  bool infinite = false;             // a cycle of chain tails exists
  std::size_t bound = 0;             // level bound used
  std::vector<Word> witnesses;       // one chain word per nonempty level, index = chain level

  bool bound_hit() const { return !value && !infinite; }
};

// Smallest d such that no d-chain exists, searching chain levels up to bound.
inline GlobalDimension global_dimension(std::size_t alphabet_size, const WordSet& obstructions,
                                        std::optional<std::size_t> bound = std::nullopt) {
  const ChainGraph graph(alphabet_size, obstructions);
  GlobalDimension result;
  result.bound = bound.value_or(std::max<std::size_t>(4 * max_length(obstructions), alphabet_size + 1));
  auto level = graph.initial_level();
  for (std::size_t n = 0; n <= result.bound; ++n) {
    if (level.empty()) {
      result.value = n;
      return result;
    }
    auto best = level.begin();
    for (auto it = level.begin(); it != level.end(); ++it)
      if (deglex_less(it->second, best->second)) best = it;
    result.witnesses.push_back(best->second);
    level = graph.next_level(level);
  }
  result.infinite = graph.has_cycle();
  return result;
}

// ---------------------------------------------------------------------------
// Hilbert series

// Coefficients of prod over atoms of 1/(1 - t^|a|), degrees 0..max_degree.
inline std::vector<Integer> hilbert_from_atoms(const WordSet& atoms, std::size_t max_degree) {
  std::vector<Integer> series(max_degree + 1, 0);
  series[0] = 1;
  for (const Word& a : atoms) {
    const std::size_t k = a.size();
    require(k >= 1, "hilbert_from_atoms: empty atom");
    for (std::size_t m = k; m <= max_degree; ++m) series[m] += series[m - k];
  }
  return series;
}

// Words of length m written as non-increasing products of atoms, lex-sorted.
inline std::vector<Word> pbw_normal_basis(const WordSet& atoms, std::size_t m) {
  const std::vector<Word> descending(atoms.rbegin(), atoms.rend());
  std::vector<Word> out;
  auto extend = [&](auto&& self, std::size_t first, std::size_t remaining, const Word& prefix) -> void {
    if (remaining == 0) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t i = first; i < descending.size(); ++i)
      if (descending[i].size() <= remaining) self(self, i, remaining - descending[i].size(), prefix + descending[i]);
  };
  extend(extend, 0, m, Word{});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lynpair

#endif
