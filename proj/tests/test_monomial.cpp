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


#include <catch_amalgamated.hpp>

#include <random>

#include "lynpair/catalog.hpp"
#include "lynpair/monomial.hpp"
#include "support.hpp"

using namespace lynpair;

namespace {
const Alphabet xy = Alphabet::binary();
Word w(const char* s) { return xy.parse_word(s); }
WordSet words(std::initializer_list<const char*> list) {
  WordSet out;
  for (const char* s : list) out.insert(w(s));
  return out;
}
std::vector<Integer> ints(std::initializer_list<long> list) { return {list.begin(), list.end()}; }

// Antichains of binary words of length 2..4 with up to three elements.
std::vector<WordSet> small_antichains(std::size_t count, unsigned seed) {
  std::vector<Word> pool;
  for (std::size_t len = 2; len <= 4; ++len)
    for (const Word& u : testing::all_words(2, len)) pool.push_back(u);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1), size(1, 3);
  std::vector<WordSet> out;
  while (out.size() < count) {
    WordSet set;
    for (std::size_t k = size(rng); k > 0; --k) set.insert(pool[pick(rng)]);
    bool antichain = true;
    for (const Word& a : set)
      for (const Word& b : set)
        if (a != b && b.contains(a)) antichain = false;
    if (antichain) out.push_back(set);
  }
  return out;
}
}  // namespace

TEST_CASE("normal words", "[monomial]") {
  const WordSet obstructions = words({"xxy", "xyy"});
  CHECK(is_normal(w("xyxy"), obstructions));
  CHECK_FALSE(is_normal(w("xxyy"), obstructions));
  CHECK(normal_word_counts(2, obstructions, 5) == ints({1, 2, 4, 6, 9, 12}));
  CHECK(count_normal(2, obstructions, 5) == 12);
  CHECK(normal_word_counts(2, {}, 4) == ints({1, 2, 4, 8, 16}));
}

TEST_CASE("automaton counts agree with brute force", "[monomial]") {
  for (const WordSet& set : small_antichains(60, 5)) {
    REQUIRE(normal_word_counts(2, set, 10) == testing::brute_normal_counts(2, set, 10));
    const FactorAutomaton automaton(2, set);
    for (const Word& u : testing::all_words(2, 6)) REQUIRE(automaton.avoids(u) == !testing::contains_any(u, set));
  }
  const WordSet three{Word{0, 1}, Word{0, 2}, Word{1, 2}};
  CHECK(normal_word_counts(3, three, 6) == testing::brute_normal_counts(3, three, 6));
}

TEST_CASE("two-chains", "[monomial]") {
  CHECK(two_chains(words({"xxxy", "xyyy"})).front().omega == w("xxxyyy"));
  const auto chains = two_chains(words({"xxxy", "xyyyy"}));
  REQUIRE_FALSE(chains.empty());
  CHECK(chains.front().omega == w("xxxyyyy"));
  CHECK(chains.front().left == w("xxxy"));
  CHECK(chains.front().right == w("xyyyy"));
  CHECK(chains.front().head == w("xx"));
  CHECK(chains.front().tail == w("yyy"));

  const auto small = two_chains(words({"xxy", "xyy"}));
  REQUIRE(small.size() == 1);
  CHECK(small.front().omega == w("xxyy"));
  CHECK(two_chains(words({"xy"})).empty());
  CHECK(two_chains(words({"xxxy", "xyyyy"}), 6).empty());
}

TEST_CASE("two-chains match the literal chain construction", "[monomial]") {
  for (const WordSet& set : small_antichains(80, 9)) {
    std::set<Word> brute;
    for (const auto& [word, tail] : testing::brute_chains(2, set, 2)) brute.insert(word);
    std::set<Word> fast;
    for (const auto& c : two_chains(set)) fast.insert(c.omega);
    REQUIRE(fast == brute);
  }
}

TEST_CASE("two-chains of Lyndon obstructions are Lyndon", "[monomial]") {
  for (const auto& e : detail::all_entries())
    for (const auto& c : two_chains(e.pair.obstructions())) REQUIRE(is_lyndon(c.omega));
}

TEST_CASE("chain levels match the literal construction", "[monomial]") {
  for (const WordSet& set : small_antichains(60, 13)) {
    const ChainGraph graph(2, set);
    auto level = graph.initial_level();
    for (std::size_t n = 1; n <= 4; ++n) {
      level = graph.next_level(level);
      std::map<Word, Word> brute;
      for (const auto& [word, tail] : testing::brute_chains(2, set, n)) {
        auto it = brute.find(tail);
        if (it == brute.end() || deglex_less(word, it->second)) brute[tail] = word;
      }
      REQUIRE(level == brute);
    }
  }
}

TEST_CASE("chain existence", "[monomial]") {
  CHECK_FALSE(n_chain_exists(2, words({"xy"}), 2).exists);
  const auto two = n_chain_exists(2, words({"xxy", "xyy"}), 2);
  CHECK(two.exists);
  CHECK(two.witness == w("xxyy"));
  const WordSet l3 = filiform_L(4).obstructions();
  CHECK(n_chain_exists(2, l3, 3).exists);
  CHECK_FALSE(n_chain_exists(2, l3, 4).exists);
  const auto bounded = n_chain_exists(2, l3, 3, 4);
  CHECK_FALSE(bounded.exists);
  CHECK(bounded.bound_hit);
}

TEST_CASE("global dimension", "[monomial]") {
  CHECK(global_dimension(2, words({"xxy", "xyy"})).value == std::optional<std::size_t>(3));
  CHECK(global_dimension(2, words({"xy"})).value == std::optional<std::size_t>(2));
  CHECK(global_dimension(2, golden_entry("6.5.3").pair.obstructions()).value == std::optional<std::size_t>(6));
  const auto free = global_dimension(2, words({"xx"}));
  CHECK(free.infinite);
  CHECK_FALSE(free.value);
  const auto capped = global_dimension(2, words({"xx"}), 3);
  CHECK(capped.witnesses.size() == 4);
}

TEST_CASE("global dimension matches the literal construction", "[monomial]") {
  for (const WordSet& set : small_antichains(60, 21)) {
    const auto fast = global_dimension(2, set);
    const auto brute = testing::brute_global_dimension(2, set, 6);
    if (fast.value) {
      REQUIRE(brute == fast.value);
    } else {
      REQUIRE(fast.infinite);
      REQUIRE_FALSE(brute);
    }
  }
}

TEST_CASE("global dimension of Lyndon pairs equals the atom count", "[monomial][property]") {
  for (std::size_t d = 2; d <= 7; ++d)
    for (const auto& p : enumerate_pairs(xy, d, 4)) REQUIRE(global_dimension(2, p.obstructions()).value == std::optional<std::size_t>(d));
  for (std::size_t d = 3; d <= 5; ++d)
    for (const auto& p : enumerate_pairs(Alphabet::parse("x,y,z"), d, 4))
      REQUIRE(global_dimension(3, p.obstructions()).value == std::optional<std::size_t>(d));
}

TEST_CASE("Hilbert series from atoms", "[monomial]") {
  CHECK(hilbert_from_atoms(words({"x", "xy", "y"}), 5) == ints({1, 2, 4, 6, 9, 12}));
  for (std::size_t d = 2; d <= 7; ++d)
    for (const auto& p : enumerate_pairs(xy, d, 4)) REQUIRE(hilbert_from_atoms(p.atoms(), 12) == normal_word_counts(2, p.obstructions(), 12));
  const auto& p = golden_entry("6.5.3").pair;
  CHECK(hilbert_from_atoms(p.atoms(), 12) == testing::brute_normal_counts(2, p.obstructions(), 12));
}

TEST_CASE("PBW normal basis spells the normal words", "[monomial]") {
  for (const auto& e : golden_d6()) {
    for (std::size_t m = 0; m <= 9; ++m) {
      const auto basis = pbw_normal_basis(e.pair.atoms(), m);
      std::vector<Word> normal;
      for (const Word& u : testing::all_words(2, m))
        if (is_normal(u, e.pair.obstructions())) normal.push_back(u);
      REQUIRE(basis == normal);
    }
  }
}
