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

#ifndef LYNPAIR_CATALOG_HPP
#define LYNPAIR_CATALOG_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lynpair/error.hpp"
#include "lynpair/golden_data.hpp"
#include "lynpair/lie.hpp"
#include "lynpair/pairs.hpp"
#include "lynpair/word.hpp"

namespace lynpair {

// ---------------------------------------------------------------------------
// Families

// Atoms x, xy, ..., xy^{d-2}, y.
inline LyndonPair filiform_L(std::size_t d) {
  require(d >= 3, "filiform_L: d must be at least 3");
  return minimal_W_classification(d);
}

// Atoms xy^j (0 <= j <= d-3), xy^{k-2}xy^{k-1} and y, where d = 2k.
inline LyndonPair filiform_Q(std::size_t d) {
  require(d >= 6 && d % 2 == 0, "filiform_Q: d must be even and at least 6");
  const std::size_t k = d / 2;
  const Word x = Word::letter(0), y = Word::letter(1);
  WordSet atoms{y, x + Word::power(y, k - 2) + x + Word::power(y, k - 1)};
  for (std::size_t j = 0; j + 3 <= d; ++j) atoms.insert(x + Word::power(y, j));
  return LyndonPair::from_atoms(Alphabet::binary(), std::move(atoms));
}

// All Lyndon words of length <= m.
inline LyndonPair free_nilpotent(const Alphabet& alphabet, std::size_t m) {
  require(m >= 1, "free_nilpotent: m must be positive");
  const auto words = lyndon_words(alphabet, m);
  return LyndonPair::from_atoms(alphabet, WordSet(words.begin(), words.end()));
}

inline Word fibonacci_word(std::size_t k) {
  std::vector<Word> f{Word{0}, Word{1}};
  for (std::size_t i = 2; i <= k; ++i) f.push_back(i % 2 == 0 ? f[i - 2] + f[i - 1] : f[i - 1] + f[i - 2]);
  return f[k];
}

// Minimal elements of {f_{2k-2} f_{2k}, f_{2k+1} f_{2k-1} : k >= 1} together with f_n.
inline WordSet fibonacci_obstructions(std::size_t n) {
  WordSet candidates{fibonacci_word(n)};
  // every product with an index >= n contains f_n
  for (std::size_t k = 1; 2 * k - 2 <= n + 1; ++k) {
    candidates.insert(fibonacci_word(2 * k - 2) + fibonacci_word(2 * k));
    candidates.insert(fibonacci_word(2 * k + 1) + fibonacci_word(2 * k - 1));
  }
  WordSet minimal;
  for (const Word& w : candidates) {
    bool keep = true;
    for (const Word& u : candidates)
      if (u != w && w.contains(u)) keep = false;
    if (keep) minimal.insert(w);
  }
  return minimal;
}

// Atoms f_0, ..., f_{n-1}.
inline LyndonPair fibonacci_pair(std::size_t n) {
  require(n >= 2, "fibonacci_pair: n must be at least 2");
  WordSet atoms;
  for (std::size_t k = 0; k < n; ++k) atoms.insert(fibonacci_word(k));
  return LyndonPair::from_both(Alphabet::binary(), std::move(atoms), fibonacci_obstructions(n));
}

// ---------------------------------------------------------------------------
// Golden data

// Names a pair by catalog id, by family constructor, or by explicit atoms.
struct PairReference {
  std::optional<std::string> id;
  std::optional<std::string> family;
  std::size_t param = 0;
  std::optional<WordSet> atoms;
};

struct ReferenceCorrection {
  std::optional<Word> listed;
  std::optional<Word> actual;
};

struct CatalogEntry {
  CatalogEntry(std::string id_, std::size_t d_, std::size_t m_, std::size_t index_, LyndonPair pair_)
      : id(std::move(id_)), d(d_), m(m_), index(index_), pair(std::move(pair_)) {}

  std::string id;
  std::size_t d = 0;
  std::size_t m = 0;
  std::size_t index = 0;
  LyndonPair pair;
  std::string obstructions_source;
  WordSet reference_fragment;
  std::vector<ReferenceCorrection> corrections;
  std::optional<PairReference> component;
  bool standard = false;
  std::optional<PairReference> completion;
  std::string note;
};

struct MixedRelationExample {
  std::string id;
  LyndonPair pair;
  Word chain;
  LiePoly relation;
  std::string note;
};

namespace detail {

inline WordSet parse_words(const nlohmann::json& j) {
  const Alphabet alphabet = Alphabet::binary();
  WordSet out;
  for (const auto& s : j) out.insert(alphabet.parse_word(s.get<std::string>()));
  return out;
}

inline std::optional<PairReference> parse_reference(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  PairReference ref;
  if (j.contains("ref")) ref.id = j["ref"].get<std::string>();
  if (j.contains("family")) {
    ref.family = j["family"].get<std::string>();
    ref.param = j["param"].get<std::size_t>();
  }
  if (j.contains("atoms")) ref.atoms = parse_words(j["atoms"]);
  return ref;
}

inline const nlohmann::json& golden_document() {
  static const nlohmann::json doc = nlohmann::json::parse(golden_pairs_json);
  return doc;
}

inline const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    const Alphabet alphabet = Alphabet::binary();
    for (const auto& j : golden_document()["entries"]) {
      CatalogEntry e(j["id"].get<std::string>(), j["d"].get<std::size_t>(), j["m"].get<std::size_t>(), j["index"].get<std::size_t>(),
                     LyndonPair::from_both(alphabet, parse_words(j["atoms"]), parse_words(j["obstructions"])));
      e.obstructions_source = j["obstructions_source"].get<std::string>();
      if (j.contains("reference_fragment")) e.reference_fragment = parse_words(j["reference_fragment"]);
      if (j.contains("reference_corrections"))
        for (const auto& c : j["reference_corrections"]) {
          ReferenceCorrection rc;
          if (c.contains("listed")) rc.listed = alphabet.parse_word(c["listed"].get<std::string>());
          if (c.contains("actual")) rc.actual = alphabet.parse_word(c["actual"].get<std::string>());
          e.corrections.push_back(rc);
        }
      e.component = parse_reference(j["component"]);
      e.standard = j["standard"].get<bool>();
      if (j.contains("completion")) e.completion = parse_reference(j["completion"]);
      if (j.contains("note")) e.note = j["note"].get<std::string>();
      out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

inline std::vector<CatalogEntry> entries_with_d(std::size_t d) {
  std::vector<CatalogEntry> out;
  for (const auto& e : all_entries())
    if (e.d == d) out.push_back(e);
  return out;
}

}  // namespace detail

inline int golden_data_version() { return detail::golden_document()["version"].get<int>(); }

inline std::vector<CatalogEntry> golden_d6() { return detail::entries_with_d(6); }
inline std::vector<CatalogEntry> golden_d7() { return detail::entries_with_d(7); }

inline const CatalogEntry& golden_entry(std::string_view id) {
  for (const auto& e : detail::all_entries())
    if (e.id == id) return e;
  throw Error("unknown catalog id: " + std::string(id));
}

inline LyndonPair resolve(const PairReference& ref) {
  if (ref.id) return golden_entry(*ref.id).pair;
  if (ref.atoms) return LyndonPair::from_atoms(Alphabet::binary(), *ref.atoms);
  require(ref.family.has_value(), "empty pair reference");
  if (*ref.family == "filiform_L") return filiform_L(ref.param);
  if (*ref.family == "filiform_Q") return filiform_Q(ref.param);
  if (*ref.family == "free_nilpotent") return free_nilpotent(Alphabet::binary(), ref.param);
  if (*ref.family == "fibonacci") return fibonacci_pair(ref.param);
  throw Error("unknown family: " + *ref.family);
}

// The 18-atom pair whose completion adds a relation that is not a monomial.
inline MixedRelationExample mixed_relation_example() {
  const auto& j = detail::golden_document()["examples"][0];
  const Alphabet alphabet = Alphabet::binary();
  LiePoly relation;
  for (const auto& [word, coefficient] : j["relation"].items())
    relation.add_term(alphabet.parse_word(word), Rational(coefficient.get<std::string>()));
  return {j["id"].get<std::string>(), LyndonPair::from_both(alphabet, detail::parse_words(j["atoms"]), detail::parse_words(j["obstructions"])),
          alphabet.parse_word(j["chain"].get<std::string>()), relation, j["note"].get<std::string>()};
}

}  // namespace lynpair

#endif
