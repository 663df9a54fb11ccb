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

#ifndef LYNPAIR_IO_HPP
#define LYNPAIR_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lynpair/error.hpp"
#include "lynpair/gs.hpp"
#include "lynpair/lie.hpp"
#include "lynpair/monomial.hpp"
#include "lynpair/pairs.hpp"
#include "lynpair/word.hpp"

namespace lynpair::io {

using nlohmann::json;

inline json words_to_json(const Alphabet& alphabet, const WordSet& words) {
  json out = json::array();
  for (const Word& w : words) out.push_back(alphabet.format(w));
  return out;
}

inline WordSet words_from_json(const Alphabet& alphabet, const json& j) {
  require(j.is_array(), "expected an array of words");
  WordSet out;
  for (const auto& s : j) {
    require(s.is_string(), "expected a word string");
    out.insert(alphabet.parse_word(s.get<std::string>()));
  }
  return out;
}

inline json alphabet_to_json(const Alphabet& alphabet) { return alphabet.symbols(); }

inline Alphabet alphabet_from_json(const json& j) {
  require(j.is_array(), "alphabet must be an array of symbol names");
  std::vector<std::string> symbols;
  for (const auto& s : j) {
    require(s.is_string(), "alphabet symbols must be strings");
    symbols.push_back(s.get<std::string>());
  }
  return Alphabet(std::move(symbols));
}

inline json invariants_to_json(const PairInvariants& inv) {
  return {{"d", inv.d}, {"m", inv.m}, {"c", inv.c ? json(*inv.c) : json(nullptr)}, {"connected", inv.connected}};
}

inline json pair_to_json(const LyndonPair& pair) {
  return {{"alphabet", alphabet_to_json(pair.alphabet())},
          {"atoms", words_to_json(pair.alphabet(), pair.atoms())},
          {"obstructions", words_to_json(pair.alphabet(), pair.obstructions())},
          {"invariants", invariants_to_json(pair.invariants())}};
}

// Reads atoms, obstructions or both; the invariants block is ignored.
inline LyndonPair pair_from_json(const json& j) {
  require(j.is_object(), "pair document must be an object");
  const Alphabet alphabet = j.contains("alphabet") ? alphabet_from_json(j["alphabet"]) : Alphabet::binary();
  const bool has_atoms = j.contains("atoms"), has_obstructions = j.contains("obstructions");
  require(has_atoms || has_obstructions, "pair document needs atoms or obstructions");
  if (has_atoms && has_obstructions)
    return LyndonPair::from_both(alphabet, words_from_json(alphabet, j["atoms"]), words_from_json(alphabet, j["obstructions"]));
  if (has_atoms) return LyndonPair::from_atoms(alphabet, words_from_json(alphabet, j["atoms"]));
  return LyndonPair::from_obstructions(alphabet, words_from_json(alphabet, j["obstructions"]));
}

template <bool LyndonKeys>
json poly_to_json(const Alphabet& alphabet, const LinearCombination<LyndonKeys>& p) {
  json out = json::array();
  for (const auto& [w, c] : p.terms())
    out.push_back({{"word", alphabet.format(w)}, {"numerator", c.get_num().get_str()}, {"denominator", c.get_den().get_str()}});
  return out;
}

inline LiePoly lie_poly_from_json(const Alphabet& alphabet, const json& j) {
  require(j.is_array(), "polynomial must be an array of terms");
  LiePoly out;
  for (const auto& t : j) {
    Rational c(t.at("numerator").get<std::string>() + "/" + t.at("denominator").get<std::string>());
    c.canonicalize();
    out.add_term(alphabet.parse_word(t.at("word").get<std::string>()), c);
  }
  return out;
}

inline json integers_to_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

inline json report_to_json(const GSReport& report, bool with_compositions = false) {
  const Alphabet& alphabet = report.pair.alphabet();
  json basis = json::array();
  for (const auto& f : report.basis) basis.push_back(poly_to_json(alphabet, f));
  json skipped = json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"omega", alphabet.format(s.omega)}, {"shortcut", s.shortcut}});
  json out = {{"pair", pair_to_json(report.pair)},
              {"verdict", to_string(report.verdict)},
              {"basis", basis},
              {"result_atoms", words_to_json(alphabet, report.result_atoms)},
              {"result_obstructions", words_to_json(alphabet, report.result_obstructions)},
              {"within_component", report.within_component},
              {"skipped", skipped}};
  if (with_compositions) {
    json comps = json::array();
    for (const auto& c : report.compositions)
      comps.push_back({{"kind", to_string(c.kind)},
                       {"omega", alphabet.format(c.omega)},
                       {"left", alphabet.format(c.left)},
                       {"right", alphabet.format(c.right)},
                       {"computed", c.computed},
                       {"value", poly_to_json(alphabet, c.value)},
                       {"normal_form", poly_to_json(alphabet, c.normal_form)},
                       {"solvable", c.solvable},
                       {"shortcut", c.shortcut ? json(*c.shortcut) : json(nullptr)}});
    out["compositions"] = comps;
  }
  return out;
}

}  // namespace lynpair::io

#endif
