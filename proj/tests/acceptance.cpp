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


// Acceptance runner: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lynpair/lynpair.hpp"
#include "support.hpp"

namespace {

using namespace lynpair;
using testing::fmt;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << why << "; ";
  }
};

Word w(const char* s) { return Alphabet::binary().parse_word(s); }

WordSet words(std::initializer_list<const char*> list) {
  WordSet out;
  for (const char* s : list) out.insert(w(s));
  return out;
}

std::string join(const WordSet& set) {
  std::string out;
  for (const Word& x : set) out += (out.empty() ? "" : " ") + fmt(x);
  return out;
}

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::vector<LyndonPair> golden_pairs() {
  std::vector<LyndonPair> out;
  for (const auto& e : golden_d6()) out.push_back(e.pair);
  for (const auto& e : golden_d7()) out.push_back(e.pair);
  return out;
}

void lyndon_counts(Outcome& out) {
  const std::vector<long> expected{2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335};
  std::vector<long> counts(12, 0);
  for (const Word& u : lyndon_words(2, 12)) ++counts[u.size() - 1];
  for (std::size_t n = 1; n <= 12; ++n) {
    if (counts[n - 1] != expected[n - 1]) out.fail("length " + std::to_string(n) + " has " + std::to_string(counts[n - 1]) + " words");
    if (witt_count(2, n) != expected[n - 1]) out.fail("witt_count(2, " + std::to_string(n) + ") differs");
  }
  if (out.pass) out.detail << "2 1 2 3 6 9 18 30 56 99 186 335";
}

void duality_goldens(Outcome& out) {
  const AtomSet atoms = atoms_from_obstructions(2, words({"xxy", "xyy"}));
  if (!atoms.finite || atoms.atoms != words({"x", "xy", "y"})) out.fail("N({xxy, xyy}) = " + join(atoms.atoms));
  if (obstructions_from_atoms(2, words({"x", "xy", "y"})) != words({"xxy", "xyy"})) out.fail("W({x, xy, y}) is wrong");
  const WordSet w3 = obstructions_from_atoms(2, words({"x", "xy", "xyy", "y"}));
  if (w3 != words({"xxy", "xyxyy", "xyyy"})) out.fail("W({x, xy, xyy, y}) = " + join(w3));
  if (out.pass) out.detail << "{xxy, xyy} <-> {x, xy, y}; {x, xy, xyy, y} -> {" << join(w3) << "}";
}

void global_dimensions(Outcome& out) {
  const auto small = global_dimension(2, words({"xxy", "xyy"}));
  if (small.value != std::optional<std::size_t>(3)) out.fail("gldim {xxy, xyy} is not 3");
  std::size_t checked = 0;
  for (const auto& e : detail::all_entries()) {
    const auto g = global_dimension(2, e.pair.obstructions());
    if (g.value != std::optional<std::size_t>(e.d)) out.fail("gldim of " + e.id + " is not " + std::to_string(e.d));
    ++checked;
  }
  if (out.pass) out.detail << "gldim {xxy, xyy} = 3; gldim = |N| on " << checked << " catalog pairs";
}

void hilbert_bridge(Outcome& out) {
  std::size_t checked = 0;
  for (const auto& e : detail::all_entries()) {
    if (hilbert_from_atoms(e.pair.atoms(), 12) != normal_word_counts(2, e.pair.obstructions(), 12))
      out.fail("series differ for " + e.id);
    ++checked;
  }
  if (out.pass) out.detail << checked << " catalog pairs agree to degree 12";
}

std::set<CanonicalKey> keys(const std::vector<LyndonPair>& pairs) {
  std::set<CanonicalKey> out;
  for (const auto& p : pairs) out.insert(canonical_key(p));
  return out;
}

void enumeration(Outcome& out) {
  std::ostringstream counts;
  for (std::size_t d : {6u, 7u}) {
    const auto found = enumerate_pairs(Alphabet::binary(), d, jobs());
    const std::size_t expected = d == 6 ? 8 : 30;
    const std::string tag = "d = " + std::to_string(d) + ": ";
    counts << tag << found.size() << " classes; ";
    if (found.size() != expected) out.fail(tag + std::to_string(found.size()) + " classes, expected " + std::to_string(expected));

    std::map<CanonicalKey, std::vector<std::string>> listed;
    for (const auto& e : d == 6 ? golden_d6() : golden_d7()) listed[canonical_key(e.pair)].push_back(e.id);
    for (const auto& [key, ids] : listed)
      if (ids.size() > 1) {
        std::string names;
        for (const auto& id : ids) names += (names.empty() ? "" : " ~ ") + id;
        out.fail(tag + "catalog entries " + names + " are one class");
      }
    const auto found_keys = keys(found);
    for (const auto& p : found)
      if (!listed.count(canonical_key(p))) out.fail(tag + "class with atoms {" + join(p.atoms()) + "} is not in the catalog");
    for (const auto& [key, ids] : listed)
      if (!found_keys.count(key)) out.fail(tag + "catalog entry " + ids.front() + " was not enumerated");
  }
  if (out.pass) out.detail << counts.str() << "class sets equal the catalog";
  else out.detail << counts.str();
}

void minimal_obstructions(Outcome& out) {
  for (std::size_t d = 4; d <= 8; ++d) {
    std::vector<LyndonPair> hits;
    for (const auto& p : enumerate_pairs(Alphabet::binary(), d, jobs()))
      if (is_connected(p.atoms()) && p.obstructions().size() == d - 1) hits.push_back(p);
    if (hits.size() != 1)
      out.fail("d = " + std::to_string(d) + ": " + std::to_string(hits.size()) + " connected pairs with d - 1 obstructions");
    else if (canonical_key(hits.front()) != canonical_key(filiform_L(d)))
      out.fail("d = " + std::to_string(d) + ": the unique pair is not filiform_L");
  }
  if (out.pass) out.detail << "unique and equal to filiform_L(d) for d = 4..8";
}

void composition_goldens(Outcome& out) {
  const LiePoly first = overlap_composition(w("xxxy"), w("xxyy"), w("xxxyy"));
  if (first != LiePoly::monomial(w("xxyxy"), Rational(-1))) out.fail("(xxxy, xxyy) composition is wrong");
  const LiePoly second = overlap_composition(w("xxxy"), w("xyyyy"), w("xxxyyyy"));
  LiePoly expected;
  expected.add_term(w("xxyxyyy"), Rational(1));
  expected.add_term(w("xxyyxyy"), Rational(-3));
  expected.add_term(w("xxyyyxy"), Rational(-4));
  expected.add_term(w("xyxyxyy"), Rational(3));
  if (second != expected) out.fail("(xxxy, xyyyy) composition is wrong");
  if (out.pass) out.detail << "-[xxyxy]; (1, -3, -4, 3)";
}

void verdicts(Outcome& out) {
  std::size_t standard = 0, chains = 0;
  for (const auto& e : detail::all_entries()) {
    const bool expected = (e.d == 6 && e.index <= 4) || (e.d == 7 && e.index <= 9);
    const GSReport fast = is_gs_basis(e.pair, true, jobs());
    const GSReport full = is_gs_basis(e.pair, false, jobs());
    if ((fast.verdict == Verdict::standard) != expected) out.fail(e.id + " with shortcuts: " + to_string(fast.verdict));
    if ((full.verdict == Verdict::standard) != expected) out.fail(e.id + " without shortcuts: " + to_string(full.verdict));
    if (fast.compositions.size() != full.compositions.size()) {
      out.fail(e.id + ": chain lists differ");
      continue;
    }
    for (std::size_t i = 0; i < fast.compositions.size(); ++i) {
      const auto& a = fast.compositions[i];
      const auto& b = full.compositions[i];
      if (a.omega != b.omega || a.solvable != b.solvable) out.fail(e.id + ": modes disagree on chain " + fmt(a.omega));
    }
    chains += full.compositions.size();
    standard += expected;
  }
  if (out.pass) out.detail << standard << " standard pairs; " << chains << " chains agree in both modes";
}

void degenerations(Outcome& out) {
  auto expect = [&](const std::string& label, const LyndonPair& input, const LyndonPair& target) {
    const GSReport r = gs_complete(input);
    if (r.verdict != Verdict::degenerates) out.fail(label + ": verdict " + to_string(r.verdict));
    if (r.result_atoms != target.atoms() || r.result_obstructions != target.obstructions())
      out.fail(label + ": result atoms {" + join(r.result_atoms) + "}");
  };
  expect("7.5.10", golden_entry("7.5.10").pair, golden_entry("6.4.1").pair);
  expect("7.6.12", golden_entry("7.6.12").pair, filiform_Q(6));
  for (std::size_t n : {5u, 6u, 7u}) expect("fibonacci " + std::to_string(n), fibonacci_pair(n), filiform_L(4));
  if (out.pass) out.detail << "7.5.10 -> 6.4.1; 7.6.12 -> filiform_Q(6); fibonacci 5, 6, 7 -> filiform_L(4)";
}

void mixed_relation(Outcome& out) {
  const MixedRelationExample ex = mixed_relation_example();
  const GSReport r = gs_complete(ex.pair);
  const Word lead = w("xxyxyyy");
  bool found = false;
  for (const LiePoly& f : r.basis)
    if (f.leading_word() == lead) found = f == ex.relation;
  if (!found) out.fail("no basis element equals the expected relation");
  WordSet expected = ex.pair.atoms();
  expected.erase(lead);
  if (r.result_atoms != expected) out.fail("result atoms {" + join(r.result_atoms) + "}");
  if (out.pass) out.detail << "basis of " << r.basis.size() << " relations; " << r.result_atoms.size() << " atoms remain";
}

void properties(Outcome& out) {
  auto run = [&](const std::string& label, const std::string& failure) {
    if (!failure.empty()) out.fail(label + ": " + failure);
  };
  run("round trip", testing::check_round_trip(8, 300, 11));
  run("triangularity", testing::check_triangularity(10));
  run("regular bracketing", testing::check_regular_triangularity(8));
  run("jacobi", testing::check_jacobi(9, 200, 17));
  std::size_t pairs = 0;
  for (std::size_t d = 2; d <= 7; ++d)
    for (const auto& p : enumerate_pairs(Alphabet::binary(), d, jobs())) {
      run("duality " + join(p.atoms()), testing::check_duality(p));
      run("canonical " + join(p.atoms()), testing::check_canonicalization(p));
      if (auto image = mirror_pair(p)) run("duality of mirror", testing::check_duality(*image));
      ++pairs;
    }
  for (const auto& p : golden_pairs()) run("catalog duality", testing::check_duality(p));
  if (out.pass) out.detail << "all sweeps pass; " << pairs << " enumerated pairs";
}

const std::map<int, std::pair<std::string, std::function<void(Outcome&)>>>& criteria() {
  static const std::map<int, std::pair<std::string, std::function<void(Outcome&)>>> table{
      {1, {"Lyndon counts", lyndon_counts}},
      {2, {"duality goldens", duality_goldens}},
      {3, {"global dimension", global_dimensions}},
      {4, {"Hilbert bridge", hilbert_bridge}},
      {5, {"enumeration", enumeration}},
      {6, {"minimal obstruction sets", minimal_obstructions}},
      {7, {"composition goldens", composition_goldens}},
      {8, {"GS verdicts", verdicts}},
      {9, {"degenerations", degenerations}},
      {10, {"mixed relation replay", mixed_relation}},
      {11, {"property suites", properties}},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]...\n";
      return 1;
    }
  }
  if (selected.empty())
    for (const auto& [n, c] : criteria()) selected.push_back(n);

  bool all = true;
  for (int n : selected) {
    const auto it = criteria().find(n);
    if (it == criteria().end()) {
      std::cerr << "unknown criterion " << n << "\n";
      return 1;
    }
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      it->second.second(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << n << " (" << it->second.first << "): " << (out.pass ? "PASS" : "FAIL") << " [" << seconds << " s] "
              << out.detail.str() << std::endl;
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
