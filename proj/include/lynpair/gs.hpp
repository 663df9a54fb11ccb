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

#ifndef LYNPAIR_GS_HPP
#define LYNPAIR_GS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lynpair/error.hpp"
#include "lynpair/lie.hpp"
#include "lynpair/monomial.hpp"
#include "lynpair/pairs.hpp"
#include "lynpair/word.hpp"

namespace lynpair {

// Value of the regular bracketing a[f]b with the marked [lead(f)] replaced by f.
// The result has leading word a lead(f) b with the leading coefficient of f.
inline LiePoly special_bracketing(const Word& a, const LiePoly& f, const Word& b, LyndonBracket& engine) {
  const Word& lead = f.leading_word();
  const BracketTree tree = regular_bracketing(a, lead, b);
  LiePoly value = engine.evaluate(tree, &f);
  if (value.is_zero() || value.leading_word() != a + lead + b || value.leading_coefficient() != f.leading_coefficient())
    throw Error("special bracketing lost its leading word");
  return value;
}

// ([u] t) - [omega] where omega = u t = h v.
inline LiePoly overlap_composition(const Word& u, const Word& v, const Word& omega, LyndonBracket& engine) {
  require(omega.starts_with(u) && omega.ends_with(v), "overlap_composition: omega must start with u and end with v");
  require(u.size() < omega.size() && v.size() < omega.size() && u.size() + v.size() > omega.size(),
          "overlap_composition: u and v must overlap properly inside omega");
  const Word head = omega.prefix(omega.size() - v.size());
  const Word tail = omega.suffix_from(u.size());
  // (h[v]) = [omega]
  if (engine.evaluate(regular_bracketing(head, v, Word{})) != LiePoly::monomial(omega))
    throw Error("right-segment regular bracketing differs from the standard bracketing");
  return engine.evaluate(regular_bracketing(Word{}, u, tail)) - LiePoly::monomial(omega);
}

inline LiePoly overlap_composition(const Word& u, const Word& v, const Word& omega) {
  LyndonBracket engine;
  return overlap_composition(u, v, omega, engine);
}

// Full reduction by leading-word factor matches against monic relations.
class Reducer {
 public:
  Reducer(std::vector<LiePoly> relations, LyndonBracket& engine) : engine_(engine) {
    for (auto& r : relations) add(std::move(r));
  }

  void add(LiePoly relation) {
    require(!relation.is_zero(), "reduce_mod: zero relation");
    if (relation.leading_coefficient() != 1) relation *= 1 / Rational(relation.leading_coefficient());
    relations_.push_back(std::move(relation));
  }

  const std::vector<LiePoly>& relations() const noexcept { return relations_; }

  LiePoly reduce(LiePoly f) {
    LiePoly normal;
    while (!f.is_zero()) {
      const Word w = f.leading_word();
      const Rational c = f.leading_coefficient();
      bool reduced = false;
      for (std::size_t i = 0; i < relations_.size() && !reduced; ++i) {
        const Word& lead = relations_[i].leading_word();
        const std::size_t pos = w.find(lead);
        if (pos == Word::npos) continue;
        f.add_scaled(special(i, w, pos), -c);
        reduced = true;
      }
      if (!reduced) {
        normal.add_term(w, c);
        f.add_term(w, -c);
      }
    }
    return normal;
  }

 private:
  const LiePoly& special(std::size_t index, const Word& w, std::size_t pos) {
    auto key = std::make_tuple(index, w, pos);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    const Word& lead = relations_[index].leading_word();
    LiePoly value = special_bracketing(w.prefix(pos), relations_[index], w.suffix_from(pos + lead.size()), engine_);
    return cache_.emplace(std::move(key), std::move(value)).first->second;
  }

  LyndonBracket& engine_;
  std::vector<LiePoly> relations_;
  std::map<std::tuple<std::size_t, Word, std::size_t>, LiePoly> cache_;
};

inline LiePoly reduce_mod(const LiePoly& f, const std::vector<LiePoly>& relations) {
  LyndonBracket engine;
  Reducer reducer(relations, engine);
  return reducer.reduce(f);
}

inline std::vector<LiePoly> monomial_relations(const WordSet& words) {
  std::vector<LiePoly> out;
  for (const Word& w : words) out.push_back(LiePoly::monomial(w));
  return out;
}

// ---------------------------------------------------------------------------
// Shortcuts

// Atoms of the same multidegree as omega that are deg-lex below it.
inline bool has_atom_below(const WordSet& atoms, const Word& omega, std::size_t alphabet_size) {
  const MultiDegree alpha(omega, alphabet_size);
  for (const Word& a : atoms)
    if (a.size() == omega.size() && omega < a && MultiDegree(a, alphabet_size) == alpha) return true;
  return false;
}

inline std::string shortcut_reason(const WordSet& atoms, const Word& omega) {
  return omega.size() > max_length(atoms) ? "m(N) < |omega|" : "no atom below omega in its multidegree";
}

// A disconnected atom set never gives a standard pair.
inline bool disconnected_shortcut(const LyndonPair& pair) { return !is_connected(pair.atoms()); }

// ---------------------------------------------------------------------------
// Reports

enum class CompositionKind { overlap, inclusion };
enum class Verdict { standard, degenerates, bound_exhausted };

inline std::string to_string(CompositionKind k) { return k == CompositionKind::overlap ? "overlap" : "inclusion"; }
inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::standard: return "standard";
    case Verdict::degenerates: return "degenerates";
    case Verdict::bound_exhausted: return "bound_exhausted";
  }
  return "";
}

struct Composition {
  CompositionKind kind = CompositionKind::overlap;
  Word omega;
  Word left;
  Word right;
  bool computed = false;
  LiePoly value;
  LiePoly normal_form;
  bool solvable = false;
  std::optional<std::string> shortcut;  // set when a shortcut proves solvability
};

struct SkipEntry {
  Word omega;
  std::string shortcut;
};

struct GSReport {
  explicit GSReport(LyndonPair p) : pair(std::move(p)) {}

  LyndonPair pair;
  Verdict verdict = Verdict::standard;
  std::vector<LiePoly> basis;
  WordSet result_atoms;
  WordSet result_obstructions;
  bool within_component = true;
  std::vector<SkipEntry> skipped;
  std::vector<Composition> compositions;
};

// Checks every 2-chain composition of [W]. With shortcuts, chains whose
// multidegree has no atom below omega are skipped as solvable.
inline GSReport is_gs_basis(const LyndonPair& pair, bool use_shortcuts = true, unsigned jobs = 1) {
  const std::size_t n = pair.alphabet().size();
  const auto chains = two_chains(pair.obstructions());
  std::vector<Composition> results(chains.size());
  const std::vector<LiePoly> relations = monomial_relations(pair.obstructions());
  auto work = [&](std::size_t begin, std::size_t step) {
    LyndonBracket engine;
    Reducer reducer(relations, engine);
    for (std::size_t i = begin; i < chains.size(); i += step) {
      const TwoChain& chain = chains[i];
      Composition& c = results[i];
      c.kind = CompositionKind::overlap;
      c.omega = chain.omega;
      c.left = chain.left;
      c.right = chain.right;
      if (!has_atom_below(pair.atoms(), chain.omega, n)) c.shortcut = shortcut_reason(pair.atoms(), chain.omega);
      if (use_shortcuts && c.shortcut) {
        c.solvable = true;
        continue;
      }
      c.computed = true;
      c.value = overlap_composition(chain.left, chain.right, chain.omega, engine);
      c.normal_form = reducer.reduce(c.value);
      c.solvable = c.normal_form.is_zero();
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(chains.size(), 1))));
  parallel_for(workers, workers, [&](std::size_t t) { work(t, workers); });

  GSReport report{pair};
  report.verdict = Verdict::standard;
  for (const auto& c : results) {
    if (!c.solvable) report.verdict = Verdict::degenerates;
    if (!c.computed) report.skipped.push_back({c.omega, *c.shortcut});
  }
  report.compositions = std::move(results);
  if (report.verdict == Verdict::standard) {
    report.basis = relations;
    report.result_atoms = pair.atoms();
    report.result_obstructions = pair.obstructions();
  }
  report.within_component = report.verdict != Verdict::standard || is_connected(pair.atoms());
  return report;
}

// ---------------------------------------------------------------------------
// Completion

class Completion {
 public:
  Completion(const LyndonPair& pair, std::size_t degree_bound)
      : pair_(pair), alphabet_size_(pair.alphabet().size()), bound_(degree_bound), atoms_(pair.atoms()) {}

  GSReport run() {
    for (const Word& w : pair_.obstructions()) adjoin(LiePoly::monomial(w));
    while (!pending_.empty()) {
      const Pending next = *pending_.begin();
      pending_.erase(pending_.begin());
      process(next);
    }
    interreduce();

    GSReport report{pair_};
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (alive_[i]) {
        report.basis.push_back(relations_[i]);
        report.result_obstructions.insert(relations_[i].leading_word());
      }
    std::sort(report.basis.begin(), report.basis.end(),
              [](const LiePoly& a, const LiePoly& b) { return a.leading_word() < b.leading_word(); });
    const AtomSet result = atoms_from_obstructions(alphabet_size_, report.result_obstructions);
    require(result.finite && result.atoms == atoms_, "completion: atom bookkeeping diverged");
    report.result_atoms = result.atoms;
    const WordSet component = connected_component(pair_.atoms());
    report.within_component = std::includes(component.begin(), component.end(), report.result_atoms.begin(), report.result_atoms.end());
    report.skipped = std::move(skipped_);
    report.compositions = std::move(compositions_);
    if (exhausted_)
      report.verdict = Verdict::bound_exhausted;
    else if (report.result_obstructions == pair_.obstructions())
      report.verdict = Verdict::standard;
    else
      report.verdict = Verdict::degenerates;
    return report;
  }

 private:
  struct Pending {
    Word omega;
    std::size_t first;
    std::size_t second;
    friend bool operator<(const Pending& a, const Pending& b) {
      if (a.omega.size() != b.omega.size()) return a.omega.size() < b.omega.size();
      if (a.omega != b.omega) return b.omega < a.omega;
      return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    }
  };

  // Relations whose leading words are the alive obstructions.
  std::vector<LiePoly> alive_relations() const {
    std::vector<LiePoly> out;
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (alive_[i]) out.push_back(relations_[i]);
    return out;
  }

  LiePoly reduce(const LiePoly& f) {
    Reducer reducer(alive_relations(), engine_);
    return reducer.reduce(f);
  }

  std::optional<std::string> skip_reason(const Word& omega) const {
    if (has_atom_below(atoms_, omega, alphabet_size_)) return std::nullopt;
    return shortcut_reason(atoms_, omega);
  }

  void adjoin(LiePoly relation) {
    relation *= 1 / Rational(relation.leading_coefficient());
    const Word lead = relation.leading_word();
    const std::size_t index = relations_.size();
    relations_.push_back(std::move(relation));
    alive_.push_back(true);
    for (auto it = atoms_.begin(); it != atoms_.end();)
      it = it->contains(lead) ? atoms_.erase(it) : std::next(it);

    // inclusions: older leading words containing the new one
    std::vector<std::size_t> swallowed;
    for (std::size_t i = 0; i < index; ++i)
      if (alive_[i] && relations_[i].leading_word() != lead && relations_[i].leading_word().contains(lead)) swallowed.push_back(i);
    for (std::size_t i : swallowed) {
      alive_[i] = false;
      const Word big = relations_[i].leading_word();
      Composition c;
      c.kind = CompositionKind::inclusion;
      c.omega = big;
      c.left = big;
      c.right = lead;
      c.shortcut = skip_reason(big);
      if (c.shortcut) {
        c.solvable = true;
        skipped_.push_back({big, *c.shortcut});
        compositions_.push_back(std::move(c));
        continue;
      }
      const std::size_t pos = big.find(lead);
      c.computed = true;
      c.value = relations_[i] - special_bracketing(big.prefix(pos), relations_[index], big.suffix_from(pos + lead.size()), engine_);
      c.normal_form = reduce(c.value);
      c.solvable = c.normal_form.is_zero();
      LiePoly nf = c.normal_form;
      compositions_.push_back(std::move(c));
      if (!nf.is_zero()) adjoin(std::move(nf));
    }
    if (!alive_[index]) return;
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (!alive_[i]) continue;
      add_overlaps(index, i);
      if (i != index) add_overlaps(i, index);
    }
  }

  void add_overlaps(std::size_t first, std::size_t second) {
    const Word& u = relations_[first].leading_word();
    const Word& v = relations_[second].leading_word();
    for (std::size_t k = 1; k < u.size() && k < v.size(); ++k)
      if (u.suffix_from(u.size() - k) == v.prefix(k)) pending_.insert({u + v.suffix_from(k), first, second});
  }

  void process(const Pending& p) {
    if (!alive_[p.first] || !alive_[p.second]) return;
    const LiePoly& f = relations_[p.first];
    const LiePoly& g = relations_[p.second];
    Composition c;
    c.kind = CompositionKind::overlap;
    c.omega = p.omega;
    c.left = f.leading_word();
    c.right = g.leading_word();
    c.shortcut = skip_reason(p.omega);
    if (c.shortcut) {
      c.solvable = true;
      skipped_.push_back({p.omega, *c.shortcut});
      compositions_.push_back(std::move(c));
      return;
    }
    if (p.omega.size() > bound_) {
      exhausted_ = true;
      compositions_.push_back(std::move(c));
      return;
    }
    const Word head = p.omega.prefix(p.omega.size() - c.right.size());
    const Word tail = p.omega.suffix_from(c.left.size());
    c.computed = true;
    c.value = special_bracketing(Word{}, f, tail, engine_) - special_bracketing(head, g, Word{}, engine_);
    c.normal_form = reduce(c.value);
    c.solvable = c.normal_form.is_zero();
    LiePoly nf = c.normal_form;
    compositions_.push_back(std::move(c));
    if (!nf.is_zero()) adjoin(std::move(nf));
  }

  void interreduce() {
    for (std::size_t i = 0; i < relations_.size(); ++i) {
      if (!alive_[i]) continue;
      LiePoly lead = LiePoly::monomial(relations_[i].leading_word());
      LiePoly rest = relations_[i] - lead;
      std::vector<LiePoly> others;
      for (std::size_t j = 0; j < relations_.size(); ++j)
        if (alive_[j] && j != i) others.push_back(relations_[j]);
      Reducer reducer(std::move(others), engine_);
      relations_[i] = lead + reducer.reduce(rest);
    }
  }

  const LyndonPair& pair_;
  std::size_t alphabet_size_;
  std::size_t bound_;
  WordSet atoms_;  // atoms avoiding every current leading word
  LyndonBracket engine_;
  std::vector<LiePoly> relations_;
  std::vector<bool> alive_;
  std::set<Pending> pending_;
  std::vector<SkipEntry> skipped_;
  std::vector<Composition> compositions_;
  bool exhausted_ = false;
};

inline std::size_t default_degree_bound(const LyndonPair& pair) { return 2 * pair.m() + 2; }

// Buchberger-Shirshov completion of the monomial Lie ideal generated by [W].
inline GSReport gs_complete(const LyndonPair& pair, std::optional<std::size_t> degree_bound = std::nullopt) {
  Completion completion(pair, degree_bound.value_or(default_degree_bound(pair)));
  return completion.run();
}

// ---------------------------------------------------------------------------
// Structure constants

// Brackets of the basis [N] of the quotient Lie algebra, in [N] coordinates.
class StructureConstants {
 public:
  explicit StructureConstants(const LyndonPair& pair) : basis_(pair.atoms().begin(), pair.atoms().end()) {
    const GSReport report = is_gs_basis(pair, true);
    require(report.verdict == Verdict::standard, "structure constants need a standard pair");
    LyndonBracket engine;
    Reducer reducer(monomial_relations(pair.obstructions()), engine);
    const std::size_t d = basis_.size();
    table_.assign(d, std::vector<LiePoly>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j) {
        table_[i][j] = reducer.reduce(engine.bracket(basis_[i], basis_[j]));
        for (const auto& [w, c] : table_[i][j].terms()) require(pair.atoms().count(w) == 1, "bracket left the atom basis");
        table_[j][i] = -table_[i][j];
      }
  }

  const std::vector<Word>& basis() const noexcept { return basis_; }
  std::size_t index(const Word& w) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), w);
    require(it != basis_.end() && *it == w, "not a basis word");
    return static_cast<std::size_t>(it - basis_.begin());
  }
  const LiePoly& bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
  const LiePoly& bracket(const Word& u, const Word& v) const { return table_[index(u)][index(v)]; }

  // Bilinear extension of the table.
  LiePoly bracket(const LiePoly& f, const LiePoly& g) const {
    LiePoly out;
    for (const auto& [u, a] : f.terms())
      for (const auto& [v, b] : g.terms()) out.add_scaled(bracket(u, v), a * b);
    return out;
  }

  bool antisymmetric() const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!table_[i][i].is_zero()) return false;
      for (std::size_t j = 0; j < basis_.size(); ++j)
        if (table_[i][j] != -table_[j][i]) return false;
    }
    return true;
  }

  bool jacobi() const {
    const std::size_t d = basis_.size();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const LiePoly a = LiePoly::monomial(basis_[i]), b = LiePoly::monomial(basis_[j]), c = LiePoly::monomial(basis_[k]);
          LiePoly sum = bracket(a, bracket(b, c));
          sum += bracket(b, bracket(c, a));
          sum += bracket(c, bracket(a, b));
          if (!sum.is_zero()) return false;
        }
    return true;
  }

 private:
  std::vector<Word> basis_;
  std::vector<std::vector<LiePoly>> table_;
};

inline StructureConstants structure_constants(const LyndonPair& pair) { return StructureConstants(pair); }

}  // namespace lynpair

#endif
