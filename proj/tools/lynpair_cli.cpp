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


// lynpair: command-line front end for the lynpair library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lynpair/lynpair.hpp"

namespace {

using namespace lynpair;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_malformed = 1;
constexpr int exit_bound = 2;

const char* const tsv_help = R"(TSV columns:
  lyndon list            word, length
  lyndon factor          word, lyndon (0/1), cfl factors, standard factorization
  lyndon bracket         word, bracketing, expansion terms (coefficient*word)
  pair ...               atoms, obstructions, d, m, c, connected
  pair connected         connected, component atoms
  enumerate              index, d, m, |W|, connected, atoms, obstructions
  gldim                  global dimension (or "infinite"/"unknown"), witnesses
  hilbert                degree, coefficient
  gs check|complete      verdict, result atoms, result obstructions, basis size
  catalog                id, d, m, atoms, obstructions
  classify               row, catalog id, m, |W|, connected, standard, completion atoms
Word lists in TSV cells are space separated.)";

struct Options {
  std::string format = "json";
  unsigned jobs = 0;
  std::string alphabet = "x,y";
  std::string pair_file;
  std::string atoms;
  std::string obstructions;
  std::string catalog_id;
  bool quiet = false;
};

class Output {
 public:
  explicit Output(const Options& o) : tsv_(o.format == "tsv") {}
  bool tsv() const { return tsv_; }

  void emit(const json& doc) const { std::cout << doc.dump(2) << "\n"; }
  void row(const std::vector<std::string>& cells) const {
    for (std::size_t i = 0; i < cells.size(); ++i) std::cout << (i ? "\t" : "") << cells[i];
    std::cout << "\n";
  }

 private:
  bool tsv_;
};

unsigned worker_count(const Options& o) { return o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency()); }

Alphabet alphabet_of(const Options& o) { return Alphabet::parse(o.alphabet); }

// Comma or whitespace separated words.
WordSet parse_word_list(const Alphabet& alphabet, const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream in(cleaned);
  WordSet out;
  for (std::string token; in >> token;) out.insert(alphabet.parse_word(token));
  return out;
}

std::string join(const Alphabet& alphabet, const WordSet& words) {
  std::string out;
  for (const Word& w : words) out += (out.empty() ? "" : " ") + alphabet.format(w);
  return out;
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
}

LyndonPair input_pair(const Options& o) {
  if (!o.catalog_id.empty()) return golden_entry(o.catalog_id).pair;
  if (!o.pair_file.empty()) return io::pair_from_json(read_json(o.pair_file));
  const Alphabet alphabet = alphabet_of(o);
  const bool has_atoms = !o.atoms.empty(), has_obstructions = !o.obstructions.empty();
  if (has_atoms && has_obstructions)
    return LyndonPair::from_both(alphabet, parse_word_list(alphabet, o.atoms), parse_word_list(alphabet, o.obstructions));
  if (has_atoms) return LyndonPair::from_atoms(alphabet, parse_word_list(alphabet, o.atoms));
  if (has_obstructions) return LyndonPair::from_obstructions(alphabet, parse_word_list(alphabet, o.obstructions));
  throw Error("no input: pass --pair, --atoms, --obstructions or --id");
}

// Obstructions of an arbitrary monomial algebra; a pair file contributes its W.
std::pair<Alphabet, WordSet> input_obstructions(const Options& o) {
  if (!o.obstructions.empty() && o.pair_file.empty() && o.catalog_id.empty()) {
    const Alphabet alphabet = alphabet_of(o);
    return {alphabet, parse_word_list(alphabet, o.obstructions)};
  }
  const LyndonPair p = input_pair(o);
  return {p.alphabet(), p.obstructions()};
}

void add_input_options(CLI::App* sub, Options& o) {
  sub->add_option("--pair", o.pair_file, "Pair JSON file ('-' for stdin)");
  sub->add_option("--atoms", o.atoms, "Atoms, comma separated (e.g. x,xy,y)");
  sub->add_option("--obstructions", o.obstructions, "Obstructions, comma separated (e.g. xxy,xyy)");
  sub->add_option("--id", o.catalog_id, "Catalog entry id (e.g. 6.5.3)");
}

void emit_pair(const Output& out, const LyndonPair& p) {
  if (!out.tsv()) {
    out.emit(io::pair_to_json(p));
    return;
  }
  const PairInvariants inv = p.invariants();
  out.row({join(p.alphabet(), p.atoms()), join(p.alphabet(), p.obstructions()), std::to_string(inv.d), std::to_string(inv.m),
           inv.c ? std::to_string(*inv.c) : "-", inv.connected ? "1" : "0"});
}

std::string format_terms(const Alphabet& alphabet, const TermMap& terms) {
  std::string out;
  for (const auto& [w, c] : terms) out += (out.empty() ? "" : " ") + c.get_str() + "*" + alphabet.format(w);
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

int lyndon_list(const Options& o, std::size_t max_length) {
  const Alphabet alphabet = alphabet_of(o);
  const Output out(o);
  const auto words = lyndon_words(alphabet, max_length);
  if (out.tsv()) {
    for (const Word& w : words) out.row({alphabet.format(w), std::to_string(w.size())});
    return exit_ok;
  }
  json doc = json::array();
  for (const Word& w : words) doc.push_back(alphabet.format(w));
  out.emit(doc);
  return exit_ok;
}

int lyndon_factor(const Options& o, const std::string& text) {
  const Alphabet alphabet = alphabet_of(o);
  const Output out(o);
  const Word w = alphabet.parse_word(text);
  require(!w.empty(), "empty word");
  const bool lyndon = is_lyndon(w);
  json factors = json::array();
  std::string cells;
  for (const Word& f : cfl_factorize(w)) {
    factors.push_back(alphabet.format(f));
    cells += (cells.empty() ? "" : " ") + alphabet.format(f);
  }
  json standard = nullptr;
  if (lyndon && w.size() > 1) {
    const auto [u, v] = right_standard_factorization(w);
    standard = {alphabet.format(u), alphabet.format(v)};
  }
  if (out.tsv()) {
    out.row({alphabet.format(w), lyndon ? "1" : "0", cells, standard.is_null() ? "-" : standard[0].get<std::string>() + " " + standard[1].get<std::string>()});
    return exit_ok;
  }
  out.emit({{"word", alphabet.format(w)}, {"lyndon", lyndon}, {"factors", factors}, {"standard_factorization", standard}});
  return exit_ok;
}

int lyndon_bracket(const Options& o, const std::vector<std::string>& args) {
  const Alphabet alphabet = alphabet_of(o);
  const Output out(o);
  require(args.size() == 1 || args.size() == 2, "bracket takes one or two words");
  if (args.size() == 1) {
    const Word w = alphabet.parse_word(args[0]);
    const BracketTree tree = standard_bracketing(w);
    const AssocPoly expansion = expand(tree);
    if (out.tsv()) {
      out.row({alphabet.format(w), tree.format(alphabet), format_terms(alphabet, expansion.terms())});
      return exit_ok;
    }
    out.emit({{"word", alphabet.format(w)}, {"bracketing", tree.format(alphabet)}, {"expansion", io::poly_to_json(alphabet, expansion)}});
    return exit_ok;
  }
  const Word u = alphabet.parse_word(args[0]), v = alphabet.parse_word(args[1]);
  require(!u.empty() && !v.empty() && is_lyndon(u) && is_lyndon(v), "bracket arguments must be Lyndon words");
  LyndonBracket engine;
  const LiePoly value = engine.bracket(u, v);
  if (out.tsv()) {
    out.row({alphabet.format(u), alphabet.format(v), format_terms(alphabet, value.terms())});
    return exit_ok;
  }
  out.emit(io::poly_to_json(alphabet, value));
  return exit_ok;
}

int pair_atoms(const Options& o, std::optional<std::size_t> length_bound) {
  const Output out(o);
  if (!o.pair_file.empty() || !o.catalog_id.empty()) {
    emit_pair(out, input_pair(o));
    return exit_ok;
  }
  const Alphabet alphabet = alphabet_of(o);
  require(!o.obstructions.empty(), "pair atoms needs --obstructions");
  const WordSet obstructions = parse_word_list(alphabet, o.obstructions);
  const AtomSet atoms = atoms_from_obstructions(alphabet.size(), obstructions, length_bound);
  if (atoms.finite) {
    emit_pair(out, LyndonPair::from_both(alphabet, atoms.atoms, obstructions));
    return exit_ok;
  }
  std::cerr << "atom set is infinite; listing atoms up to length " << atoms.searched_to << "\n";
  if (out.tsv()) {
    out.row({join(alphabet, atoms.atoms), join(alphabet, obstructions), "infinite", std::to_string(atoms.searched_to)});
    return exit_ok;
  }
  out.emit({{"alphabet", io::alphabet_to_json(alphabet)},
            {"atoms", io::words_to_json(alphabet, atoms.atoms)},
            {"obstructions", io::words_to_json(alphabet, obstructions)},
            {"finite", false},
            {"searched_to", atoms.searched_to}});
  return exit_ok;
}

int pair_obstructions(const Options& o) {
  const Output out(o);
  if (!o.pair_file.empty() || !o.catalog_id.empty()) {
    emit_pair(out, input_pair(o));
    return exit_ok;
  }
  require(!o.atoms.empty(), "pair obstructions needs --atoms");
  const Alphabet alphabet = alphabet_of(o);
  emit_pair(out, LyndonPair::from_atoms(alphabet, parse_word_list(alphabet, o.atoms)));
  return exit_ok;
}

int pair_check(const Options& o) {
  emit_pair(Output(o), input_pair(o));
  return exit_ok;
}

int pair_connected(const Options& o) {
  const Output out(o);
  const LyndonPair p = input_pair(o);
  const WordSet component = connected_component(p.atoms());
  const bool connected = is_connected(p.atoms());
  if (out.tsv()) {
    out.row({connected ? "1" : "0", join(p.alphabet(), component)});
    return exit_ok;
  }
  out.emit({{"connected", connected}, {"component", io::words_to_json(p.alphabet(), component)}});
  return exit_ok;
}

EnumerationProgress progress_printer(const Options& o) {
  if (o.quiet) return {};
  return [](std::size_t d, std::size_t count) { std::cerr << "d = " << d << ": " << count << " classes\n"; };
}

int enumerate(const Options& o, std::size_t d) {
  const Output out(o);
  const auto pairs = enumerate_pairs(alphabet_of(o), d, worker_count(o), progress_printer(o));
  if (out.tsv()) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto& p = pairs[i];
      out.row({std::to_string(i + 1), std::to_string(p.d()), std::to_string(p.m()), std::to_string(p.obstructions().size()),
               is_connected(p.atoms()) ? "1" : "0", join(p.alphabet(), p.atoms()), join(p.alphabet(), p.obstructions())});
    }
    return exit_ok;
  }
  json doc = json::array();
  for (const auto& p : pairs) doc.push_back(io::pair_to_json(p));
  out.emit(doc);
  return exit_ok;
}

int gldim(const Options& o, std::optional<std::size_t> bound) {
  const Output out(o);
  const auto [alphabet, obstructions] = input_obstructions(o);
  const GlobalDimension g = global_dimension(alphabet.size(), obstructions, bound);
  json witnesses = json::array();
  std::string cells;
  for (const Word& w : g.witnesses) {
    witnesses.push_back(alphabet.format(w));
    cells += (cells.empty() ? "" : " ") + alphabet.format(w);
  }
  if (out.tsv())
    out.row({g.value ? std::to_string(*g.value) : g.infinite ? "infinite" : "unknown", cells});
  else
    out.emit({{"global_dimension", g.value ? json(*g.value) : json(nullptr)},
              {"infinite", g.infinite},
              {"bound", g.bound},
              {"bound_hit", g.bound_hit()},
              {"witnesses", witnesses}});
  if (g.bound_hit()) {
    std::cerr << "chain search stopped at level " << g.bound << "\n";
    return exit_bound;
  }
  return exit_ok;
}

int hilbert(const Options& o, std::size_t degree) {
  const Output out(o);
  const auto [alphabet, obstructions] = input_obstructions(o);
  const auto counts = normal_word_counts(alphabet.size(), obstructions, degree);
  if (out.tsv()) {
    for (std::size_t m = 0; m < counts.size(); ++m) out.row({std::to_string(m), counts[m].get_str()});
    return exit_ok;
  }
  out.emit(io::integers_to_json(counts));
  return exit_ok;
}

int emit_report(const Options& o, const GSReport& r, bool compositions) {
  const Output out(o);
  if (out.tsv())
    out.row({to_string(r.verdict), join(r.pair.alphabet(), r.result_atoms), join(r.pair.alphabet(), r.result_obstructions), std::to_string(r.basis.size())});
  else
    out.emit(io::report_to_json(r, compositions));
  if (r.verdict == Verdict::bound_exhausted) {
    std::cerr << "completion stopped at the degree bound\n";
    return exit_bound;
  }
  return exit_ok;
}

int gs_check(const Options& o, bool no_shortcuts, bool compositions) {
  return emit_report(o, is_gs_basis(input_pair(o), !no_shortcuts, worker_count(o)), compositions);
}

int gs_completion(const Options& o, std::optional<std::size_t> bound, bool compositions) {
  return emit_report(o, gs_complete(input_pair(o), bound), compositions);
}

int catalog(const Options& o, const std::string& family, std::size_t param, bool list) {
  const Output out(o);
  if (list) {
    json doc = json::array();
    for (const auto& e : detail::all_entries()) {
      if (out.tsv()) {
        out.row({e.id, std::to_string(e.d), std::to_string(e.m), join(e.pair.alphabet(), e.pair.atoms()), join(e.pair.alphabet(), e.pair.obstructions())});
        continue;
      }
      json j = io::pair_to_json(e.pair);
      j["id"] = e.id;
      j["standard"] = e.standard;
      if (!e.note.empty()) j["note"] = e.note;
      doc.push_back(j);
    }
    if (!out.tsv()) out.emit(doc);
    return exit_ok;
  }
  if (!o.catalog_id.empty()) {
    emit_pair(out, golden_entry(o.catalog_id).pair);
    return exit_ok;
  }
  require(!family.empty(), "catalog needs --family, --id or --list");
  PairReference ref;
  ref.family = family;
  ref.param = param;
  const LyndonPair p = family == "free_nilpotent" ? free_nilpotent(alphabet_of(o), param) : resolve(ref);
  emit_pair(out, p);
  return exit_ok;
}

struct ClassifyRow {
  LyndonPair pair;
  std::string id;
  GSReport check;
  GSReport completion;
};

int classify(const Options& o, std::size_t d) {
  const Output out(o);
  const Alphabet alphabet = alphabet_of(o);
  const auto pairs = enumerate_pairs(alphabet, d, worker_count(o), progress_printer(o));
  std::map<CanonicalKey, std::string> ids;
  if (alphabet.symbols() == Alphabet::binary().symbols())
    for (const auto& e : detail::all_entries())
      if (e.d == d) ids.emplace(canonical_key(e.pair), e.id);

  std::vector<std::optional<ClassifyRow>> rows(pairs.size());
  parallel_for(pairs.size(), worker_count(o), [&](std::size_t i) {
    const auto it = ids.find(canonical_key(pairs[i]));
    rows[i] = ClassifyRow{pairs[i], it == ids.end() ? "-" : it->second, is_gs_basis(pairs[i]), gs_complete(pairs[i])};
  });
  // standard first, then connected, then by m
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    const auto rank = [](const ClassifyRow& r) {
      return std::tuple(r.check.verdict != Verdict::standard, !is_connected(r.pair.atoms()), r.pair.m());
    };
    return rank(*a) < rank(*b);
  });

  bool exhausted = false;
  json doc = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ClassifyRow& r = *rows[i];
    const bool standard = r.check.verdict == Verdict::standard;
    exhausted = exhausted || r.completion.verdict == Verdict::bound_exhausted;
    if (out.tsv()) {
      out.row({std::to_string(i + 1), r.id, std::to_string(r.pair.m()), std::to_string(r.pair.obstructions().size()),
               is_connected(r.pair.atoms()) ? "1" : "0", standard ? "1" : "0", join(alphabet, r.completion.result_atoms)});
      continue;
    }
    doc.push_back({{"row", i + 1},
                   {"catalog_id", r.id == "-" ? json(nullptr) : json(r.id)},
                   {"pair", io::pair_to_json(r.pair)},
                   {"standard", standard},
                   {"skipped_chains", r.check.skipped.size()},
                   {"completion_verdict", to_string(r.completion.verdict)},
                   {"completion_atoms", io::words_to_json(alphabet, r.completion.result_atoms)},
                   {"within_component", r.completion.within_component}});
  }
  if (!out.tsv()) out.emit(doc);
  return exhausted ? exit_bound : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lyndon pairs, monomial algebras and Groebner-Shirshov bases of monomial Lie ideals"};
  app.footer(tsv_help);
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--alphabet", o.alphabet, "Ordered alphabet, comma separated");
    sub->add_option("--jobs", o.jobs, "Worker threads (default: hardware concurrency)");
    sub->add_flag("--quiet", o.quiet, "No progress on stderr");
  };

  std::function<int()> action;
  std::size_t max_length = 8, d = 0, degree = 10, param = 0;
  std::optional<std::size_t> bound;
  std::string word, family;
  std::vector<std::string> words;
  bool no_shortcuts = false, compositions = false, list = false;

  auto* lyndon = app.add_subcommand("lyndon", "Lyndon words");
  lyndon->require_subcommand(1);
  auto* list_cmd = lyndon->add_subcommand("list", "Lyndon words up to a length");
  list_cmd->add_option("--max-length", max_length, "Largest length")->capture_default_str();
  list_cmd->callback([&] { action = [&] { return lyndon_list(o, max_length); }; });
  auto* factor_cmd = lyndon->add_subcommand("factor", "Chen-Fox-Lyndon and standard factorization");
  factor_cmd->add_option("word", word, "Word")->required();
  factor_cmd->callback([&] { action = [&] { return lyndon_factor(o, word); }; });
  auto* bracket_cmd = lyndon->add_subcommand("bracket", "Standard bracketing of one word, or the bracket of two");
  bracket_cmd->add_option("words", words, "One or two Lyndon words")->required()->expected(1, 2);
  bracket_cmd->callback([&] { action = [&] { return lyndon_bracket(o, words); }; });
  for (auto* sub : {list_cmd, factor_cmd, bracket_cmd}) add_common(sub);

  auto* pair = app.add_subcommand("pair", "Atom/obstruction duality");
  pair->require_subcommand(1);
  auto* atoms_cmd = pair->add_subcommand("atoms", "Atoms of an obstruction set");
  atoms_cmd->add_option("--length-bound", bound, "Listing length for infinite atom sets");
  atoms_cmd->callback([&] { action = [&] { return pair_atoms(o, bound); }; });
  auto* obstructions_cmd = pair->add_subcommand("obstructions", "Obstructions of an atom set");
  obstructions_cmd->callback([&] { action = [&] { return pair_obstructions(o); }; });
  auto* check_cmd = pair->add_subcommand("check", "Validate a pair and print its invariants");
  check_cmd->callback([&] { action = [&] { return pair_check(o); }; });
  auto* connected_cmd = pair->add_subcommand("connected", "Connectivity and connected component");
  connected_cmd->callback([&] { action = [&] { return pair_connected(o); }; });
  for (auto* sub : {atoms_cmd, obstructions_cmd, check_cmd, connected_cmd}) {
    add_common(sub);
    add_input_options(sub, o);
  }

  auto* enumerate_cmd = app.add_subcommand("enumerate", "All pairs with d atoms up to isomorphism");
  enumerate_cmd->add_option("--d", d, "Number of atoms")->required();
  enumerate_cmd->callback([&] { action = [&] { return enumerate(o, d); }; });
  add_common(enumerate_cmd);

  auto* gldim_cmd = app.add_subcommand("gldim", "Global dimension of the monomial algebra");
  gldim_cmd->add_option("--bound", bound, "Chain level bound");
  gldim_cmd->callback([&] { action = [&] { return gldim(o, bound); }; });
  add_common(gldim_cmd);
  add_input_options(gldim_cmd, o);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series coefficients");
  hilbert_cmd->add_option("--degree", degree, "Largest degree")->capture_default_str();
  hilbert_cmd->callback([&] { action = [&] { return hilbert(o, degree); }; });
  add_common(hilbert_cmd);
  add_input_options(hilbert_cmd, o);

  auto* gs = app.add_subcommand("gs", "Groebner-Shirshov checks");
  gs->require_subcommand(1);
  auto* gs_check_cmd = gs->add_subcommand("check", "Check whether [W] is a Groebner-Shirshov basis");
  gs_check_cmd->add_flag("--no-shortcuts", no_shortcuts, "Compute every composition");
  gs_check_cmd->callback([&] { action = [&] { return gs_check(o, no_shortcuts, compositions); }; });
  auto* gs_complete_cmd = gs->add_subcommand("complete", "Complete [W] to a reduced Groebner-Shirshov basis");
  gs_complete_cmd->add_option("--bound", bound, "Degree bound (default 2m+2)");
  gs_complete_cmd->callback([&] { action = [&] { return gs_completion(o, bound, compositions); }; });
  for (auto* sub : {gs_check_cmd, gs_complete_cmd}) {
    sub->add_flag("--compositions", compositions, "Include every composition in the report");
    add_common(sub);
    add_input_options(sub, o);
  }

  auto* catalog_cmd = app.add_subcommand("catalog", "Named families and the built-in catalog");
  catalog_cmd->add_option("--family", family, "filiform_L, filiform_Q, free_nilpotent or fibonacci");
  catalog_cmd->add_option("--params", param, "Family parameter");
  catalog_cmd->add_option("--id", o.catalog_id, "Catalog entry id");
  catalog_cmd->add_flag("--list", list, "Every catalog entry");
  catalog_cmd->callback([&] { action = [&] { return catalog(o, family, param, list); }; });
  add_common(catalog_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Enumerate, check and complete every pair with d atoms");
  classify_cmd->add_option("--d", d, "Number of atoms")->required();
  classify_cmd->callback([&] { action = [&] { return classify(o, d); }; });
  add_common(classify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_malformed;
  }
  try {
    return action();
  } catch (const BoundExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_malformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_malformed;
  }
}
