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


// Atoms and obstructions of a few pairs, with their Hilbert series and
// global dimension.

#include <initializer_list>
#include <iostream>

#include "lynpair/lynpair.hpp"

namespace {

void show(const lynpair::Alphabet& alphabet, const lynpair::WordSet& words) {
  for (const auto& w : words) std::cout << ' ' << alphabet.format(w);
  std::cout << '\n';
}

lynpair::WordSet parse(const lynpair::Alphabet& alphabet, std::initializer_list<const char*> list) {
  lynpair::WordSet out;
  for (const char* w : list) out.insert(alphabet.parse_word(w));
  return out;
}

}  // namespace

int main() {
  using namespace lynpair;
  const Alphabet alphabet = Alphabet::binary();

  const LyndonPair cubic = LyndonPair::from_atoms(alphabet, parse(alphabet, {"x", "xy", "y"}));
  std::cout << "atoms:";
  show(alphabet, cubic.atoms());
  std::cout << "obstructions:";
  show(alphabet, cubic.obstructions());

  std::cout << "hilbert:";
  for (const auto& c : normal_word_counts(alphabet.size(), cubic.obstructions(), 8)) std::cout << ' ' << c;
  std::cout << '\n';

  const GlobalDimension g = global_dimension(alphabet.size(), cubic.obstructions());
  std::cout << "global dimension: " << *g.value << '\n';

  // the other direction, from obstructions
  const LyndonPair nilpotent = free_nilpotent(alphabet, 3);
  std::cout << "free nilpotent of class 3, atoms:";
  show(alphabet, nilpotent.atoms());
  std::cout << "  connected: " << std::boolalpha << is_connected(nilpotent.atoms()) << '\n';

  const AtomSet open = atoms_from_obstructions(alphabet.size(), parse(alphabet, {"xxy"}), 6);
  std::cout << "atoms of {xxy} up to length 6 (finite: " << open.finite << "):";
  show(alphabet, open.atoms);
}
