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


// Checks every pair with six atoms and completes the ones whose monomial
// ideal is not closed under compositions.

#include <iostream>
#include <string>

#include "lynpair/lynpair.hpp"

namespace {

std::string show(const lynpair::Alphabet& alphabet, const lynpair::LiePoly& f) {
  std::string out;
  for (const auto& [w, c] : f.terms()) out += (out.empty() ? "" : " + ") + c.get_str() + "*[" + alphabet.format(w) + "]";
  return out.empty() ? "0" : out;
}

}  // namespace

int main() {
  using namespace lynpair;
  const Alphabet alphabet = Alphabet::binary();

  LyndonBracket engine;
  std::cout << "[x, xxy] = " << show(alphabet, engine.bracket(alphabet.parse_word("x"), alphabet.parse_word("xxy"))) << '\n';
  std::cout << "[xy, xyy] = " << show(alphabet, engine.bracket(alphabet.parse_word("xy"), alphabet.parse_word("xyy"))) << '\n';

  for (const LyndonPair& p : enumerate_pairs(alphabet, 6)) {
    const GSReport check = is_gs_basis(p);
    std::cout << "atoms";
    for (const auto& w : p.atoms()) std::cout << ' ' << alphabet.format(w);
    std::cout << ": " << to_string(check.verdict);
    if (check.verdict != Verdict::standard) {
      const GSReport done = gs_complete(p);
      std::cout << ", completion " << to_string(done.verdict) << " to";
      for (const auto& w : done.result_atoms) std::cout << ' ' << alphabet.format(w);
    }
    std::cout << '\n';
  }
}
