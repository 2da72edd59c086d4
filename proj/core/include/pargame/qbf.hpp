// Copyright 2026 The pargame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARGAME_QBF_HPP_
#define PARGAME_QBF_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pargame/arena.hpp"

namespace pargame {

// A prenex QBF over a CNF matrix, in QDIMACS conventions: variables are
// 1-based, a literal is ±variable.
struct QbfFormula {
  int num_vars = 0;
  std::vector<int> prefix;        // variables outermost first
  std::vector<bool> is_exists;    // parallel to prefix
  std::vector<std::vector<int>> clauses;
};

// Parses QDIMACS text: comments, a "p cnf VARS CLAUSES" header, quantifier
// lines ("e ... 0" / "a ... 0"), then 0-terminated clauses. The declared
// counts must match; variables missing from the prefix are added outermost
// as existential. Throws ParseError on malformed input.
QbfFormula parse_qdimacs(std::string_view text);
std::string format_qdimacs(const QbfFormula& formula);

// Truth by exhaustive expansion of the prefix. Exponential in num_vars;
// meant as the ground-truth oracle for small instances.
bool brute_eval(const QbfFormula& formula);

// Encodes the formula as a reachability game over one count parameter: a
// count k <= #clauses challenges clause k, a larger count challenges
// nothing. Quantifier positions become variable/check vertex triples; after
// the last check, the protagonist wins exactly if no challengeable clause is
// left undischarged. The protagonist wins the game iff the formula is true.
// The arena has 3 * prefix-length + 3 vertices.
ReachGame reduce_to_game(const QbfFormula& formula);

// Deterministic random instance: every variable quantified (fair coin per
// position), `width` distinct variables per clause with random polarity.
QbfFormula gen_random_qbf(int num_vars, int num_clauses, int width,
                          std::uint64_t seed);

}  // namespace pargame

#endif  // PARGAME_QBF_HPP_
