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

#include "pargame/qbf.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pargame/common.hpp"
#include "pargame/interval_set.hpp"

namespace pargame {

QbfFormula parse_qdimacs(std::string_view text) {
  QbfFormula f;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int lineno = 0;
  int declared_clauses = -1;
  std::vector<bool> quantified;
  bool in_matrix = false;
  std::vector<int> clause;

  while (std::getline(stream, raw)) {
    ++lineno;
    std::istringstream line(raw);
    std::string first;
    if (!(line >> first)) continue;
    if (first == "c") continue;

    if (first == "p") {
      if (declared_clauses >= 0) throw ParseError(lineno, "duplicate header");
      std::string kind;
      int clauses = 0;
      if (!(line >> kind >> f.num_vars >> clauses) || kind != "cnf" ||
          f.num_vars < 0 || clauses < 0) {
        throw ParseError(lineno, "malformed header, expected 'p cnf V C'");
      }
      declared_clauses = clauses;
      quantified.assign(f.num_vars + 1, false);
      continue;
    }
    if (declared_clauses < 0) {
      throw ParseError(lineno, "expected 'p cnf' header first");
    }

    if (first == "e" || first == "a") {
      if (in_matrix) {
        throw ParseError(lineno, "quantifier line after a clause");
      }
      int var = 0;
      bool terminated = false;
      while (line >> var) {
        if (var == 0) {
          terminated = true;
          break;
        }
        if (var < 0 || var > f.num_vars) {
          throw ParseError(lineno, "variable " + std::to_string(var) +
                                       " out of range");
        }
        if (quantified[var]) {
          throw ParseError(lineno,
                           "variable " + std::to_string(var) +
                               " quantified twice");
        }
        quantified[var] = true;
        f.prefix.push_back(var);
        f.is_exists.push_back(first == "e");
      }
      if (!terminated || line >> var) {
        throw ParseError(lineno, "quantifier line must end with a single 0");
      }
      continue;
    }

    // Clause line(s): integers until 0.
    std::istringstream nums(raw);
    int lit = 0;
    while (nums >> lit) {
      if (lit == 0) {
        in_matrix = true;
        f.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      int var = std::abs(lit);
      if (var > f.num_vars) {
        throw ParseError(lineno,
                         "literal " + std::to_string(lit) + " out of range");
      }
      clause.push_back(lit);
    }
    if (nums.bad() || !nums.eof()) {
      throw ParseError(lineno, "malformed clause line");
    }
    if (!clause.empty()) in_matrix = true;  // clause may span lines
  }

  if (declared_clauses < 0) throw ParseError("missing 'p cnf' header");
  if (!clause.empty()) throw ParseError("last clause not terminated by 0");
  if (static_cast<int>(f.clauses.size()) != declared_clauses) {
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(f.clauses.size()));
  }
  // Unquantified variables are free: existential, outermost.
  std::vector<int> missing;
  for (int v = 1; v <= f.num_vars; ++v) {
    if (!quantified[v]) missing.push_back(v);
  }
  if (!missing.empty()) {
    f.prefix.insert(f.prefix.begin(), missing.begin(), missing.end());
    f.is_exists.insert(f.is_exists.begin(), missing.size(), true);
  }
  return f;
}

std::string format_qdimacs(const QbfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  std::size_t i = 0;
  while (i < f.prefix.size()) {
    std::size_t j = i;
    while (j < f.prefix.size() && f.is_exists[j] == f.is_exists[i]) ++j;
    out << (f.is_exists[i] ? 'e' : 'a');
    for (std::size_t k = i; k < j; ++k) out << ' ' << f.prefix[k];
    out << " 0\n";
    i = j;
  }
  for (const std::vector<int>& clause : f.clauses) {
    for (int lit : clause) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

bool matrix_satisfied(const QbfFormula& f, const std::vector<bool>& value) {
  for (const std::vector<int>& clause : f.clauses) {
    bool sat = false;
    for (int lit : clause) {
      if (value[std::abs(lit)] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool eval_from(const QbfFormula& f, std::size_t pos,
               std::vector<bool>& value) {
  if (pos == f.prefix.size()) return matrix_satisfied(f, value);
  const int var = f.prefix[pos];
  bool with_true, with_false;
  value[var] = true;
  with_true = eval_from(f, pos + 1, value);
  if (f.is_exists[pos] && with_true) return true;
  if (!f.is_exists[pos] && !with_true) return false;
  value[var] = false;
  with_false = eval_from(f, pos + 1, value);
  return with_false;
}

}  // namespace

bool brute_eval(const QbfFormula& f) {
  std::vector<bool> value(f.num_vars + 1, false);
  return eval_from(f, 0, value);
}

ReachGame reduce_to_game(const QbfFormula& f) {
  const std::size_t n = f.prefix.size();
  const std::uint32_t m = static_cast<std::uint32_t>(f.clauses.size());

  ParamArena arena;
  std::vector<VertexId> var_v(n), check_true(n), check_false(n);
  for (std::size_t i = 0; i < n; ++i) {
    var_v[i] = arena.add_vertex("u" + std::to_string(i + 1));
    check_true[i] = arena.add_vertex("c" + std::to_string(i + 1) + "T");
    check_false[i] = arena.add_vertex("c" + std::to_string(i + 1) + "F");
  }
  VertexId final_v = arena.add_vertex("f");
  VertexId sink = arena.add_vertex("s");
  VertexId target = arena.add_vertex("t");
  ActionId act_true = arena.add_action("T");
  ActionId act_false = arena.add_action("F");
  ActionId act_go = arena.add_action("go");

  // Clauses a given assignment of variable f.prefix[i] discharges.
  auto discharged = [&](std::size_t i, bool assignment) {
    const int lit = assignment ? f.prefix[i] : -f.prefix[i];
    std::vector<IntervalSet::Interval> items;
    for (std::uint32_t c = 0; c < m; ++c) {
      if (std::find(f.clauses[c].begin(), f.clauses[c].end(), lit) !=
          f.clauses[c].end()) {
        items.push_back({c + 1, c + 1});  // clause c is challenged by count c+1
      }
    }
    return IntervalSet::from_intervals(std::move(items));
  };

  const IntervalSet all = IntervalSet::universe();
  for (std::size_t i = 0; i < n; ++i) {
    if (f.is_exists[i]) {
      // The protagonist assigns the variable by choosing the action.
      arena.add_edge(var_v[i], act_true, check_true[i], all);
      arena.add_edge(var_v[i], act_false, check_false[i], all);
    } else {
      // Both checks are reachable under every count: the antagonist assigns.
      arena.add_edge(var_v[i], act_go, check_true[i], all);
      arena.add_edge(var_v[i], act_go, check_false[i], all);
    }
    VertexId next = i + 1 < n ? var_v[i + 1] : final_v;
    for (bool assignment : {true, false}) {
      VertexId check = assignment ? check_true[i] : check_false[i];
      IntervalSet d = discharged(i, assignment);
      // A challenged clause this literal satisfies ends the game in a win;
      // all other counts move on with the clause set narrowed.
      arena.add_edge(check, act_go, target, d);
      arena.add_edge(check, act_go, next, all.difference(d));
    }
  }
  // Unchallenged counts win; a still-possible challenged clause was never
  // discharged, and the antagonist drops to the losing sink.
  arena.add_edge(final_v, act_go, target, IntervalSet::at_least(m + 1));
  arena.add_edge(final_v, act_go, sink, IntervalSet::at_most(m));
  arena.finalize();

  ReachGame game{std::move(arena), target, var_v.empty() ? final_v : var_v[0]};
  return game;
}

QbfFormula gen_random_qbf(int num_vars, int num_clauses, int width,
                          std::uint64_t seed) {
  if (num_vars < 1 || num_clauses < 0 || width < 1) {
    throw InputError("random QBF needs num_vars >= 1, num_clauses >= 0, "
                     "width >= 1");
  }
  width = std::min(width, num_vars);
  std::mt19937_64 rng(seed);
  // Portable across standard libraries: plain modulo instead of
  // uniform_int_distribution (whose mapping is unspecified).
  auto below = [&rng](std::uint64_t bound) {
    return static_cast<int>(rng() % bound);
  };

  QbfFormula f;
  f.num_vars = num_vars;
  for (int v = 1; v <= num_vars; ++v) {
    f.prefix.push_back(v);
    f.is_exists.push_back(below(2) == 0);
  }
  for (int c = 0; c < num_clauses; ++c) {
    std::vector<int> vars;
    for (int v = 1; v <= num_vars; ++v) vars.push_back(v);
    std::vector<int> clause;
    for (int k = 0; k < width; ++k) {
      int pick = below(vars.size());
      int var = vars[pick];
      vars.erase(vars.begin() + pick);
      clause.push_back(below(2) == 0 ? var : -var);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace pargame
