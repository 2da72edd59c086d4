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
//
// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL
// line with its wall-clock time; the process exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pargame/antichain.hpp"
#include "pargame/arena.hpp"
#include "pargame/bench.hpp"
#include "pargame/explicit_solver.hpp"
#include "pargame/interval_set.hpp"
#include "pargame/lattice.hpp"
#include "pargame/qbf.hpp"
#include "pargame/symbolic_solver.hpp"
#include "test_util.hpp"

namespace pargame {
namespace {

using testing::set;

// Collects failure descriptions; keeps the report short.
class Ctx {
 public:
  void require(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }

  bool ok() const { return failures_ == 0; }

  std::string summary() const {
    std::string text;
    for (const std::string& m : messages_) {
      text += (text.empty() ? "" : "; ") + m;
    }
    if (failures_ > messages_.size()) {
      text += " (+" + std::to_string(failures_ - messages_.size()) + " more)";
    }
    return text;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string verdict_name(Verdict v) { return to_string(v); }

ReachGame fixture_game() { return testing::example_game(); }

// The c-edge-free variant of the fixture arena (fewer generators, same
// knowledge family).
ReachGame fixture_without_c_edges() {
  std::string text = format_arena(fixture_game());
  std::string trimmed;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" c ") == std::string::npos) trimmed += line + '\n';
  }
  return parse_arena(trimmed);
}

std::vector<std::vector<IntervalSet>> fixture_region_rows(
    const ParamArena& arena) {
  std::vector<std::vector<IntervalSet>> rows(arena.num_vertices());
  auto put = [&](const char* name, const IntervalSet& k) {
    rows[*arena.find_vertex(name)] = {k};
  };
  put("s", IntervalSet());
  put("v", set("3-*"));
  put("x1", set("1,3-*"));
  put("x2", set("2-*"));
  put("y1", IntervalSet::universe());
  put("y2", IntervalSet::universe());
  put("t", IntervalSet::universe());
  return rows;
}

// --------------------------------------------------------------------------
// Criterion 1: exact fixture region, converged at iteration 3, both
// fixpoint algorithms on both antichain backings.
void criterion_region(Ctx& ctx) {
  ReachGame game = fixture_game();
  Lattice lat = Lattice::build(game.arena);
  const auto expected = fixture_region_rows(game.arena);

  auto check_trace = [&](const auto& dom, const auto& trace,
                         const std::string& label) {
    ctx.require(trace.converged_at == 3,
                label + ": converged at " +
                    std::to_string(trace.converged_at) + ", want 3");
    ctx.require(trace.fixpoint().snapshot(dom) == expected,
                label + ": region differs from the worked example");
  };
  check_trace(SetDomain{}, solve_direct(game), "walt/sets");
  check_trace(LatticeDomain(lat), solve_direct(game, lat), "walt/lattice");
  check_trace(LatticeDomain(lat), solve_lattice(game, lat), "wk");
}

// --------------------------------------------------------------------------
// Criterion 2: fixture verdicts under all four algorithms.
void criterion_verdicts(Ctx& ctx) {
  ReachGame game = fixture_game();
  Lattice lat = Lattice::build(game.arena);
  auto direct = solve_direct(game);
  auto walk = solve_lattice(game, lat);

  auto expect = [&](const char* name, Verdict want) {
    VertexId v = *game.arena.find_vertex(name);
    auto one = [&](Verdict got, const std::string& label) {
      ctx.require(got == want, std::string(name) + " via " + label + ": " +
                                   verdict_name(got) + ", want " +
                                   verdict_name(want));
    };
    one(verdict(SetDomain{}, direct, v), "walt");
    one(verdict(LatticeDomain(lat), walk, v), "wk");
    one(attractor_solve(game, v), "attractor");
    one(dfs_solve(game, v), "dfs");
  };
  expect("v", Verdict::kLose);
  expect("y1", Verdict::kWin);
  expect("y2", Verdict::kWin);
}

// --------------------------------------------------------------------------
// Criterion 3: the fixture knowledge family, element by element and cover
// edge by cover edge; dropping the c-edges leaves it unchanged.
void criterion_lattice(Ctx& ctx) {
  Lattice lat = Lattice::build(fixture_game().arena);
  std::set<IntervalSet> expected{set("*"),   set(""),    set("1-2"),
                                 set("3-*"), set("1"),   set("2"),
                                 set("2-*"), set("1,3-*")};
  std::set<IntervalSet> got;
  for (Lattice::Id i = 0; i < lat.size(); ++i) got.insert(lat.element(i));
  ctx.require(got == expected, "family has " + std::to_string(lat.size()) +
                                   " elements, want the 8 drawn ones");

  using Cover = std::pair<IntervalSet, IntervalSet>;  // parent over child
  std::set<Cover> want_covers{
      {set("*"), set("1-2")},     {set("*"), set("2-*")},
      {set("*"), set("1,3-*")},   {set("1-2"), set("1")},
      {set("1-2"), set("2")},     {set("2-*"), set("2")},
      {set("2-*"), set("3-*")},   {set("1,3-*"), set("1")},
      {set("1,3-*"), set("3-*")}, {set("1"), set("")},
      {set("2"), set("")},        {set("3-*"), set("")},
  };
  std::set<Cover> got_covers;
  for (Lattice::Id parent = 0; parent < lat.size(); ++parent) {
    for (Lattice::Id child : lat.children(parent)) {
      got_covers.insert({lat.element(parent), lat.element(child)});
    }
  }
  ctx.require(got_covers == want_covers,
              "Hasse diagram differs from the drawn one (" +
                  std::to_string(got_covers.size()) + " covers, want 12)");

  Lattice reduced = Lattice::build(fixture_without_c_edges().arena);
  std::set<IntervalSet> reduced_elements;
  for (Lattice::Id i = 0; i < reduced.size(); ++i) {
    reduced_elements.insert(reduced.element(i));
  }
  ctx.require(reduced_elements == expected,
              "family changes when the c-edges are removed");
}

// --------------------------------------------------------------------------
// Criterion 4: verdict agreement of all four algorithms and iterate-level
// agreement of the two fixpoint styles, on random arenas and all families.
void criterion_agreement(Ctx& ctx) {
  SetDomain sdom;
  auto check_game = [&](const ReachGame& game, const std::string& label,
                        bool oracles_everywhere) {
    Lattice lat = Lattice::build(game.arena);
    LatticeDomain ldom(lat);
    auto direct = solve_direct(game);
    auto direct_ids = solve_direct(game, lat);
    auto walk = solve_lattice(game, lat);

    ctx.require(direct.iterates.size() == walk.iterates.size() &&
                    direct.iterates.size() == direct_ids.iterates.size(),
                label + ": iterate counts differ");
    for (std::size_t i = 0;
         i < direct.iterates.size() && i < walk.iterates.size() &&
         i < direct_ids.iterates.size();
         ++i) {
      auto snap = direct.iterates[i].snapshot(sdom);
      ctx.require(snap == walk.iterates[i].snapshot(ldom),
                  label + ": W^" + std::to_string(i) + " walt vs wk");
      ctx.require(snap == direct_ids.iterates[i].snapshot(ldom),
                  label + ": W^" + std::to_string(i) + " across backings");
    }
    const VertexId init = game.initial.value_or(0);
    for (VertexId v = 0; v < game.arena.num_vertices(); ++v) {
      Verdict expected = verdict(sdom, direct, v);
      ctx.require(verdict(ldom, walk, v) == expected,
                  label + ": wk vs walt verdict at vertex " +
                      game.arena.vertex_name(v));
      // The explicit oracles rebuild a knowledge game per start vertex, so
      // on the random batch they are consulted at the initial vertex only.
      if (!oracles_everywhere && v != init) continue;
      bool agree = attractor_solve(game, v) == expected &&
                   dfs_solve(game, v) == expected;
      ctx.require(agree, label + ": verdict mismatch at vertex " +
                             game.arena.vertex_name(v));
    }
  };

  testing::Rng rng(20260825);
  for (int round = 0; round < 500; ++round) {
    check_game(testing::random_complete_game(rng),
               "random arena " + std::to_string(round),
               /*oracles_everywhere=*/false);
  }
  for (Family family : kAllFamilies) {
    for (int n = 2; n <= 8; ++n) {
      check_game(gen_family(family, n),
                 std::string(family_name(family)) + " n=" + std::to_string(n),
                 /*oracles_everywhere=*/true);
    }
  }
}

// --------------------------------------------------------------------------
// Criterion 5: QBF reduction vs brute-force truth.
void criterion_qbf(Ctx& ctx) {
  auto check_formula = [&](const QbfFormula& f, const std::string& label,
                           std::optional<bool> expected_truth) {
    bool truth = brute_eval(f);
    if (expected_truth) {
      ctx.require(truth == *expected_truth,
                  label + ": brute truth " + (truth ? "TRUE" : "FALSE") +
                      ", hand expected " +
                      (*expected_truth ? "TRUE" : "FALSE"));
    }
    ReachGame game = reduce_to_game(f);
    Verdict want = truth ? Verdict::kWin : Verdict::kLose;
    VertexId from = game.initial_or_throw();

    ctx.require(verdict(SetDomain{}, solve_direct(game), from) == want,
                label + ": walt disagrees with brute");
    Lattice lat = Lattice::build(game.arena);
    ctx.require(
        verdict(LatticeDomain(lat), solve_lattice(game, lat), from) == want,
        label + ": wk disagrees with brute");
    ctx.require(attractor_solve(game, from) == want,
                label + ": attractor disagrees with brute");
    ctx.require(dfs_solve(game, from) == want,
                label + ": dfs disagrees with brute");
  };

  struct HandCase {
    const char* text;
    bool truth;
  };
  const HandCase hand_cases[] = {
      {"p cnf 0 0\n", true},                                  // empty matrix
      {"p cnf 0 1\n0\n", false},                              // empty clause
      {"p cnf 1 1\ne 1 0\n1 0\n", true},
      {"p cnf 1 1\ne 1 0\n-1 0\n", true},
      {"p cnf 1 1\na 1 0\n1 0\n", false},
      {"p cnf 1 1\na 1 0\n1 -1 0\n", true},                   // tautology
      {"p cnf 1 2\ne 1 0\n1 0\n-1 0\n", false},               // x and not x
      {"p cnf 1 2\na 1 0\n1 0\n-1 0\n", false},
      {"p cnf 2 2\ne 1 0\na 2 0\n1 2 0\n-1 -2 0\n", false},
      {"p cnf 2 2\na 1 0\ne 2 0\n1 2 0\n-1 -2 0\n", true},
      {"p cnf 2 2\na 1 2 0\n1 2 0\n-1 -2 0\n", false},
      {"p cnf 2 2\ne 1 2 0\n1 2 0\n-1 -2 0\n", true},
      {"p cnf 2 1\n1 2 0\n", true},                           // free variables
      {"p cnf 2 2\na 1 0\n1 2 0\n-1 2 0\n", true},            // free inner var
      {"p cnf 1 1\na 1 0\n1 1 -1 0\n", true},                 // duplicates
      {"p cnf 1 2\ne 1 0\n1 0\n1 0\n", true},                 // repeated clause
      {"p cnf 4 1\na 1 2 3 4 0\n1 -2 3 -4 0\n", false},       // wide clause
      {"p cnf 3 3\ne 1 2 3 0\n1 0\n-1 2 0\n-2 3 0\n", true},  // unit chain
      {"p cnf 3 3\na 1 0\ne 2 3 0\n1 0\n-1 2 0\n-2 3 0\n", false},
      {"p cnf 4 1\ne 1 0\na 2 0\ne 3 0\na 4 0\n3 0\n", true},  // unused vars
      {"p cnf 2 0\na 1 0\ne 2 0\n", true},                     // no clauses
      {"p cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 2 3 0\n-1 -2 -3 0\n", true},
  };
  int index = 0;
  for (const HandCase& c : hand_cases) {
    check_formula(parse_qdimacs(c.text),
                  "hand case " + std::to_string(index++), c.truth);
  }

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int vars = 1 + static_cast<int>(seed % 4);       // n <= 4
    const int clauses = static_cast<int>(seed % 9);        // m <= 8
    const int width = 1 + static_cast<int>((seed / 2) % 3);
    check_formula(gen_random_qbf(vars, clauses, width, seed),
                  "random formula " + std::to_string(seed), std::nullopt);
  }
}

// --------------------------------------------------------------------------
// Criterion 6: family semantics for n in 2..8.
void criterion_families(Ctx& ctx) {
  for (int n = 2; n <= 8; ++n) {
    for (Family family : kAllFamilies) {
      ReachGame game = gen_family(family, n);
      VertexId from = game.initial_or_throw();
      Verdict want = (family == Family::kDW1 || family == Family::kDW2)
                         ? Verdict::kWin
                         : Verdict::kLose;
      std::string label =
          std::string(family_name(family)) + " n=" + std::to_string(n);
      ctx.require(dfs_solve(game, from) == want,
                  label + ": dfs says " + verdict_name(dfs_solve(game, from)));
      ctx.require(attractor_solve(game, from) == want,
                  label + ": attractor disagrees");
    }
  }
}

// --------------------------------------------------------------------------
// Criterion 7: knowledge-family size of the elimination family, including
// the 4096-element anchor at n = 11.
void criterion_scaling(Ctx& ctx) {
  for (int n = 2; n <= 8; ++n) {
    Lattice lat = Lattice::build(gen_family(Family::kDNW1, n).arena);
    ctx.require(lat.size() == (std::size_t{1} << (n + 1)),
                "D-NW-1 n=" + std::to_string(n) + ": family size " +
                    std::to_string(lat.size()));
  }
  Lattice big = Lattice::build(gen_family(Family::kDNW1, 11).arena);
  ctx.require(big.size() == 4096, "D-NW-1 n=11: family size " +
                                      std::to_string(big.size()) +
                                      ", want 4096");
}

// --------------------------------------------------------------------------
// Criterion 8a: interval-set boolean algebra against the bitset oracle.
void property_interval_sets(Ctx& ctx) {
  testing::Rng rng(808);
  for (int round = 0; round < 10000; ++round) {
    IntervalSet a = testing::random_set(rng);
    IntervalSet b = testing::random_set(rng);
    testing::BitCounts ba = testing::to_bits(a);
    testing::BitCounts bb = testing::to_bits(b);
    const std::string label = "interval case " + std::to_string(round);

    ctx.require(testing::to_bits(a.unite(b)) == ba.unite(bb),
                label + ": union");
    ctx.require(testing::to_bits(a.intersect(b)) == ba.intersect(bb),
                label + ": intersection");
    ctx.require(testing::to_bits(a.difference(b)) == ba.difference(bb),
                label + ": difference");
    ctx.require(testing::to_bits(a.complement()) == ba.complement(),
                label + ": complement");
    ctx.require(a.subset_of(b) == ba.subset_of(bb), label + ": subset");
    ctx.require(a.intersects(b) == !ba.intersect(bb).empty(),
                label + ": intersects");
    ctx.require(IntervalSet::parse(a.format()) == a, label + ": round trip");
    ctx.require(a.unite(b).difference(b).unite(b) == a.unite(b),
                label + ": absorption");
  }
}

// Criterion 8b: antichain join/meet/order equivalences.
void property_antichains(Ctx& ctx) {
  Lattice lat = Lattice::build(fixture_game().arena);
  LatticeDomain dom(lat);
  testing::Rng rng(909);

  auto random_antichain = [&](std::size_t vertices) {
    Antichain<LatticeDomain> w(vertices);
    for (std::size_t v = 0; v < vertices; ++v) {
      const int picks = rng.below(4);
      for (int i = 0; i < picks; ++i) {
        w.insert(dom, static_cast<VertexId>(v),
                 rng.below_u(static_cast<std::uint32_t>(lat.size())));
      }
    }
    return w;
  };

  for (int round = 0; round < 1000; ++round) {
    auto a = random_antichain(3);
    auto b = random_antichain(3);
    auto joined = a;
    joined.join_with(dom, b);
    auto met = Antichain<LatticeDomain>::meet(dom, a, b);
    const std::string label = "antichain case " + std::to_string(round);

    bool le = a.leq(dom, b);
    ctx.require(le == joined.equals(dom, b), label + ": order vs join");
    ctx.require(le == met.equals(dom, a), label + ": order vs meet");
    ctx.require(met.leq(dom, a) && met.leq(dom, b),
                label + ": meet is a lower bound");
    ctx.require(a.leq(dom, joined) && b.leq(dom, joined),
                label + ": join is an upper bound");
    for (std::size_t v = 0; v < 3; ++v) {
      for (Lattice::Id k = 0; k < lat.size(); ++k) {
        bool in_a = a.dominated(dom, static_cast<VertexId>(v), k);
        bool in_b = b.dominated(dom, static_cast<VertexId>(v), k);
        bool in_join = joined.dominated(dom, static_cast<VertexId>(v), k);
        bool in_meet = met.dominated(dom, static_cast<VertexId>(v), k);
        ctx.require(in_join == (in_a || in_b), label + ": join membership");
        ctx.require(in_meet == (in_a && in_b), label + ": meet membership");
      }
    }
  }
}

// Criterion 8c: the two predecessor-step styles agree, are monotone, and
// map the fixpoint into itself.
void property_operators(Ctx& ctx) {
  testing::Rng rng(1111);
  SetDomain sdom;
  for (int round = 0; round < 60; ++round) {
    ReachGame game = testing::random_complete_game(rng);
    Lattice lat = Lattice::build(game.arena);
    LatticeDomain ldom(lat);
    const std::size_t nv = game.arena.num_vertices();
    const std::string label = "operator case " + std::to_string(round);

    // Random w and a random enlargement w' ⊒ w, mirrored across backings.
    Antichain<SetDomain> ws(nv), ws_big(nv);
    Antichain<LatticeDomain> wl(nv), wl_big(nv);
    auto seed_insert = [&](Antichain<SetDomain>& s, Antichain<LatticeDomain>& l,
                           VertexId v, Lattice::Id id) {
      s.insert(sdom, v, lat.element(id));
      l.insert(ldom, v, id);
    };
    for (std::size_t v = 0; v < nv; ++v) {
      seed_insert(ws, wl, static_cast<VertexId>(v), lat.bottom());
      seed_insert(ws_big, wl_big, static_cast<VertexId>(v), lat.bottom());
      const int picks = rng.below(3);
      for (int i = 0; i < picks; ++i) {
        Lattice::Id id = rng.below_u(static_cast<std::uint32_t>(lat.size()));
        seed_insert(ws, wl, static_cast<VertexId>(v), id);
        seed_insert(ws_big, wl_big, static_cast<VertexId>(v), id);
      }
      if (rng.coin()) {
        seed_insert(ws_big, wl_big, static_cast<VertexId>(v),
                    rng.below_u(static_cast<std::uint32_t>(lat.size())));
      }
    }

    for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
      for (ActionId a : game.arena.enabled(v)) {
        auto reduce_one = [&](std::vector<IntervalSet> sets) {
          std::vector<std::vector<IntervalSet>> rows(1);
          rows[0] = std::move(sets);
          return Antichain<SetDomain>::reduce(sdom, rows);
        };
        auto concrete = [&](const std::vector<Lattice::Id>& ids) {
          std::vector<IntervalSet> out;
          for (Lattice::Id id : ids) out.push_back(lat.element(id));
          return out;
        };

        auto direct = reduce_one(kpred_direct(game, ws, v, a));
        auto walk = reduce_one(concrete(kpred_lattice(game, lat, wl, v, a)));
        ctx.require(direct.at(0) == walk.at(0), label + ": style agreement");

        // Monotonicity: larger input, larger (or equal) output.
        auto direct_big = reduce_one(kpred_direct(game, ws_big, v, a));
        ctx.require(direct.leq(sdom, direct_big), label + ": monotonicity");

        // Closure: every produced set lies in the knowledge family.
        for (const IntervalSet& k : direct.at(0)) {
          ctx.require(lat.contains(k), label + ": closure");
        }
      }
    }

    // Post-fixpoint: applying the operator to the fixpoint adds nothing.
    auto trace = solve_direct(game);
    Antichain<SetDomain> fix = trace.fixpoint();
    for (VertexId v = 0; v < static_cast<VertexId>(nv); ++v) {
      for (ActionId a : game.arena.enabled(v)) {
        for (const IntervalSet& k : kpred_direct(game, fix, v, a)) {
          ctx.require(fix.dominated(sdom, v, k),
                      label + ": fixpoint is not stable");
        }
      }
    }
  }
}

// Criterion 8d: the winning region is downward closed, structurally and
// against the explicit-game oracle.
void property_downward_closure(Ctx& ctx) {
  auto check_game = [&](const ReachGame& game, const std::string& label) {
    Lattice lat = Lattice::build(game.arena);
    if (lat.size() > 64) return;  // keep the exhaustive sweep affordable
    LatticeDomain dom(lat);
    const Antichain<LatticeDomain> region =
        solve_lattice(game, lat).fixpoint();

    for (VertexId v = 0; v < game.arena.num_vertices(); ++v) {
      // Rows are antichains: no two stored elements comparable.
      const auto& row = region.at(v);
      for (std::size_t i = 0; i < row.size(); ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          ctx.require(i == j || !lat.leq(row[i], row[j]),
                      label + ": row is not an antichain");
        }
      }
      // Downward closure, semantically: membership of (v, K) coincides
      // with winning the explicit knowledge game from (v, K).
      for (Lattice::Id id = 0; id < lat.size(); ++id) {
        bool member = region.dominated(dom, v, id);
        for (Lattice::Id below = 0; below < lat.size(); ++below) {
          if (member && lat.leq(below, id)) {
            ctx.require(region.dominated(dom, v, below),
                        label + ": closure violated structurally");
          }
        }
        if (lat.element(id).empty()) continue;
        KnowledgeGame kg = build_knowledge_game(game, v, lat.element(id));
        ctx.require(member == attractor_region(kg)[kg.start],
                    label + ": oracle mismatch at (" +
                        game.arena.vertex_name(v) + ", " +
                        lat.element(id).format() + ")");
      }
    }
  };

  check_game(fixture_game(), "fixture");
  testing::Rng rng(1212);
  for (int round = 0; round < 20; ++round) {
    check_game(testing::random_complete_game(rng),
               "closure case " + std::to_string(round));
  }
}

void criterion_properties(Ctx& ctx) {
  property_interval_sets(ctx);
  property_antichains(ctx);
  property_operators(ctx);
  property_downward_closure(ctx);
}

// --------------------------------------------------------------------------
// Criterion 9: the benchmark harness emits a well-formed comparison table
// for every family at n in 2..8.
void criterion_bench(Ctx& ctx) {
  BenchOptions options;
  options.ns = {2, 3, 4, 5, 6, 7, 8};
  options.timeout_seconds = 60.0;
  std::vector<BenchRecord> records = run_bench(options);
  ctx.require(records.size() == kAllFamilies.size() * options.ns.size(),
              "record count " + std::to_string(records.size()));

  for (const BenchRecord& rec : records) {
    const std::string label = rec.family + " n=" + std::to_string(rec.n);
    bool winning = rec.family == "D-W-1" || rec.family == "D-W-2";
    ctx.require(rec.outcome == (winning ? "WIN" : "LOSE"),
                label + ": outcome " + rec.outcome);
    ctx.require(rec.lattice_size.has_value() && rec.iterations.has_value(),
                label + ": missing structural data");
  }

  std::ostringstream csv;
  write_csv(records, true, csv);
  std::istringstream lines(csv.str());
  std::string line;
  std::size_t rows = 0;
  bool first = true;
  while (std::getline(lines, line)) {
    std::size_t cells = 1;
    for (char c : line) cells += (c == ',');
    ctx.require(cells == 13, "CSV row with " + std::to_string(cells) +
                                 " cells: " + line);
    if (first) {
      ctx.require(line.rfind("Family,n,Vertices,Lattice size", 0) == 0,
                  "CSV header: " + line);
      first = false;
    } else {
      ++rows;
    }
  }
  ctx.require(rows == records.size(), "CSV body rows: " +
                                          std::to_string(rows));
}

struct Criterion {
  int id;
  const char* title;
  void (*body)(Ctx&);
  double budget_seconds;  // 0 = no stated budget
};

const Criterion kCriteria[] = {
    {1, "exact fixture region with convergence at iteration 3",
     criterion_region, 1.0},
    {2, "fixture verdicts under all four algorithms", criterion_verdicts,
     1.0},
    {3, "fixture knowledge family and Hasse diagram", criterion_lattice, 1.0},
    {4, "cross-solver agreement on random arenas and families",
     criterion_agreement, 120.0},
    {5, "QBF reduction equals brute-force truth", criterion_qbf, 120.0},
    {6, "synthetic family semantics for n in 2..8", criterion_families, 0.0},
    {7, "knowledge-family scaling anchor (4096 at n = 11)",
     criterion_scaling, 600.0},
    {8, "property suites (sets, antichains, operators, closure)",
     criterion_properties, 0.0},
    {9, "benchmark harness emits a well-formed table", criterion_bench, 0.0},
};

}  // namespace
}  // namespace pargame

int main() {
  using namespace pargame;
  int failed = 0;
  for (const Criterion& criterion : kCriteria) {
    Ctx ctx;
    std::string error;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criterion.body(ctx);
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - t0)
                         .count();

    bool pass = ctx.ok() && error.empty();
    if (pass && criterion.budget_seconds > 0 &&
        elapsed > criterion.budget_seconds) {
      pass = false;
      error = "over budget (" + std::to_string(criterion.budget_seconds) +
              " s)";
    }
    std::string reason = error.empty() ? ctx.summary() : error;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.title,
                elapsed, reason.empty() ? "" : " -- ", reason.c_str());
    std::fflush(stdout);
    failed += !pass;
  }
  if (failed == 0) {
    std::printf("all %zu criteria passed\n", std::size(kCriteria));
    return 0;
  }
  std::printf("%d criteria FAILED\n", failed);
  return 1;
}
