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

#ifndef PARGAME_SYMBOLIC_SOLVER_HPP_
#define PARGAME_SYMBOLIC_SOLVER_HPP_

#include <cstddef>
#include <vector>

#include "pargame/antichain.hpp"
#include "pargame/arena.hpp"
#include "pargame/common.hpp"
#include "pargame/lattice.hpp"

namespace pargame {

enum class Verdict { kWin, kLose };
const char* to_string(Verdict v);

struct SolveOptions {
  // Keep every iterate in the trace; otherwise only the last two survive.
  bool full_trace = true;
  Deadline deadline;
};

// The iterates W^0 ⊑ W^1 ⊑ ... of a reachability fixpoint, ending with two
// equal antichains.
template <class Domain>
struct FixpointTrace {
  std::vector<Antichain<Domain>> iterates;
  // First index i with W^i == W^{i-1} (the number of operator applications).
  std::size_t converged_at = 0;
  bool full = true;

  const Antichain<Domain>& fixpoint() const { return iterates.back(); }
};

template <class Domain>
Verdict verdict(const Domain& dom, const FixpointTrace<Domain>& trace,
                VertexId from) {
  return trace.fixpoint().dominated(dom, from, dom.universe())
             ? Verdict::kWin
             : Verdict::kLose;
}

// Predecessor step on the knowledge lattice: the maximal sets K such that
// playing a at v keeps every reachable (successor, refined knowledge) inside
// the closure of w. Walks the Hasse diagram from the top, pruning below
// qualifying elements.
std::vector<Lattice::Id> kpred_lattice(const ReachGame& game,
                                       const Lattice& lattice,
                                       const Antichain<LatticeDomain>& w,
                                       VertexId v, ActionId a);

// Predecessor step by direct construction: for every choice of one stored
// knowledge set per successor, the union over partition cells of
// cell ∩ (chosen sets of the cell's targets). Returns the deduplicated
// results plus the empty set; the list is not reduced to maximal elements.
std::vector<IntervalSet> kpred_direct(const ReachGame& game,
                                      const Antichain<SetDomain>& w,
                                      VertexId v, ActionId a);
std::vector<Lattice::Id> kpred_direct(const ReachGame& game,
                                      const Lattice& lattice,
                                      const Antichain<LatticeDomain>& w,
                                      VertexId v, ActionId a);

// Fixpoint solver driven by kpred_lattice (requires the knowledge lattice).
FixpointTrace<LatticeDomain> solve_lattice(const ReachGame& game,
                                           const Lattice& lattice,
                                           const SolveOptions& opts = {});

// Fixpoint solver driven by kpred_direct, on explicit sets or on lattice ids.
FixpointTrace<SetDomain> solve_direct(const ReachGame& game,
                                      const SolveOptions& opts = {});
FixpointTrace<LatticeDomain> solve_direct(const ReachGame& game,
                                          const Lattice& lattice,
                                          const SolveOptions& opts = {});

namespace detail {

// Shared round-based loop: each round applies `kpred` to the previous
// iterate, joining the results in. A (v, a) pair is re-evaluated only if
// some successor's row changed in the previous round.
template <class Domain, class KpredFn>
FixpointTrace<Domain> fixpoint_loop(const ReachGame& game, const Domain& dom,
                                    KpredFn kpred, const SolveOptions& opts) {
  const ParamArena& arena = game.arena;
  const std::size_t nv = arena.num_vertices();

  FixpointTrace<Domain> trace;
  trace.full = opts.full_trace;
  Antichain<Domain> w = Antichain<Domain>::initial(dom, nv, game.target);
  trace.iterates.push_back(w);

  std::vector<char> dirty(nv, 1);
  std::size_t round = 0;
  while (true) {
    opts.deadline.check("fixpoint iteration");
    Antichain<Domain> next = w;
    std::vector<char> changed(nv, 0);
    for (VertexId v = 0; v < nv; ++v) {
      for (ActionId a : arena.enabled(v)) {
        bool relevant = false;
        for (const ParamArena::Edge& e : arena.edges(v, a)) {
          if (dirty[e.to]) {
            relevant = true;
            break;
          }
        }
        if (!relevant) continue;
        opts.deadline.check("predecessor step");
        for (auto& k : kpred(v, a, w)) {
          if (next.insert(dom, v, std::move(k))) changed[v] = 1;
        }
      }
    }
    ++round;
    if (!trace.full && trace.iterates.size() == 2) {
      trace.iterates.erase(trace.iterates.begin());
    }
    trace.iterates.push_back(next);
    bool any = false;
    for (char c : changed) any |= (c != 0);
    if (!any) {
      trace.converged_at = round;
      return trace;
    }
    w = std::move(next);
    dirty = std::move(changed);
  }
}

}  // namespace detail

}  // namespace pargame

#endif  // PARGAME_SYMBOLIC_SOLVER_HPP_
