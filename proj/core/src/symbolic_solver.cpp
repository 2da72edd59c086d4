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

#include "pargame/symbolic_solver.hpp"

#include <algorithm>

namespace pargame {

namespace {

// Positions of each block's targets within the successor list of (v, a).
std::vector<std::vector<std::size_t>> block_positions(
    const ParamArena& arena, VertexId v, ActionId a,
    const std::vector<VertexId>& succ) {
  std::span<const ParamArena::Block> blocks = arena.blocks(v, a);
  std::vector<std::vector<std::size_t>> pos(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (VertexId t : blocks[b].targets) {
      std::size_t i = std::find(succ.begin(), succ.end(), t) - succ.begin();
      pos[b].push_back(i);
    }
  }
  return pos;
}

// Advances a mixed-radix counter over the row sizes; false at wrap-around.
template <class Row>
bool advance(std::vector<std::size_t>& idx, const std::vector<Row>& rows) {
  for (std::size_t d = 0; d < idx.size(); ++d) {
    if (++idx[d] < rows[d]->size()) return true;
    idx[d] = 0;
  }
  return false;
}

}  // namespace

const char* to_string(Verdict v) {
  return v == Verdict::kWin ? "WIN" : "LOSE";
}

std::vector<Lattice::Id> kpred_lattice(const ReachGame& game,
                                       const Lattice& lattice,
                                       const Antichain<LatticeDomain>& w,
                                       VertexId v, ActionId a) {
  const LatticeDomain dom(lattice);
  struct EdgeRef {
    VertexId to;
    Lattice::Id counts;
  };
  std::vector<EdgeRef> edges;
  for (const ParamArena::Edge& e : game.arena.edges(v, a)) {
    edges.push_back(EdgeRef{e.to, lattice.id_of(e.counts)});
  }

  // The qualifying predicate is downward closed, so the walk never needs to
  // look below a qualifying element: its descendants qualify too but are all
  // dominated.
  std::vector<Lattice::Id> result;
  std::vector<char> visited(lattice.size(), 0);
  std::vector<Lattice::Id> stack{lattice.top()};
  visited[lattice.top()] = 1;
  while (!stack.empty()) {
    Lattice::Id k = stack.back();
    stack.pop_back();
    bool qualifies = true;
    for (const EdgeRef& e : edges) {
      if (!w.dominated(dom, e.to, lattice.meet(k, e.counts))) {
        qualifies = false;
        break;
      }
    }
    if (qualifies) {
      result.push_back(k);
      continue;
    }
    for (Lattice::Id c : lattice.children(k)) {
      if (!visited[c]) {
        visited[c] = 1;
        stack.push_back(c);
      }
    }
  }

  // Distinct branches of the walk can still produce comparable elements.
  std::vector<Lattice::Id> maximal;
  for (Lattice::Id k : result) {
    bool keep = true;
    for (Lattice::Id other : result) {
      if (other != k && lattice.leq(k, other)) {
        keep = false;
        break;
      }
    }
    if (keep) maximal.push_back(k);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<IntervalSet> kpred_direct(const ReachGame& game,
                                      const Antichain<SetDomain>& w,
                                      VertexId v, ActionId a) {
  const ParamArena& arena = game.arena;
  const std::vector<VertexId> succ = arena.successors(v, a);
  std::span<const ParamArena::Block> blocks = arena.blocks(v, a);
  const std::vector<std::vector<std::size_t>> pos =
      block_positions(arena, v, a, succ);

  std::vector<const std::vector<IntervalSet>*> rows;
  for (VertexId s : succ) rows.push_back(&w.at(s));

  std::vector<IntervalSet> results;
  std::vector<std::size_t> idx(succ.size(), 0);
  do {
    // One witness choice per successor; each partition cell contributes the
    // counts that stay inside every chosen witness of its targets.
    IntervalSet result;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      IntervalSet cell = blocks[b].counts;
      for (std::size_t p : pos[b]) {
        cell = cell.intersect((*rows[p])[idx[p]]);
        if (cell.empty()) break;
      }
      if (!cell.empty()) result = result.unite(cell);
    }
    results.push_back(std::move(result));
  } while (advance(idx, rows));

  results.push_back(IntervalSet());
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

std::vector<Lattice::Id> kpred_direct(const ReachGame& game,
                                      const Lattice& lattice,
                                      const Antichain<LatticeDomain>& w,
                                      VertexId v, ActionId a) {
  const ParamArena& arena = game.arena;
  const std::vector<VertexId> succ = arena.successors(v, a);
  std::span<const ParamArena::Block> blocks = arena.blocks(v, a);
  const std::vector<std::vector<std::size_t>> pos =
      block_positions(arena, v, a, succ);
  std::vector<Lattice::Id> cell_ids;
  for (const ParamArena::Block& b : blocks) {
    cell_ids.push_back(lattice.id_of(b.counts));
  }

  std::vector<const std::vector<Lattice::Id>*> rows;
  for (VertexId s : succ) rows.push_back(&w.at(s));

  std::vector<Lattice::Id> results;
  std::vector<std::size_t> idx(succ.size(), 0);
  do {
    Lattice::Id result = lattice.bottom();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      Lattice::Id cell = cell_ids[b];
      for (std::size_t p : pos[b]) {
        cell = lattice.meet(cell, (*rows[p])[idx[p]]);
        if (cell == lattice.bottom()) break;
      }
      if (cell != lattice.bottom()) result = lattice.join(result, cell);
    }
    results.push_back(result);
  } while (advance(idx, rows));

  results.push_back(lattice.bottom());
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  return results;
}

FixpointTrace<LatticeDomain> solve_lattice(const ReachGame& game,
                                           const Lattice& lattice,
                                           const SolveOptions& opts) {
  LatticeDomain dom(lattice);
  return detail::fixpoint_loop(
      game, dom,
      [&](VertexId v, ActionId a, const Antichain<LatticeDomain>& w) {
        return kpred_lattice(game, lattice, w, v, a);
      },
      opts);
}

FixpointTrace<SetDomain> solve_direct(const ReachGame& game,
                                      const SolveOptions& opts) {
  SetDomain dom;
  return detail::fixpoint_loop(
      game, dom,
      [&](VertexId v, ActionId a, const Antichain<SetDomain>& w) {
        return kpred_direct(game, w, v, a);
      },
      opts);
}

FixpointTrace<LatticeDomain> solve_direct(const ReachGame& game,
                                          const Lattice& lattice,
                                          const SolveOptions& opts) {
  LatticeDomain dom(lattice);
  return detail::fixpoint_loop(
      game, dom,
      [&](VertexId v, ActionId a, const Antichain<LatticeDomain>& w) {
        return kpred_direct(game, lattice, w, v, a);
      },
      opts);
}

}  // namespace pargame
