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

#ifndef PARGAME_EXPLICIT_SOLVER_HPP_
#define PARGAME_EXPLICIT_SOLVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pargame/arena.hpp"
#include "pargame/common.hpp"
#include "pargame/interval_set.hpp"
#include "pargame/symbolic_solver.hpp"

namespace pargame {

// The explicit two-player game a parameterized arena induces once knowledge
// is tracked: the protagonist moves at (vertex, knowledge) nodes by picking
// an action, the antagonist resolves it by picking any successor compatible
// with some count still considered possible, refining the knowledge.
struct KnowledgeGame {
  struct EveNode {
    VertexId vertex;
    IntervalSet knowledge;
    bool is_target = false;
    std::vector<std::uint32_t> moves;  // indices into adam_nodes
  };
  struct AdamNode {
    std::uint32_t eve_from;
    ActionId action;
    std::vector<std::uint32_t> succs;  // indices into eve_nodes
  };

  std::vector<EveNode> eve_nodes;
  std::vector<AdamNode> adam_nodes;
  std::uint32_t start = 0;

  std::size_t num_edges() const;
};

// Unfolds the reachable part of the knowledge game from (from, knowledge) by
// breadth-first search; node ids follow discovery order. Throws
// CapacityError past `max_nodes` protagonist nodes.
KnowledgeGame build_knowledge_game(const ReachGame& game, VertexId from,
                                   IntervalSet knowledge,
                                   std::size_t max_nodes = 1u << 22,
                                   const Deadline& deadline = {});
// Same, from the declared initial vertex with full knowledge.
KnowledgeGame build_knowledge_game(const ReachGame& game,
                                   std::size_t max_nodes = 1u << 22,
                                   const Deadline& deadline = {});

// Backward reachability attractor: per protagonist node, whether she forces
// a visit to a target node.
std::vector<bool> attractor_region(const KnowledgeGame& kg);

Verdict attractor_solve(const KnowledgeGame& kg);
Verdict attractor_solve(const ReachGame& game, VertexId from,
                        std::size_t max_nodes = 1u << 22,
                        const Deadline& deadline = {});

// Baseline that never builds the full knowledge game: solves the sub-game of
// knowledge-preserving moves around each (vertex, knowledge) pair and
// recurses into the strictly refined pairs found at its boundary.
Verdict dfs_solve(const ReachGame& game, VertexId from,
                  const Deadline& deadline = {});

// Graphviz rendering: protagonist nodes as ellipses "v | K", antagonist
// nodes as boxes "v | K | a", target nodes double-bordered.
std::string to_dot(const KnowledgeGame& kg, const ParamArena& arena);

}  // namespace pargame

#endif  // PARGAME_EXPLICIT_SOLVER_HPP_
