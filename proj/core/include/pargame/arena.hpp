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

#ifndef PARGAME_ARENA_HPP_
#define PARGAME_ARENA_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pargame/interval_set.hpp"

namespace pargame {

using VertexId = std::uint32_t;
using ActionId = std::uint32_t;

// A parameterized arena: one protagonist controls the action choice, an
// unknown number of opponents resolves which successor is reached. An edge
// (v, a, v') carries the set of opponent counts under which playing a at v
// may lead to v'.
//
// Build with add_vertex/add_action/add_edge, then call finalize(); queries
// are only valid on a finalized arena.
class ParamArena {
 public:
  struct Edge {
    VertexId to;
    IntervalSet counts;
  };

  // One cell of the count-space partition at (v, a): all counts in `counts`
  // reach exactly the successor set `targets`.
  struct Block {
    IntervalSet counts;
    std::vector<VertexId> targets;  // sorted
  };

  VertexId add_vertex(std::string name);
  ActionId add_action(std::string name);
  // Unions counts into the (v, a, to) constraint; empty `counts` is ignored.
  void add_edge(VertexId v, ActionId a, VertexId to, IntervalSet counts);
  void finalize();
  bool finalized() const { return finalized_; }

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_actions() const { return action_names_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& action_name(ActionId a) const { return action_names_[a]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<ActionId> find_action(std::string_view name) const;

  // Constraint set of the edge (v, a, to); the empty set if there is none.
  const IntervalSet& nabla(VertexId v, ActionId a, VertexId to) const;
  // Counts under which playing a at v reaches exactly the vertices in
  // `targets` (and none of the other successors).
  IntervalSet nabla_exactly(VertexId v, ActionId a,
                            std::span<const VertexId> targets) const;

  // Actions with at least one outgoing edge at v, in declaration order.
  std::span<const ActionId> enabled(VertexId v) const;
  // Outgoing edges of (v, a) in insertion order.
  std::span<const Edge> edges(VertexId v, ActionId a) const;
  std::vector<VertexId> successors(VertexId v, ActionId a) const;
  // Partition of the counts covered at (v, a) into cells with a common
  // reached-successor set. Cells are nonempty and pairwise disjoint; for a
  // complete arena they cover the whole count universe.
  std::span<const Block> blocks(VertexId v, ActionId a) const;

 private:
  struct RawEdge {
    VertexId v;
    ActionId a;
    VertexId to;
    IntervalSet counts;
  };

  std::size_t slot(VertexId v, ActionId a) const {
    return static_cast<std::size_t>(v) * action_names_.size() + a;
  }

  std::vector<std::string> vertex_names_;
  std::vector<RawEdge> raw_edges_;  // buffered until finalize()
  std::vector<std::string> action_names_;
  std::vector<std::vector<Edge>> edges_;       // indexed by slot(v, a)
  std::vector<std::vector<ActionId>> enabled_;
  std::vector<std::vector<Block>> blocks_;     // indexed by slot(v, a)
  bool finalized_ = false;
};

// A reachability game on a parameterized arena: the protagonist wins a play
// iff it visits `target`.
struct ReachGame {
  ParamArena arena;
  VertexId target = 0;
  std::optional<VertexId> initial;

  VertexId initial_or_throw() const;
};

struct Diagnostic {
  enum class Level { kError, kWarning };
  Level level;
  std::string message;
};

bool has_errors(const std::vector<Diagnostic>& diags);

// Parses the textual arena format:
//
//   vertices NAME...        (repeatable)
//   actions NAME...         (repeatable)
//   target NAME             (required, once)
//   init NAME               (optional, once)
//   edge V A V' COUNTSET    (after the names it uses are declared)
//
// '#' starts a comment; blank lines are ignored. Throws ParseError with a
// line number on malformed input. The returned game is finalized.
ReachGame parse_arena(std::string_view text);
ReachGame load_arena_file(const std::string& path);

// Inverse of parse_arena up to comments/whitespace: emits declarations, then
// edges grouped by vertex and action in declaration order.
std::string format_arena(const ReachGame& game);

// Checks completeness (at every vertex, each enabled action covers the whole
// count universe) and reports non-target dead ends as warnings. Also
// re-checks, per (v, a), that the count-space partition cells are pairwise
// disjoint and reassemble sampled knowledge sets exactly.
std::vector<Diagnostic> validate(const ReachGame& game);

}  // namespace pargame

#endif  // PARGAME_ARENA_HPP_
