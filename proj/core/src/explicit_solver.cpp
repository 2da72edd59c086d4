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

#include "pargame/explicit_solver.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <utility>

namespace pargame {

std::size_t KnowledgeGame::num_edges() const {
  std::size_t n = 0;
  for (const EveNode& e : eve_nodes) n += e.moves.size();
  for (const AdamNode& a : adam_nodes) n += a.succs.size();
  return n;
}

KnowledgeGame build_knowledge_game(const ReachGame& game, VertexId from,
                                   IntervalSet knowledge,
                                   std::size_t max_nodes,
                                   const Deadline& deadline) {
  const ParamArena& arena = game.arena;
  KnowledgeGame kg;
  std::map<std::pair<VertexId, IntervalSet>, std::uint32_t> ids;

  auto intern = [&](VertexId v, IntervalSet k) {
    auto key = std::make_pair(v, std::move(k));
    if (auto it = ids.find(key); it != ids.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(kg.eve_nodes.size());
    if (kg.eve_nodes.size() >= max_nodes) {
      throw CapacityError("knowledge game exceeded the node cap (" +
                          std::to_string(max_nodes) + ")");
    }
    kg.eve_nodes.push_back(
        KnowledgeGame::EveNode{v, key.second, v == game.target, {}});
    ids.emplace(std::move(key), id);
    return id;
  };

  kg.start = intern(from, std::move(knowledge));
  std::deque<std::uint32_t> queue{kg.start};
  while (!queue.empty()) {
    deadline.check("knowledge game construction");
    std::uint32_t id = queue.front();
    queue.pop_front();
    if (kg.eve_nodes[id].is_target) continue;  // plays stop at the target
    const VertexId v = kg.eve_nodes[id].vertex;
    const IntervalSet k = kg.eve_nodes[id].knowledge;
    for (ActionId a : arena.enabled(v)) {
      KnowledgeGame::AdamNode adam{id, a, {}};
      for (const ParamArena::Edge& e : arena.edges(v, a)) {
        IntervalSet refined = k.intersect(e.counts);
        if (refined.empty()) continue;  // no possible count reaches e.to
        std::size_t before = kg.eve_nodes.size();
        std::uint32_t succ = intern(e.to, std::move(refined));
        if (kg.eve_nodes.size() > before) queue.push_back(succ);
        adam.succs.push_back(succ);
      }
      std::uint32_t adam_id = static_cast<std::uint32_t>(kg.adam_nodes.size());
      kg.adam_nodes.push_back(std::move(adam));
      kg.eve_nodes[id].moves.push_back(adam_id);
    }
  }
  return kg;
}

KnowledgeGame build_knowledge_game(const ReachGame& game,
                                   std::size_t max_nodes,
                                   const Deadline& deadline) {
  return build_knowledge_game(game, game.initial_or_throw(),
                              IntervalSet::universe(), max_nodes, deadline);
}

std::vector<bool> attractor_region(const KnowledgeGame& kg) {
  std::vector<bool> eve_win(kg.eve_nodes.size(), false);
  std::vector<bool> adam_win(kg.adam_nodes.size(), false);
  // An antagonist node is won once every successor is won; count down.
  std::vector<std::size_t> pending(kg.adam_nodes.size());
  std::vector<std::vector<std::uint32_t>> eve_preds(kg.eve_nodes.size());
  for (std::uint32_t ad = 0; ad < kg.adam_nodes.size(); ++ad) {
    pending[ad] = kg.adam_nodes[ad].succs.size();
    for (std::uint32_t succ : kg.adam_nodes[ad].succs) {
      eve_preds[succ].push_back(ad);
    }
  }

  std::deque<std::uint32_t> queue;  // protagonist nodes newly won
  for (std::uint32_t id = 0; id < kg.eve_nodes.size(); ++id) {
    if (kg.eve_nodes[id].is_target) {
      eve_win[id] = true;
      queue.push_back(id);
    }
  }
  while (!queue.empty()) {
    std::uint32_t id = queue.front();
    queue.pop_front();
    for (std::uint32_t ad : eve_preds[id]) {
      if (adam_win[ad] || --pending[ad] > 0) continue;
      adam_win[ad] = true;
      std::uint32_t owner = kg.adam_nodes[ad].eve_from;
      if (!eve_win[owner]) {
        eve_win[owner] = true;
        queue.push_back(owner);
      }
    }
  }
  return eve_win;
}

Verdict attractor_solve(const KnowledgeGame& kg) {
  return attractor_region(kg)[kg.start] ? Verdict::kWin : Verdict::kLose;
}

Verdict attractor_solve(const ReachGame& game, VertexId from,
                        std::size_t max_nodes, const Deadline& deadline) {
  return attractor_solve(build_knowledge_game(
      game, from, IntervalSet::universe(), max_nodes, deadline));
}

namespace {

// Solves the sub-game of knowledge-preserving moves containing (v, k): one
// local node per arena vertex, boundary moves that strictly refine the
// knowledge resolved by recursion. All local results are memoized at once;
// a node's attractor status only depends on its own reachable part, which is
// the same in every sub-game it appears in.
class DfsSolver {
 public:
  DfsSolver(const ReachGame& game, const Deadline& deadline)
      : game_(game), deadline_(deadline) {}

  bool wins(VertexId v, const IntervalSet& k) {
    if (auto it = memo_.find({v, k}); it != memo_.end()) return it->second;
    deadline_.check("sub-game decomposition");
    solve_component(v, k);
    return memo_.at({v, k});
  }

 private:
  struct Succ {
    bool internal;
    std::uint32_t local;  // local protagonist node when internal
    bool won;             // resolved boundary status otherwise
  };
  struct LocalMove {
    std::vector<Succ> succs;
  };
  struct LocalNode {
    VertexId vertex;
    bool is_target;
    std::vector<LocalMove> moves;
  };

  void solve_component(VertexId root, const IntervalSet& k) {
    const ParamArena& arena = game_.arena;
    std::vector<LocalNode> nodes;
    std::vector<std::uint32_t> local_of(arena.num_vertices(), kNone);

    auto intern = [&](VertexId v) {
      if (local_of[v] != kNone) return local_of[v];
      local_of[v] = static_cast<std::uint32_t>(nodes.size());
      nodes.push_back(LocalNode{v, v == game_.target, {}});
      return local_of[v];
    };

    intern(root);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      deadline_.check("sub-game decomposition");
      const VertexId v = nodes[i].vertex;
      if (nodes[i].is_target) continue;
      for (ActionId a : arena.enabled(v)) {
        LocalMove move;
        for (const ParamArena::Edge& e : arena.edges(v, a)) {
          IntervalSet refined = k.intersect(e.counts);
          if (refined.empty()) continue;
          if (refined == k) {
            move.succs.push_back(Succ{true, intern(e.to), false});
          } else {
            // Strictly smaller knowledge: leave this sub-game and recurse.
            move.succs.push_back(Succ{false, 0, wins(e.to, refined)});
          }
        }
        nodes[i].moves.push_back(std::move(move));
      }
    }

    std::vector<bool> win = local_attractor(nodes);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      memo_[{nodes[i].vertex, k}] = win[i];
    }
  }

  static std::vector<bool> local_attractor(const std::vector<LocalNode>& nodes) {
    std::vector<bool> win(nodes.size(), false);
    bool changed = true;
    while (changed) {  // sub-games are small; a round-based pass suffices
      changed = false;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (win[i]) continue;
        bool w = nodes[i].is_target;
        for (const LocalMove& move : nodes[i].moves) {
          bool all = !move.succs.empty();
          for (const Succ& s : move.succs) {
            all &= s.internal ? static_cast<bool>(win[s.local]) : s.won;
          }
          if (all) {
            w = true;
            break;
          }
        }
        if (w) {
          win[i] = true;
          changed = true;
        }
      }
    }
    return win;
  }

  static constexpr std::uint32_t kNone = UINT32_MAX;

  const ReachGame& game_;
  const Deadline& deadline_;
  std::map<std::pair<VertexId, IntervalSet>, bool> memo_;
};

}  // namespace

Verdict dfs_solve(const ReachGame& game, VertexId from,
                  const Deadline& deadline) {
  DfsSolver solver(game, deadline);
  return solver.wins(from, IntervalSet::universe()) ? Verdict::kWin
                                                    : Verdict::kLose;
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const KnowledgeGame& kg, const ParamArena& arena) {
  std::ostringstream out;
  out << "digraph knowledge_game {\n";
  for (std::size_t i = 0; i < kg.eve_nodes.size(); ++i) {
    const KnowledgeGame::EveNode& n = kg.eve_nodes[i];
    out << "  e" << i << " [shape=ellipse"
        << (n.is_target ? ", peripheries=2" : "") << ", label=\""
        << dot_escape(arena.vertex_name(n.vertex)) << " | "
        << n.knowledge.format() << "\"];\n";
  }
  for (std::size_t i = 0; i < kg.adam_nodes.size(); ++i) {
    const KnowledgeGame::AdamNode& n = kg.adam_nodes[i];
    const KnowledgeGame::EveNode& from = kg.eve_nodes[n.eve_from];
    out << "  a" << i << " [shape=box, label=\""
        << dot_escape(arena.vertex_name(from.vertex)) << " | "
        << from.knowledge.format() << " | "
        << dot_escape(arena.action_name(n.action)) << "\"];\n";
  }
  for (std::size_t i = 0; i < kg.eve_nodes.size(); ++i) {
    for (std::uint32_t ad : kg.eve_nodes[i].moves) {
      out << "  e" << i << " -> a" << ad << ";\n";
    }
  }
  for (std::size_t i = 0; i < kg.adam_nodes.size(); ++i) {
    for (std::uint32_t succ : kg.adam_nodes[i].succs) {
      out << "  a" << i << " -> e" << succ << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pargame
