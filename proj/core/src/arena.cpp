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

#include "pargame/arena.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pargame/common.hpp"

namespace pargame {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

VertexId ParamArena::add_vertex(std::string name) {
  if (!valid_name(name)) throw InputError("bad vertex name '" + name + "'");
  if (find_vertex(name)) throw InputError("duplicate vertex '" + name + "'");
  assert(!finalized_);
  vertex_names_.push_back(std::move(name));
  return static_cast<VertexId>(vertex_names_.size() - 1);
}

ActionId ParamArena::add_action(std::string name) {
  if (!valid_name(name)) throw InputError("bad action name '" + name + "'");
  if (find_action(name)) throw InputError("duplicate action '" + name + "'");
  assert(!finalized_);
  action_names_.push_back(std::move(name));
  return static_cast<ActionId>(action_names_.size() - 1);
}

void ParamArena::add_edge(VertexId v, ActionId a, VertexId to,
                          IntervalSet counts) {
  assert(!finalized_);
  if (v >= num_vertices() || to >= num_vertices() || a >= num_actions()) {
    throw InputError("edge references an undeclared vertex or action");
  }
  if (counts.empty()) return;
  // Edges are buffered until finalize(); slot indexing would break if more
  // actions were declared afterwards.
  for (RawEdge& e : raw_edges_) {
    if (e.v == v && e.a == a && e.to == to) {
      e.counts = e.counts.unite(counts);
      return;
    }
  }
  raw_edges_.push_back(RawEdge{v, a, to, std::move(counts)});
}

void ParamArena::finalize() {
  assert(!finalized_);
  edges_.assign(num_vertices() * num_actions(), {});
  for (RawEdge& e : raw_edges_) {
    edges_[slot(e.v, e.a)].push_back(Edge{e.to, std::move(e.counts)});
  }
  raw_edges_.clear();

  enabled_.assign(num_vertices(), {});
  for (VertexId v = 0; v < num_vertices(); ++v) {
    for (ActionId a = 0; a < num_actions(); ++a) {
      if (!edges_[slot(v, a)].empty()) enabled_[v].push_back(a);
    }
  }

  // Partition the covered count space at each (v, a) by successive
  // refinement: each edge splits every cell into the part that reaches its
  // successor and the part that does not.
  blocks_.assign(num_vertices() * num_actions(), {});
  for (std::size_t s = 0; s < edges_.size(); ++s) {
    if (edges_[s].empty()) continue;
    std::vector<Block> cells{Block{IntervalSet::universe(), {}}};
    for (const Edge& e : edges_[s]) {
      std::vector<Block> next;
      next.reserve(cells.size() * 2);
      for (Block& cell : cells) {
        IntervalSet in = cell.counts.intersect(e.counts);
        IntervalSet out = cell.counts.difference(e.counts);
        if (!in.empty()) {
          Block b{std::move(in), cell.targets};
          b.targets.push_back(e.to);
          next.push_back(std::move(b));
        }
        if (!out.empty()) {
          next.push_back(Block{std::move(out), std::move(cell.targets)});
        }
      }
      cells = std::move(next);
    }
    for (Block& cell : cells) {
      if (cell.targets.empty()) continue;  // counts with no successor at all
      std::sort(cell.targets.begin(), cell.targets.end());
      blocks_[s].push_back(std::move(cell));
    }
  }
  finalized_ = true;
}

std::optional<VertexId> ParamArena::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertex_names_.size(); ++i) {
    if (vertex_names_[i] == name) return static_cast<VertexId>(i);
  }
  return std::nullopt;
}

std::optional<ActionId> ParamArena::find_action(std::string_view name) const {
  for (std::size_t i = 0; i < action_names_.size(); ++i) {
    if (action_names_[i] == name) return static_cast<ActionId>(i);
  }
  return std::nullopt;
}

const IntervalSet& ParamArena::nabla(VertexId v, ActionId a,
                                     VertexId to) const {
  assert(finalized_);
  static const IntervalSet kEmpty;
  for (const Edge& e : edges_[slot(v, a)]) {
    if (e.to == to) return e.counts;
  }
  return kEmpty;
}

IntervalSet ParamArena::nabla_exactly(VertexId v, ActionId a,
                                      std::span<const VertexId> targets) const {
  assert(finalized_);
  IntervalSet result = IntervalSet::universe();
  std::size_t matched = 0;
  for (const Edge& e : edges_[slot(v, a)]) {
    bool in = std::find(targets.begin(), targets.end(), e.to) != targets.end();
    if (in) {
      result = result.intersect(e.counts);
      ++matched;
    } else {
      result = result.difference(e.counts);
    }
    if (result.empty()) return result;
  }
  // A requested target that is not a successor of (v, a) forces the empty
  // set: no count reaches it.
  std::vector<VertexId> distinct(targets.begin(), targets.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (matched != distinct.size()) return IntervalSet();
  return result;
}

std::span<const ActionId> ParamArena::enabled(VertexId v) const {
  assert(finalized_);
  return enabled_[v];
}

std::span<const ParamArena::Edge> ParamArena::edges(VertexId v,
                                                    ActionId a) const {
  assert(finalized_);
  return edges_[slot(v, a)];
}

std::vector<VertexId> ParamArena::successors(VertexId v, ActionId a) const {
  std::vector<VertexId> out;
  for (const Edge& e : edges(v, a)) out.push_back(e.to);
  return out;
}

std::span<const ParamArena::Block> ParamArena::blocks(VertexId v,
                                                      ActionId a) const {
  assert(finalized_);
  return blocks_[slot(v, a)];
}

VertexId ReachGame::initial_or_throw() const {
  if (!initial) throw InputError("arena declares no init vertex");
  return *initial;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.level == Diagnostic::Level::kError;
  });
}

ReachGame parse_arena(std::string_view text) {
  ParamArena arena;
  std::optional<VertexId> target;
  std::optional<VertexId> initial;

  std::istringstream stream{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(stream, raw)) {
    ++lineno;
    if (std::size_t hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream line(raw);
    std::string directive;
    if (!(line >> directive)) continue;

    auto vertex_of = [&](const std::string& name) {
      std::optional<VertexId> v = arena.find_vertex(name);
      if (!v) throw ParseError(lineno, "unknown vertex '" + name + "'");
      return *v;
    };

    try {
      if (directive == "vertices") {
        std::string name;
        int count = 0;
        while (line >> name) {
          arena.add_vertex(name);
          ++count;
        }
        if (count == 0) throw ParseError(lineno, "'vertices' needs names");
      } else if (directive == "actions") {
        std::string name;
        int count = 0;
        while (line >> name) {
          arena.add_action(name);
          ++count;
        }
        if (count == 0) throw ParseError(lineno, "'actions' needs names");
      } else if (directive == "target" || directive == "init") {
        std::string name, extra;
        if (!(line >> name) || line >> extra) {
          throw ParseError(lineno, "'" + directive + "' takes one vertex");
        }
        std::optional<VertexId>& slot =
            directive == "target" ? target : initial;
        if (slot) throw ParseError(lineno, "duplicate '" + directive + "'");
        slot = vertex_of(name);
      } else if (directive == "edge") {
        std::string v, a, to, set, extra;
        if (!(line >> v >> a >> to >> set) || line >> extra) {
          throw ParseError(lineno, "'edge' takes: vertex action vertex set");
        }
        std::optional<ActionId> action = arena.find_action(a);
        if (!action) throw ParseError(lineno, "unknown action '" + a + "'");
        IntervalSet counts;
        try {
          counts = IntervalSet::parse(set);
        } catch (const ParseError& e) {
          // Set-syntax errors surface without position info; attach it.
          throw ParseError(lineno, e.what());
        }
        arena.add_edge(vertex_of(v), *action, vertex_of(to), counts);
      } else {
        throw ParseError(lineno, "unknown directive '" + directive + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(lineno, e.what());
    }
  }

  if (!target) throw ParseError("missing 'target' line");
  arena.finalize();
  return ReachGame{std::move(arena), *target, initial};
}

ReachGame load_arena_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open arena file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_arena(buf.str());
}

std::string format_arena(const ReachGame& game) {
  const ParamArena& arena = game.arena;
  std::ostringstream out;
  out << "vertices";
  for (std::size_t v = 0; v < arena.num_vertices(); ++v) {
    out << ' ' << arena.vertex_name(static_cast<VertexId>(v));
  }
  out << "\nactions";
  for (std::size_t a = 0; a < arena.num_actions(); ++a) {
    out << ' ' << arena.action_name(static_cast<ActionId>(a));
  }
  out << "\ntarget " << arena.vertex_name(game.target) << '\n';
  if (game.initial) {
    out << "init " << arena.vertex_name(*game.initial) << '\n';
  }
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    for (ActionId a : arena.enabled(v)) {
      for (const ParamArena::Edge& e : arena.edges(v, a)) {
        out << "edge " << arena.vertex_name(v) << ' ' << arena.action_name(a)
            << ' ' << arena.vertex_name(e.to) << ' ' << e.counts.format()
            << '\n';
      }
    }
  }
  return out.str();
}

std::vector<Diagnostic> validate(const ReachGame& game) {
  const ParamArena& arena = game.arena;
  std::vector<Diagnostic> diags;
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    if (arena.enabled(v).empty() && v != game.target) {
      diags.push_back(
          {Diagnostic::Level::kWarning,
           "dead end at '" + arena.vertex_name(v) +
               "': no enabled action (losing for the protagonist)"});
    }
    for (ActionId a : arena.enabled(v)) {
      IntervalSet cover;
      for (const ParamArena::Edge& e : arena.edges(v, a)) {
        cover = cover.unite(e.counts);
      }
      std::string where = "(" + arena.vertex_name(v) + ", " +
                          arena.action_name(a) + ")";
      if (!cover.is_universe()) {
        diags.push_back({Diagnostic::Level::kError,
                         "incomplete at " + where + ": counts " +
                             cover.complement().format() +
                             " have no successor"});
      }

      std::span<const ParamArena::Block> cells = arena.blocks(v, a);
      bool disjoint = true;
      for (std::size_t i = 0; i < cells.size() && disjoint; ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
          if (cells[i].counts.intersects(cells[j].counts)) {
            disjoint = false;
            break;
          }
        }
      }
      if (!disjoint) {
        diags.push_back({Diagnostic::Level::kError,
                         "internal: partition cells overlap at " + where});
      }
      // Self-test: each sampled knowledge set must be reassembled exactly by
      // its traces through the partition cells.
      std::vector<IntervalSet> samples{IntervalSet::universe()};
      for (const ParamArena::Edge& e : arena.edges(v, a)) {
        samples.push_back(e.counts);
      }
      for (const IntervalSet& k : samples) {
        IntervalSet assembled;
        for (const ParamArena::Block& cell : cells) {
          assembled = assembled.unite(k.intersect(cell.counts));
        }
        if (assembled != k.intersect(cover)) {
          diags.push_back({Diagnostic::Level::kError,
                           "internal: partition self-test failed at " + where});
          break;
        }
      }
    }
  }
  return diags;
}

}  // namespace pargame
