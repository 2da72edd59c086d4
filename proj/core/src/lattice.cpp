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

#include "pargame/lattice.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace pargame {

Lattice::Lattice() {
  elements_.push_back(IntervalSet::universe());  // kTop
  elements_.push_back(IntervalSet());            // kBottom
  parents_ = {{}, {kTop}};
  children_ = {{kBottom}, {}};
  index_.emplace(elements_[kTop], kTop);
  index_.emplace(elements_[kBottom], kBottom);
}

Lattice::Id Lattice::insert(const IntervalSet& set) {
  if (auto it = index_.find(set); it != index_.end()) return it->second;

  const Id id = static_cast<Id>(elements_.size());

  // Direct parents: minimal strict supersets. Every superset is reachable
  // from the top along cover edges through supersets, so a downward walk
  // that only descends into supersets finds exactly the minimal ones.
  std::vector<Id> above;
  {
    std::vector<char> visited(elements_.size(), 0);
    std::vector<Id> stack{kTop};
    visited[kTop] = 1;
    while (!stack.empty()) {
      Id x = stack.back();
      stack.pop_back();
      bool lower = false;
      for (Id c : children_[x]) {
        if (set.subset_of(elements_[c])) {
          lower = true;
          if (!visited[c]) {
            visited[c] = 1;
            stack.push_back(c);
          }
        }
      }
      if (!lower) above.push_back(x);
    }
  }
  // Direct children: maximal strict subsets, dually from the bottom.
  std::vector<Id> below;
  {
    std::vector<char> visited(elements_.size(), 0);
    std::vector<Id> stack{kBottom};
    visited[kBottom] = 1;
    while (!stack.empty()) {
      Id x = stack.back();
      stack.pop_back();
      bool higher = false;
      for (Id p : parents_[x]) {
        if (elements_[p].subset_of(set)) {
          higher = true;
          if (!visited[p]) {
            visited[p] = 1;
            stack.push_back(p);
          }
        }
      }
      if (!higher) below.push_back(x);
    }
  }

  // Old cover edges now interrupted by the new element run exactly between
  // its direct parents and direct children.
  for (Id p : above) {
    for (Id c : below) {
      std::erase(children_[p], c);
      std::erase(parents_[c], p);
    }
  }

  elements_.push_back(set);
  index_.emplace(set, id);
  std::sort(above.begin(), above.end());
  std::sort(below.begin(), below.end());
  for (Id p : above) {
    children_[p].push_back(id);
    std::sort(children_[p].begin(), children_[p].end());
  }
  for (Id c : below) {
    parents_[c].push_back(id);
    std::sort(parents_[c].begin(), parents_[c].end());
  }
  parents_.push_back(std::move(above));
  children_.push_back(std::move(below));
  return id;
}

Lattice Lattice::build(const ParamArena& arena, std::size_t max_elements,
                       const Deadline& deadline) {
  Lattice lat;
  auto guard = [&]() {
    if (lat.size() > max_elements) {
      throw CapacityError("knowledge family exceeded the element cap (" +
                          std::to_string(lat.size()) + " elements, cap " +
                          std::to_string(max_elements) + ")");
    }
  };

  std::unordered_set<IntervalSet> distinct;
  for (VertexId v = 0; v < arena.num_vertices(); ++v) {
    for (ActionId a : arena.enabled(v)) {
      for (const ParamArena::Edge& e : arena.edges(v, a)) {
        if (distinct.insert(e.counts).second) ++lat.num_generators_;
        lat.insert(e.counts);
        guard();
      }
    }
  }

  // Pairwise closure. Fresh elements land at the end of the array and are
  // paired with everything before them in later rounds of the outer loop.
  // Unions and the two differences suffice: K ∩ K' arrives later as
  // K \ (K \ K'), since every element is eventually paired with every other.
  for (std::size_t i = 1; i < lat.size(); ++i) {
    deadline.check("knowledge family closure");
    const IntervalSet a = lat.elements_[i];  // copy: inserts reallocate
    for (std::size_t j = 0; j < i; ++j) {
      const IntervalSet& b = lat.elements_[j];
      // All candidates are built before any insert, which may invalidate b.
      std::array<IntervalSet, 3> candidates{a.unite(b), a.difference(b),
                                            b.difference(a)};
      for (IntervalSet& candidate : candidates) {
        if (!lat.contains(candidate)) {
          lat.insert(candidate);
          guard();
        }
      }
    }
  }
  return lat;
}

Lattice::Id Lattice::id_of(const IntervalSet& set) const {
  auto it = index_.find(set);
  if (it == index_.end()) {
    throw InputError("set '" + set.format() + "' is not in the knowledge family");
  }
  return it->second;
}

Lattice::Id Lattice::meet(Id a, Id b) const {
  auto it = index_.find(elements_[a].intersect(elements_[b]));
  if (it == index_.end()) throw std::logic_error("meet left the family");
  return it->second;
}

Lattice::Id Lattice::join(Id a, Id b) const {
  auto it = index_.find(elements_[a].unite(elements_[b]));
  if (it == index_.end()) throw std::logic_error("join left the family");
  return it->second;
}

std::size_t Lattice::height() const {
  // Longest cover path from the top; every non-top element has a parent, so
  // processing in Kahn order off the parent counts visits each node once.
  std::vector<std::size_t> remaining(size());
  std::vector<std::size_t> dist(size(), 0);
  std::vector<Id> queue{kTop};
  for (std::size_t i = 0; i < size(); ++i) {
    remaining[i] = parents_[i].size();
  }
  std::size_t best = 0;
  while (!queue.empty()) {
    Id x = queue.back();
    queue.pop_back();
    best = std::max(best, dist[x]);
    for (Id c : children_[x]) {
      dist[c] = std::max(dist[c], dist[x] + 1);
      if (--remaining[c] == 0) queue.push_back(c);
    }
  }
  return best;
}

void Lattice::dump(std::ostream& out) const {
  auto write_ids = [&out](const std::vector<Id>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out << ',';
      out << ids[i];
    }
  };
  for (std::size_t i = 0; i < size(); ++i) {
    out << i << '\t' << elements_[i].format() << '\t';
    write_ids(parents_[i]);
    out << '\t';
    write_ids(children_[i]);
    out << '\n';
  }
}

}  // namespace pargame
