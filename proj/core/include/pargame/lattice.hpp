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

#ifndef PARGAME_LATTICE_HPP_
#define PARGAME_LATTICE_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pargame/arena.hpp"
#include "pargame/common.hpp"
#include "pargame/interval_set.hpp"

namespace pargame {

// The finite family of knowledge sets reachable in a given arena: the least
// family containing the full universe, the empty set and every edge
// constraint, closed under union, intersection and set difference. Elements
// are deduplicated and connected by their covering relation (Hasse diagram),
// which the solvers use to walk maximal elements first.
class Lattice {
 public:
  using Id = std::uint32_t;

  // The trivial family: just the full universe and the empty set.
  Lattice();

  // Builds the closure for an arena. Throws CapacityError once more than
  // `max_elements` sets exist; `deadline` is checked as the closure grows.
  static Lattice build(const ParamArena& arena,
                       std::size_t max_elements = 1u << 20,
                       const Deadline& deadline = {});

  std::size_t size() const { return elements_.size(); }
  Id top() const { return kTop; }
  Id bottom() const { return kBottom; }
  const IntervalSet& element(Id id) const { return elements_[id]; }
  // Id of an existing element; throws InputError if the set is not in the
  // family.
  Id id_of(const IntervalSet& set) const;
  bool contains(const IntervalSet& set) const {
    return index_.find(set) != index_.end();
  }

  bool leq(Id a, Id b) const {
    return elements_[a].subset_of(elements_[b]);
  }
  // Meet/join always exist in the family by closure; internal consistency is
  // asserted.
  Id meet(Id a, Id b) const;
  Id join(Id a, Id b) const;

  // Direct covers: parents are the minimal elements strictly above `id`,
  // children the maximal ones strictly below. Both lists are sorted.
  std::span<const Id> parents(Id id) const { return parents_[id]; }
  std::span<const Id> children(Id id) const { return children_[id]; }

  // Number of distinct constraint sets the closure started from.
  std::size_t num_generators() const { return num_generators_; }
  // Length (number of edges) of a longest chain from top to bottom.
  std::size_t height() const;

  // One line per element: "id<TAB>set<TAB>parents<TAB>children", ids in
  // insertion order, link lists comma-separated and sorted.
  void dump(std::ostream& out) const;

 private:
  static constexpr Id kTop = 0;
  static constexpr Id kBottom = 1;

  // Inserts a set and rewires the covering relation around it; returns the
  // id (existing or fresh).
  Id insert(const IntervalSet& set);

  std::vector<IntervalSet> elements_;
  std::vector<std::vector<Id>> parents_;
  std::vector<std::vector<Id>> children_;
  std::unordered_map<IntervalSet, Id> index_;
  std::size_t num_generators_ = 0;
};

}  // namespace pargame

#endif  // PARGAME_LATTICE_HPP_
