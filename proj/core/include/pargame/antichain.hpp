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

#ifndef PARGAME_ANTICHAIN_HPP_
#define PARGAME_ANTICHAIN_HPP_

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "pargame/arena.hpp"
#include "pargame/interval_set.hpp"
#include "pargame/lattice.hpp"

namespace pargame {

// Knowledge backing that stores explicit count sets.
struct SetDomain {
  using Knowledge = IntervalSet;

  Knowledge empty_knowledge() const { return IntervalSet(); }
  Knowledge universe() const { return IntervalSet::universe(); }
  bool subset(const Knowledge& a, const Knowledge& b) const {
    return a.subset_of(b);
  }
  bool equal(const Knowledge& a, const Knowledge& b) const { return a == b; }
  // Canonical storage order inside an antichain row.
  bool before(const Knowledge& a, const Knowledge& b) const { return a < b; }
  Knowledge intersect(const Knowledge& a, const Knowledge& b) const {
    return a.intersect(b);
  }
  IntervalSet concrete(const Knowledge& k) const { return k; }
};

// Knowledge backing that stores ids into a prebuilt knowledge lattice.
class LatticeDomain {
 public:
  using Knowledge = Lattice::Id;

  explicit LatticeDomain(const Lattice& lattice) : lattice_(&lattice) {}

  Knowledge empty_knowledge() const { return lattice_->bottom(); }
  Knowledge universe() const { return lattice_->top(); }
  bool subset(Knowledge a, Knowledge b) const { return lattice_->leq(a, b); }
  bool equal(Knowledge a, Knowledge b) const { return a == b; }
  bool before(Knowledge a, Knowledge b) const {
    return lattice_->element(a) < lattice_->element(b);
  }
  Knowledge intersect(Knowledge a, Knowledge b) const {
    return lattice_->meet(a, b);
  }
  IntervalSet concrete(Knowledge k) const { return lattice_->element(k); }
  const Lattice& lattice() const { return *lattice_; }

 private:
  const Lattice* lattice_;
};

// A vertex-indexed antichain of knowledge sets: per vertex, the maximal
// elements of a downward-closed family of (vertex, knowledge) pairs. Rows
// stay sorted in the domain's canonical order, so equal antichains have
// identical storage.
template <class Domain>
class Antichain {
 public:
  using Knowledge = typename Domain::Knowledge;

  explicit Antichain(std::size_t num_vertices) : rows_(num_vertices) {}

  // Start set of the reachability fixpoints: full knowledge at the target,
  // vacuous knowledge everywhere else.
  static Antichain initial(const Domain& dom, std::size_t num_vertices,
                           VertexId target) {
    Antichain w(num_vertices);
    for (std::size_t v = 0; v < num_vertices; ++v) {
      w.rows_[v].push_back(v == target ? dom.universe()
                                       : dom.empty_knowledge());
    }
    return w;
  }

  // Builds the antichain of maximal elements of the given rows.
  static Antichain reduce(const Domain& dom,
                          const std::vector<std::vector<Knowledge>>& rows) {
    Antichain w(rows.size());
    for (std::size_t v = 0; v < rows.size(); ++v) {
      for (const Knowledge& k : rows[v]) {
        w.insert(dom, static_cast<VertexId>(v), k);
      }
    }
    return w;
  }

  std::size_t num_vertices() const { return rows_.size(); }
  const std::vector<Knowledge>& at(VertexId v) const { return rows_[v]; }

  std::size_t total_size() const {
    std::size_t n = 0;
    for (const auto& row : rows_) n += row.size();
    return n;
  }

  // True iff (v, k) lies in the downward closure.
  bool dominated(const Domain& dom, VertexId v, const Knowledge& k) const {
    for (const Knowledge& have : rows_[v]) {
      if (dom.subset(k, have)) return true;
    }
    return false;
  }

  // Adds (v, k) unless dominated; drops elements k dominates. Returns true
  // iff the antichain changed.
  bool insert(const Domain& dom, VertexId v, Knowledge k) {
    if (dominated(dom, v, k)) return false;
    std::vector<Knowledge>& row = rows_[v];
    std::erase_if(row,
                  [&](const Knowledge& have) { return dom.subset(have, k); });
    row.insert(std::upper_bound(row.begin(), row.end(), k,
                                [&](const Knowledge& a, const Knowledge& b) {
                                  return dom.before(a, b);
                                }),
               std::move(k));
    return true;
  }

  // Lifted inclusion of downward closures.
  bool leq(const Domain& dom, const Antichain& other) const {
    for (std::size_t v = 0; v < rows_.size(); ++v) {
      for (const Knowledge& k : rows_[v]) {
        if (!other.dominated(dom, static_cast<VertexId>(v), k)) return false;
      }
    }
    return true;
  }

  bool equals(const Domain& dom, const Antichain& other) const {
    return leq(dom, other) && other.leq(dom, *this);
  }

  // In-place join: downward closure of the union. Returns true iff changed.
  bool join_with(const Domain& dom, const Antichain& other) {
    bool changed = false;
    for (std::size_t v = 0; v < other.rows_.size(); ++v) {
      for (const Knowledge& k : other.rows_[v]) {
        changed |= insert(dom, static_cast<VertexId>(v), k);
      }
    }
    return changed;
  }

  // Meet: maximal elements of the intersection of downward closures,
  // obtained from pairwise meets.
  static Antichain meet(const Domain& dom, const Antichain& a,
                        const Antichain& b) {
    Antichain out(a.rows_.size());
    for (std::size_t v = 0; v < a.rows_.size(); ++v) {
      for (const Knowledge& ka : a.rows_[v]) {
        for (const Knowledge& kb : b.rows_[v]) {
          out.insert(dom, static_cast<VertexId>(v), dom.intersect(ka, kb));
        }
      }
    }
    return out;
  }

  // Concrete count sets per vertex, sorted; backing-independent.
  std::vector<std::vector<IntervalSet>> snapshot(const Domain& dom) const {
    std::vector<std::vector<IntervalSet>> out(rows_.size());
    for (std::size_t v = 0; v < rows_.size(); ++v) {
      for (const Knowledge& k : rows_[v]) out[v].push_back(dom.concrete(k));
      std::sort(out[v].begin(), out[v].end());
    }
    return out;
  }

  // One line per vertex in declaration order: "name : K1 | K2 | ..." with
  // the maximal sets ordered by their textual form; a vertex whose only
  // knowledge is the vacuous empty set prints as "name :".
  void print(const Domain& dom, const ParamArena& arena,
             std::ostream& out) const {
    for (std::size_t v = 0; v < rows_.size(); ++v) {
      out << arena.vertex_name(static_cast<VertexId>(v)) << " :";
      std::vector<std::string> texts;
      for (const Knowledge& k : rows_[v]) {
        IntervalSet set = dom.concrete(k);
        if (!set.empty()) texts.push_back(set.format());
      }
      std::sort(texts.begin(), texts.end());
      for (std::size_t i = 0; i < texts.size(); ++i) {
        out << (i == 0 ? " " : " | ") << texts[i];
      }
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<Knowledge>> rows_;
};

}  // namespace pargame

#endif  // PARGAME_ANTICHAIN_HPP_
