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

#ifndef PARGAME_INTERVAL_SET_HPP_
#define PARGAME_INTERVAL_SET_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pargame {

// A set of opponent counts: a finite union of integer intervals over the
// count universe {1, 2, 3, ...}, possibly including an unbounded tail.
// The representation is canonical (sorted, pairwise disjoint, non-adjacent
// intervals), so structural equality coincides with set equality.
//
// Textual format: "*" is the full universe, "" is the empty set, otherwise a
// comma-separated list of items "n", "n-m", or "n-*" (e.g. "1,3-5,9-*").
class IntervalSet {
 public:
  // Sentinel upper bound standing for "unbounded".
  static constexpr std::uint32_t kInf = UINT32_MAX;

  struct Interval {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;  // inclusive; kInf means unbounded
    friend auto operator<=>(const Interval&, const Interval&) = default;
  };

  // The empty set.
  IntervalSet() = default;

  // Canonicalizes an arbitrary interval list: sorts, merges overlapping and
  // adjacent intervals. Throws InputError on lo < 1 or lo > hi.
  static IntervalSet from_intervals(std::vector<Interval> intervals);

  static IntervalSet universe() { return range(1, kInf); }
  static IntervalSet single(std::uint32_t k) { return range(k, k); }
  static IntervalSet range(std::uint32_t lo, std::uint32_t hi);
  // All counts >= lo.
  static IntervalSet at_least(std::uint32_t lo) { return range(lo, kInf); }
  // All counts <= hi (empty if hi == 0).
  static IntervalSet at_most(std::uint32_t hi);

  // Parses the textual format above. Throws ParseError on malformed input.
  static IntervalSet parse(std::string_view text);
  std::string format() const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet difference(const IntervalSet& other) const;
  IntervalSet complement() const;  // relative to the count universe

  bool empty() const { return intervals_.empty(); }
  bool is_universe() const {
    return intervals_.size() == 1 && intervals_[0].lo == 1 &&
           intervals_[0].hi == kInf;
  }
  bool contains(std::uint32_t k) const;
  bool subset_of(const IntervalSet& other) const;
  bool intersects(const IntervalSet& other) const;

  // Smallest element; the set must be nonempty.
  std::uint32_t min() const;
  bool unbounded() const {
    return !intervals_.empty() && intervals_.back().hi == kInf;
  }

  const std::vector<Interval>& intervals() const { return intervals_; }
  std::size_t hash() const;

  friend auto operator<=>(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> intervals_;
};

}  // namespace pargame

template <>
struct std::hash<pargame::IntervalSet> {
  std::size_t operator()(const pargame::IntervalSet& s) const {
    return s.hash();
  }
};

#endif  // PARGAME_INTERVAL_SET_HPP_
