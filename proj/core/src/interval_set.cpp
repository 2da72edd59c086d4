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

#include "pargame/interval_set.hpp"

#include <algorithm>
#include <charconv>

#include "pargame/common.hpp"

namespace pargame {

namespace {

// hi + 1 that saturates at kInf instead of wrapping.
std::uint32_t succ(std::uint32_t hi) {
  return hi == IntervalSet::kInf ? IntervalSet::kInf : hi + 1;
}

std::uint32_t parse_bound(std::string_view token, std::string_view whole) {
  if (token.empty() || token.size() > 9 ||
      token.find_first_not_of("0123456789") != std::string_view::npos) {
    throw ParseError("bad count '" + std::string(token) + "' in set '" +
                     std::string(whole) + "'");
  }
  std::uint32_t value = 0;
  std::from_chars(token.data(), token.data() + token.size(), value);
  if (value == 0) {
    throw ParseError("counts start at 1; got '" + std::string(token) +
                     "' in set '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

IntervalSet IntervalSet::from_intervals(std::vector<Interval> intervals) {
  for (const Interval& iv : intervals) {
    if (iv.lo < 1) throw InputError("interval bound below 1");
    if (iv.lo > iv.hi) throw InputError("interval with lo > hi");
  }
  std::sort(intervals.begin(), intervals.end());
  IntervalSet out;
  for (const Interval& iv : intervals) {
    if (!out.intervals_.empty() && iv.lo <= succ(out.intervals_.back().hi)) {
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, iv.hi);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::range(std::uint32_t lo, std::uint32_t hi) {
  return from_intervals({Interval{lo, hi}});
}

IntervalSet IntervalSet::at_most(std::uint32_t hi) {
  return hi == 0 ? IntervalSet() : range(1, hi);
}

IntervalSet IntervalSet::parse(std::string_view text) {
  if (text.empty()) return IntervalSet();
  if (text == "*") return universe();
  std::vector<Interval> items;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    if (item.empty()) {
      throw ParseError("empty item in set '" + std::string(text) + "'");
    }
    std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      std::uint32_t k = parse_bound(item, text);
      items.push_back(Interval{k, k});
    } else {
      std::uint32_t lo = parse_bound(item.substr(0, dash), text);
      std::string_view hi_tok = item.substr(dash + 1);
      std::uint32_t hi = hi_tok == "*" ? kInf : parse_bound(hi_tok, text);
      if (lo > hi) {
        throw ParseError("descending interval '" + std::string(item) +
                         "' in set '" + std::string(text) + "'");
      }
      items.push_back(Interval{lo, hi});
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos == text.size()) {
      throw ParseError("trailing comma in set '" + std::string(text) + "'");
    }
  }
  return from_intervals(std::move(items));
}

std::string IntervalSet::format() const {
  if (is_universe()) return "*";
  std::string out;
  for (const Interval& iv : intervals_) {
    if (!out.empty()) out += ',';
    out += std::to_string(iv.lo);
    if (iv.hi == iv.lo) continue;
    out += '-';
    out += iv.hi == kInf ? "*" : std::to_string(iv.hi);
  }
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  // Single merge pass over the two canonical lists, fusing overlapping and
  // adjacent runs on the fly.
  IntervalSet out;
  out.intervals_.reserve(intervals_.size() + other.intervals_.size());
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() || j < other.intervals_.size()) {
    Interval next;
    if (j == other.intervals_.size() ||
        (i < intervals_.size() && intervals_[i].lo <= other.intervals_[j].lo)) {
      next = intervals_[i++];
    } else {
      next = other.intervals_[j++];
    }
    if (!out.intervals_.empty() && next.lo <= succ(out.intervals_.back().hi)) {
      out.intervals_.back().hi = std::max(out.intervals_.back().hi, next.hi);
    } else {
      out.intervals_.push_back(next);
    }
  }
  return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet out;
  out.intervals_.reserve(intervals_.size() + other.intervals_.size());
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    std::uint32_t lo = std::max(a.lo, b.lo);
    std::uint32_t hi = std::min(a.hi, b.hi);
    if (lo <= hi) out.intervals_.push_back(Interval{lo, hi});
    // Advance whichever interval ends first; both results stay canonical.
    if (a.hi < b.hi) {
      ++i;
    } else if (b.hi < a.hi) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return out;
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out;
  out.intervals_.reserve(intervals_.size() + 1);
  std::uint32_t next = 1;
  for (const Interval& iv : intervals_) {
    if (iv.lo > next) out.intervals_.push_back(Interval{next, iv.lo - 1});
    if (iv.hi == kInf) return out;
    next = iv.hi + 1;
  }
  out.intervals_.push_back(Interval{next, kInf});
  return out;
}

IntervalSet IntervalSet::difference(const IntervalSet& other) const {
  // One pass: carve the overlapping runs of `other` out of each own run.
  // `j` tracks the first interval of `other` that could still matter; runs
  // ascend, so it never moves backwards.
  IntervalSet out;
  out.intervals_.reserve(intervals_.size() + other.intervals_.size());
  std::size_t j = 0;
  for (const Interval& a : intervals_) {
    while (j < other.intervals_.size() && other.intervals_[j].hi < a.lo) ++j;
    std::uint32_t lo = a.lo;
    for (std::size_t k = j;; ++k) {
      if (k == other.intervals_.size() || other.intervals_[k].lo > a.hi) {
        out.intervals_.push_back(Interval{lo, a.hi});
        break;
      }
      const Interval& b = other.intervals_[k];
      if (b.lo > lo) out.intervals_.push_back(Interval{lo, b.lo - 1});
      if (b.hi >= a.hi) break;  // the rest of `a` is removed
      lo = b.hi + 1;            // b.hi < a.hi <= kInf, so no overflow
    }
  }
  return out;
}

bool IntervalSet::contains(std::uint32_t k) const {
  for (const Interval& iv : intervals_) {
    if (k < iv.lo) return false;
    if (k <= iv.hi) return true;
  }
  return false;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  // Canonical form: a contiguous run fits in `other` only if one single
  // interval of `other` covers it.
  std::size_t j = 0;
  for (const Interval& a : intervals_) {
    while (j < other.intervals_.size() && other.intervals_[j].hi != kInf &&
           other.intervals_[j].hi < a.lo) {
      ++j;
    }
    if (j == other.intervals_.size() || other.intervals_[j].lo > a.lo ||
        a.hi > other.intervals_[j].hi) {
      return false;
    }
  }
  return true;
}

bool IntervalSet::intersects(const IntervalSet& other) const {
  std::size_t i = 0, j = 0;
  while (i < intervals_.size() && j < other.intervals_.size()) {
    const Interval& a = intervals_[i];
    const Interval& b = other.intervals_[j];
    if (std::max(a.lo, b.lo) <= std::min(a.hi, b.hi)) return true;
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

std::uint32_t IntervalSet::min() const {
  if (intervals_.empty()) throw InputError("min() of empty count set");
  return intervals_.front().lo;
}

std::size_t IntervalSet::hash() const {
  // FNV-1a over the interval bounds.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint32_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  for (const Interval& iv : intervals_) {
    mix(iv.lo);
    mix(iv.hi);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pargame
