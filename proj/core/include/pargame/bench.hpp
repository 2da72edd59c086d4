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

#ifndef PARGAME_BENCH_HPP_
#define PARGAME_BENCH_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pargame/arena.hpp"

namespace pargame {

// Scalable game families. Naming scheme: D/ND = deterministic or not (does
// the protagonist's action choice determine the successor set?), W/NW =
// protagonist wins or not, trailing digit = variant.
enum class Family { kDNW1, kDW1, kNDNW, kDNW2, kDW2 };

extern const std::vector<Family> kAllFamilies;

const char* family_name(Family f);
// Accepts the family_name spelling, case-insensitively.
Family parse_family(const std::string& name);

// Instantiates a family at scale n >= 1. All instances declare an init
// vertex and are complete.
ReachGame gen_family(Family family, int n);

// One benchmark instance: structural data plus per-algorithm wall times.
// A missing time means the algorithm was not selected; a negative one means
// it hit the per-run timeout.
struct BenchRecord {
  std::string family;
  int n = 0;
  std::size_t vertices = 0;
  std::optional<std::size_t> lattice_size;
  std::optional<double> lattice_ms;
  std::optional<double> direct_only_ms;     // direct solver, lattice prebuilt
  std::optional<double> direct_total_ms;    // including the lattice build
  std::optional<double> lattice_only_ms;    // lattice-walk solver alone
  std::optional<double> lattice_total_ms;   // including the lattice build
  std::optional<double> dfs_ms;
  std::optional<double> attractor_ms;
  std::optional<std::size_t> iterations;    // fixpoint rounds to converge
  std::string outcome;                      // WIN / LOSE / timeout / MISMATCH
};

struct BenchOptions {
  std::vector<Family> families = kAllFamilies;
  std::vector<int> ns = {2, 3, 4};
  bool run_direct = true;
  bool run_lattice = true;
  bool run_dfs = true;
  bool run_attractor = true;
  double timeout_seconds = 30.0;  // per algorithm run
  std::size_t lattice_cap = 1u << 20;
};

// Runs every (family, n) instance; `progress`, when given, receives one line
// per instance.
std::vector<BenchRecord> run_bench(const BenchOptions& options,
                                   std::ostream* progress = nullptr);

// CSV with a fixed header; timings as milliseconds with three decimals.
// With `with_times` off, timing cells print "-" (timeouts still print
// "timeout"), which makes the output reproducible.
void write_csv(const std::vector<BenchRecord>& records, bool with_times,
               std::ostream& out);

}  // namespace pargame

#endif  // PARGAME_BENCH_HPP_
