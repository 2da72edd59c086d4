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

#include "pargame/bench.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "pargame/common.hpp"
#include "pargame/explicit_solver.hpp"
#include "pargame/lattice.hpp"
#include "pargame/symbolic_solver.hpp"

namespace pargame {

const std::vector<Family> kAllFamilies = {
    Family::kDNW1, Family::kDW1, Family::kNDNW, Family::kDNW2, Family::kDW2};

const char* family_name(Family f) {
  switch (f) {
    case Family::kDNW1: return "D-NW-1";
    case Family::kDW1: return "D-W-1";
    case Family::kNDNW: return "ND-NW";
    case Family::kDNW2: return "D-NW-2";
    case Family::kDW2: return "D-W-2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string upper;
  for (char c : name) upper += std::toupper(static_cast<unsigned char>(c));
  for (Family f : kAllFamilies) {
    if (upper == family_name(f)) return f;
  }
  throw InputError("unknown family '" + name +
                   "' (expected one of D-NW-1, D-W-1, ND-NW, D-NW-2, D-W-2)");
}

namespace {

// Chain of elimination rounds: from v the protagonist sends the play to some
// x_i, which either reveals count i (and wins via y_i) or returns to v with
// count i excluded.
ReachGame gen_chain(int n, bool with_escape, bool single_action) {
  ParamArena arena;
  VertexId v = arena.add_vertex("v");
  std::vector<VertexId> x(n), y(n);
  for (int i = 0; i < n; ++i) x[i] = arena.add_vertex("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) y[i] = arena.add_vertex("y" + std::to_string(i + 1));
  VertexId s = 0;
  if (with_escape) s = arena.add_vertex("s");
  VertexId t = arena.add_vertex("t");

  std::vector<ActionId> pick;
  if (single_action) {
    pick.assign(n, arena.add_action("a"));
  } else {
    for (int i = 0; i < n; ++i) {
      pick.push_back(arena.add_action("a" + std::to_string(i + 1)));
    }
  }
  ActionId b = arena.add_action("b");

  const IntervalSet all = IntervalSet::universe();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t count = static_cast<std::uint32_t>(i + 1);
    arena.add_edge(v, pick[i], x[i], all);
    arena.add_edge(x[i], b, y[i], IntervalSet::single(count));
    arena.add_edge(x[i], b, v, IntervalSet::single(count).complement());
    arena.add_edge(y[i], b, t, all);
  }
  if (with_escape) {
    ActionId c = arena.add_action("c");
    arena.add_edge(v, c, s, IntervalSet::at_most(n));
    arena.add_edge(v, c, t, IntervalSet::at_least(n + 1));
  }
  arena.finalize();
  return ReachGame{std::move(arena), t, v};
}

// Probe gadgets with one-sided risk: probing x_i wins exactly on count i,
// returns to v on smaller counts and is lost on larger ones. The escape move
// at v needs the count to exceed n.
ReachGame gen_probe(int n, bool shared_sink) {
  ParamArena arena;
  VertexId v = arena.add_vertex("v");
  std::vector<VertexId> x(n), trap(n);
  for (int i = 0; i < n; ++i) x[i] = arena.add_vertex("x" + std::to_string(i + 1));
  for (int i = 0; i < n; ++i) {
    trap[i] = arena.add_vertex("s" + std::to_string(i + 1));
  }
  VertexId s = 0;
  if (shared_sink) s = arena.add_vertex("s");
  VertexId t = arena.add_vertex("t");

  ActionId a = arena.add_action("a");
  std::vector<ActionId> probe(n);
  for (int i = 0; i < n; ++i) {
    probe[i] = arena.add_action("b" + std::to_string(i + 1));
  }

  const IntervalSet all = IntervalSet::universe();
  arena.add_edge(v, a, t, IntervalSet::at_least(n + 1));
  // The low counts either dead-end in the shared sink or retry at v.
  arena.add_edge(v, a, shared_sink ? s : v, IntervalSet::at_most(n));
  for (int i = 0; i < n; ++i) {
    const std::uint32_t count = static_cast<std::uint32_t>(i + 1);
    arena.add_edge(v, probe[i], x[i], all);
    if (count > 1) {
      arena.add_edge(x[i], a, v, IntervalSet::at_most(count - 1));
    }
    arena.add_edge(x[i], a, t, IntervalSet::single(count));
    arena.add_edge(x[i], a, trap[i], IntervalSet::at_least(count + 1));
    arena.add_edge(trap[i], a, trap[i], all);
  }
  if (shared_sink) arena.add_edge(s, a, s, all);
  arena.finalize();
  return ReachGame{std::move(arena), t, v};
}

}  // namespace

ReachGame gen_family(Family family, int n) {
  if (n < 1) throw InputError("family scale n must be >= 1");
  switch (family) {
    case Family::kDNW1: return gen_chain(n, false, false);
    case Family::kDW1: return gen_chain(n, true, false);
    case Family::kNDNW: return gen_chain(n, true, true);
    case Family::kDNW2: return gen_probe(n, true);
    case Family::kDW2: return gen_probe(n, false);
  }
  throw InputError("unknown family");
}

namespace {

constexpr double kTimedOut = -1.0;

template <class Body>
std::optional<double> timed(double timeout_seconds, Body&& body) {
  Deadline deadline = Deadline::after(timeout_seconds);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(deadline);
  } catch (const TimeoutError&) {
    return kTimedOut;
  } catch (const CapacityError&) {
    return kTimedOut;
  }
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool ok(const std::optional<double>& t) { return t && *t >= 0; }

void format_cell(std::ostream& out, const std::optional<double>& t) {
  if (!t) {
    out << '-';
  } else if (*t < 0) {
    out << "timeout";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *t);
    out << buf;
  }
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options,
                                   std::ostream* progress) {
  std::vector<BenchRecord> records;
  for (Family family : options.families) {
    for (int n : options.ns) {
      ReachGame game = gen_family(family, n);
      const VertexId from = game.initial_or_throw();
      BenchRecord rec;
      rec.family = family_name(family);
      rec.n = n;
      rec.vertices = game.arena.num_vertices();

      std::vector<Verdict> verdicts;
      Lattice lattice;
      bool have_lattice = false;
      if (options.run_direct || options.run_lattice) {
        rec.lattice_ms = timed(options.timeout_seconds, [&](const Deadline& d) {
          lattice = Lattice::build(game.arena, options.lattice_cap, d);
        });
        if (ok(rec.lattice_ms)) {
          have_lattice = true;
          rec.lattice_size = lattice.size();
        }
      }

      SolveOptions solve_opts;
      solve_opts.full_trace = false;
      if (options.run_direct) {
        if (have_lattice) {
          rec.direct_only_ms =
              timed(options.timeout_seconds, [&](const Deadline& d) {
                solve_opts.deadline = d;
                auto trace = solve_direct(game, lattice, solve_opts);
                verdicts.push_back(
                    verdict(LatticeDomain(lattice), trace, from));
                rec.iterations = trace.converged_at;
              });
        } else {
          rec.direct_only_ms = kTimedOut;
        }
        if (ok(rec.direct_only_ms)) {
          rec.direct_total_ms = *rec.direct_only_ms + *rec.lattice_ms;
        } else {
          rec.direct_total_ms = kTimedOut;
        }
      }
      if (options.run_lattice) {
        if (have_lattice) {
          rec.lattice_only_ms =
              timed(options.timeout_seconds, [&](const Deadline& d) {
                solve_opts.deadline = d;
                auto trace = solve_lattice(game, lattice, solve_opts);
                verdicts.push_back(
                    verdict(LatticeDomain(lattice), trace, from));
                rec.iterations = trace.converged_at;
              });
        } else {
          rec.lattice_only_ms = kTimedOut;
        }
        if (ok(rec.lattice_only_ms)) {
          rec.lattice_total_ms = *rec.lattice_only_ms + *rec.lattice_ms;
        } else {
          rec.lattice_total_ms = kTimedOut;
        }
      }
      if (options.run_dfs) {
        rec.dfs_ms = timed(options.timeout_seconds, [&](const Deadline& d) {
          verdicts.push_back(dfs_solve(game, from, d));
        });
      }
      if (options.run_attractor) {
        rec.attractor_ms =
            timed(options.timeout_seconds, [&](const Deadline& d) {
              verdicts.push_back(attractor_solve(game, from, 1u << 22, d));
            });
      }

      if (verdicts.empty()) {
        rec.outcome = "timeout";
      } else if (std::all_of(verdicts.begin(), verdicts.end(),
                             [&](Verdict v) { return v == verdicts[0]; })) {
        rec.outcome = to_string(verdicts[0]);
      } else {
        rec.outcome = "MISMATCH";
      }

      if (progress != nullptr) {
        *progress << rec.family << " n=" << n << ": " << rec.outcome << '\n';
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

void write_csv(const std::vector<BenchRecord>& records, bool with_times,
               std::ostream& out) {
  out << "Family,n,Vertices,Lattice size,Lattice (ms),WAlt solve (ms),"
         "WAlt total (ms),WK solve (ms),WK total (ms),DFS (ms),"
         "Attractor (ms),Iterations,Outcome\n";
  for (const BenchRecord& rec : records) {
    out << rec.family << ',' << rec.n << ',' << rec.vertices << ',';
    if (rec.lattice_size) {
      out << *rec.lattice_size;
    } else {
      out << '-';
    }
    for (const std::optional<double>* t :
         {&rec.lattice_ms, &rec.direct_only_ms, &rec.direct_total_ms,
          &rec.lattice_only_ms, &rec.lattice_total_ms, &rec.dfs_ms,
          &rec.attractor_ms}) {
      out << ',';
      if (!with_times && *t && **t >= 0) {
        out << '-';
      } else {
        format_cell(out, *t);
      }
    }
    out << ',';
    if (rec.iterations) {
      out << *rec.iterations;
    } else {
      out << '-';
    }
    out << ',' << rec.outcome << '\n';
  }
}

}  // namespace pargame
