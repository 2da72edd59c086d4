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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "pargame/arena.hpp"
#include "pargame/bench.hpp"
#include "pargame/common.hpp"
#include "pargame/explicit_solver.hpp"
#include "pargame/lattice.hpp"
#include "pargame/qbf.hpp"
#include "pargame/symbolic_solver.hpp"

namespace pargame {

namespace {

Deadline make_deadline(double timeout_seconds) {
  return timeout_seconds > 0 ? Deadline::after(timeout_seconds) : Deadline();
}

ReachGame load_valid_game(const std::string& path) {
  ReachGame game = load_arena_file(path);
  for (const Diagnostic& d : validate(game)) {
    if (d.level == Diagnostic::Level::kError) {
      throw InputError(path + ": " + d.message);
    }
  }
  return game;
}

VertexId resolve_from(const ReachGame& game, const std::string& name) {
  if (name.empty()) return game.initial_or_throw();
  if (auto v = game.arena.find_vertex(name)) return *v;
  throw InputError("unknown vertex '" + name + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& path,
                  std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file || !(file << text) || !file.flush()) {
    throw InputError("cannot write to '" + path + "'");
  }
}

Verdict solve_with(const std::string& algo, const ReachGame& game,
                   VertexId from, const Deadline& deadline,
                   std::size_t lattice_cap) {
  SolveOptions opts;
  opts.full_trace = false;
  opts.deadline = deadline;
  if (algo == "walt") {
    auto trace = solve_direct(game, opts);
    return verdict(SetDomain{}, trace, from);
  }
  if (algo == "wk") {
    Lattice lattice = Lattice::build(game.arena, lattice_cap, deadline);
    auto trace = solve_lattice(game, lattice, opts);
    return verdict(LatticeDomain(lattice), trace, from);
  }
  if (algo == "attractor") {
    return attractor_solve(game, from, 1u << 22, deadline);
  }
  return dfs_solve(game, from, deadline);  // "dfs"
}

// "A..B", "A,B,C" or "A".
std::vector<int> parse_n_spec(const std::string& spec) {
  std::vector<int> ns;
  auto parse_int = [&](const std::string& tok) {
    try {
      std::size_t used = 0;
      int value = std::stoi(tok, &used);
      if (used != tok.size() || value < 1) throw std::invalid_argument(tok);
      return value;
    } catch (const std::exception&) {
      throw InputError("bad scale '" + tok + "' in '" + spec + "'");
    }
  };
  if (std::size_t dots = spec.find(".."); dots != std::string::npos) {
    int lo = parse_int(spec.substr(0, dots));
    int hi = parse_int(spec.substr(dots + 2));
    if (lo > hi) throw InputError("descending range '" + spec + "'");
    for (int n = lo; n <= hi; ++n) ns.push_back(n);
    return ns;
  }
  std::istringstream stream(spec);
  std::string tok;
  while (std::getline(stream, tok, ',')) ns.push_back(parse_int(tok));
  if (ns.empty()) throw InputError("empty scale list");
  return ns;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream stream(text);
  std::string tok;
  while (std::getline(stream, tok, ',')) out.push_back(tok);
  return out;
}

struct CliState {
  // solve
  std::string solve_file, solve_algo = "walt", solve_from;
  double solve_timeout = 0;
  std::size_t solve_lattice_cap = 1u << 20;
  // region
  std::string region_file, region_algo = "walt";
  bool region_trace = false;
  double region_timeout = 0;
  std::size_t region_lattice_cap = 1u << 20;
  // lattice
  std::string lattice_file;
  bool lattice_dump = false;
  double lattice_timeout = 0;
  std::size_t lattice_cap = 1u << 20;
  // kgame
  std::string kgame_file, kgame_from;
  bool kgame_dot = false;
  double kgame_timeout = 0;
  std::size_t kgame_cap = 1u << 22;
  // validate
  std::string validate_file;
  // gen
  std::string gen_family, gen_output;
  int gen_n = 2;
  // qbf solve / gen / game
  std::string qbf_solve_file, qbf_solve_algo = "walt";
  double qbf_solve_timeout = 0;
  int qbf_gen_vars = 3, qbf_gen_clauses = 4, qbf_gen_width = 3;
  std::uint64_t qbf_gen_seed = 1;
  std::string qbf_gen_output;
  std::string qbf_game_file, qbf_game_output;
  // bench
  std::string bench_families, bench_n = "2..4", bench_algos, bench_csv;
  double bench_timeout = 30;
  std::size_t bench_lattice_cap = 1u << 20;
  bool bench_no_times = false;
};

void build_app(CLI::App& app, CliState& s) {
  app.require_subcommand(1);
  const auto game_algos =
      CLI::IsMember({"walt", "wk", "attractor", "dfs"});
  const auto fixpoint_algos = CLI::IsMember({"walt", "wk"});

  CLI::App* solve = app.add_subcommand(
      "solve", "Decide whether the protagonist wins a game");
  solve->add_option("file", s.solve_file, "arena file")->required();
  solve->add_option("--algo", s.solve_algo, "solver")
      ->check(game_algos)
      ->capture_default_str();
  solve->add_option("--from", s.solve_from,
                    "start vertex (default: the declared init)");
  solve->add_option("--timeout", s.solve_timeout, "wall-clock budget, seconds");
  solve->add_option("--lattice-cap", s.solve_lattice_cap,
                    "knowledge family element cap");

  CLI::App* region = app.add_subcommand(
      "region", "Print the winning region as maximal knowledge sets");
  region->add_option("file", s.region_file, "arena file")->required();
  region->add_option("--algo", s.region_algo, "solver")
      ->check(fixpoint_algos)
      ->capture_default_str();
  region->add_flag("--trace", s.region_trace, "print every fixpoint iterate");
  region->add_option("--timeout", s.region_timeout,
                     "wall-clock budget, seconds");
  region->add_option("--lattice-cap", s.region_lattice_cap,
                     "knowledge family element cap");

  CLI::App* lattice = app.add_subcommand(
      "lattice", "Build the knowledge family of an arena");
  lattice->add_option("file", s.lattice_file, "arena file")->required();
  lattice->add_flag("--dump", s.lattice_dump,
                    "print every element with its covers");
  lattice->add_option("--cap", s.lattice_cap, "element cap");
  lattice->add_option("--timeout", s.lattice_timeout,
                      "wall-clock budget, seconds");

  CLI::App* kgame = app.add_subcommand(
      "kgame", "Unfold the explicit knowledge game");
  kgame->add_option("file", s.kgame_file, "arena file")->required();
  kgame->add_flag("--dot", s.kgame_dot, "emit Graphviz instead of a summary");
  kgame->add_option("--from", s.kgame_from,
                    "start vertex (default: the declared init)");
  kgame->add_option("--cap", s.kgame_cap, "node cap");
  kgame->add_option("--timeout", s.kgame_timeout,
                    "wall-clock budget, seconds");

  CLI::App* validate = app.add_subcommand(
      "validate", "Check completeness and report dead ends");
  validate->add_option("file", s.validate_file, "arena file")->required();

  CLI::App* gen = app.add_subcommand(
      "gen", "Emit a synthetic benchmark arena");
  gen->add_option("family", s.gen_family,
                  "one of D-NW-1, D-W-1, ND-NW, D-NW-2, D-W-2")
      ->required();
  gen->add_option("n", s.gen_n, "scale parameter")->required();
  gen->add_option("-o,--output", s.gen_output, "write to a file");

  CLI::App* qbf = app.add_subcommand("qbf", "QBF front-end");
  qbf->require_subcommand(1);
  CLI::App* qbf_solve =
      qbf->add_subcommand("solve", "Decide a QDIMACS formula");
  qbf_solve->add_option("file", s.qbf_solve_file, "QDIMACS file")->required();
  qbf_solve->add_option("--algo", s.qbf_solve_algo, "solver")
      ->check(CLI::IsMember({"walt", "wk", "attractor", "dfs", "brute"}))
      ->capture_default_str();
  qbf_solve->add_option("--timeout", s.qbf_solve_timeout,
                        "wall-clock budget, seconds");
  CLI::App* qbf_gen =
      qbf->add_subcommand("gen", "Emit a random QDIMACS instance");
  qbf_gen->add_option("vars", s.qbf_gen_vars, "number of variables")
      ->required();
  qbf_gen->add_option("clauses", s.qbf_gen_clauses, "number of clauses")
      ->required();
  qbf_gen->add_option("--width", s.qbf_gen_width, "literals per clause")
      ->capture_default_str();
  qbf_gen->add_option("--seed", s.qbf_gen_seed, "RNG seed")
      ->capture_default_str();
  qbf_gen->add_option("-o,--output", s.qbf_gen_output, "write to a file");
  CLI::App* qbf_game = qbf->add_subcommand(
      "game", "Emit the reachability game a formula reduces to");
  qbf_game->add_option("file", s.qbf_game_file, "QDIMACS file")->required();
  qbf_game->add_option("-o,--output", s.qbf_game_output, "write to a file");

  CLI::App* bench = app.add_subcommand(
      "bench", "Run the benchmark families and emit CSV");
  bench->add_option("--families", s.bench_families,
                    "comma-separated families (default: all)");
  bench->add_option("--n", s.bench_n, "scales: A..B or A,B,C")
      ->capture_default_str();
  bench->add_option("--algos", s.bench_algos,
                    "comma-separated subset of walt,wk,dfs,attractor "
                    "(default: all)");
  bench->add_option("--timeout", s.bench_timeout,
                    "per-run budget, seconds")
      ->capture_default_str();
  bench->add_option("--lattice-cap", s.bench_lattice_cap, "element cap");
  bench->add_option("--csv", s.bench_csv, "write the CSV to a file");
  bench->add_flag("--no-times", s.bench_no_times,
                  "blank the timing columns (reproducible output)");
}

int dispatch(const CLI::App& app, CliState& s, std::ostream& out,
             std::ostream& err) {
  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (name == "solve") {
    ReachGame game = load_valid_game(s.solve_file);
    VertexId from = resolve_from(game, s.solve_from);
    Verdict v = solve_with(s.solve_algo, game, from,
                           make_deadline(s.solve_timeout), s.solve_lattice_cap);
    out << to_string(v) << '\n';
    return 0;
  }

  if (name == "region") {
    ReachGame game = load_valid_game(s.region_file);
    Deadline deadline = make_deadline(s.region_timeout);
    SolveOptions opts;
    opts.full_trace = s.region_trace;
    opts.deadline = deadline;
    auto emit = [&](const auto& dom, const auto& trace) {
      if (!s.region_trace) {
        trace.fixpoint().print(dom, game.arena, out);
        return;
      }
      for (std::size_t i = 0; i < trace.iterates.size(); ++i) {
        out << "# W^" << i
            << (i + 1 == trace.iterates.size() ? " (fixpoint)" : "") << '\n';
        trace.iterates[i].print(dom, game.arena, out);
      }
    };
    if (s.region_algo == "wk") {
      Lattice lattice =
          Lattice::build(game.arena, s.region_lattice_cap, deadline);
      emit(LatticeDomain(lattice), solve_lattice(game, lattice, opts));
    } else {
      emit(SetDomain{}, solve_direct(game, opts));
    }
    return 0;
  }

  if (name == "lattice") {
    ReachGame game = load_arena_file(s.lattice_file);
    Lattice lattice = Lattice::build(game.arena, s.lattice_cap,
                                     make_deadline(s.lattice_timeout));
    if (s.lattice_dump) {
      std::ostringstream buf;
      lattice.dump(buf);
      out << buf.str();
    } else {
      out << "size " << lattice.size() << "\nheight " << lattice.height()
          << "\ngenerators " << lattice.num_generators() << '\n';
    }
    return 0;
  }

  if (name == "kgame") {
    ReachGame game = load_arena_file(s.kgame_file);
    VertexId from = resolve_from(game, s.kgame_from);
    KnowledgeGame kg =
        build_knowledge_game(game, from, IntervalSet::universe(), s.kgame_cap,
                             make_deadline(s.kgame_timeout));
    if (s.kgame_dot) {
      out << to_dot(kg, game.arena);
    } else {
      out << "eve nodes " << kg.eve_nodes.size() << "\nadam nodes "
          << kg.adam_nodes.size() << "\nedges " << kg.num_edges() << '\n';
    }
    return 0;
  }

  if (name == "validate") {
    ReachGame game = load_arena_file(s.validate_file);
    std::vector<Diagnostic> diags = validate(game);
    for (const Diagnostic& d : diags) {
      out << (d.level == Diagnostic::Level::kError ? "error: " : "warning: ")
          << d.message << '\n';
    }
    if (!has_errors(diags)) {
      out << "ok\n";
      return 0;
    }
    return 2;
  }

  if (name == "gen") {
    ReachGame game = gen_family(parse_family(s.gen_family), s.gen_n);
    write_output(format_arena(game), s.gen_output, out);
    return 0;
  }

  if (name == "qbf") {
    const CLI::App* qsub = sub->get_subcommands().front();
    const std::string qname = qsub->get_name();
    if (qname == "solve") {
      QbfFormula f = parse_qdimacs(read_file(s.qbf_solve_file));
      bool truth;
      if (s.qbf_solve_algo == "brute") {
        truth = brute_eval(f);
      } else {
        ReachGame game = reduce_to_game(f);
        truth = solve_with(s.qbf_solve_algo, game, game.initial_or_throw(),
                           make_deadline(s.qbf_solve_timeout),
                           1u << 20) == Verdict::kWin;
      }
      out << (truth ? "TRUE" : "FALSE") << '\n';
      return 0;
    }
    if (qname == "gen") {
      QbfFormula f = gen_random_qbf(s.qbf_gen_vars, s.qbf_gen_clauses,
                                    s.qbf_gen_width, s.qbf_gen_seed);
      write_output(format_qdimacs(f), s.qbf_gen_output, out);
      return 0;
    }
    QbfFormula f = parse_qdimacs(read_file(s.qbf_game_file));  // "game"
    write_output(format_arena(reduce_to_game(f)), s.qbf_game_output, out);
    return 0;
  }

  // "bench"
  BenchOptions options;
  if (!s.bench_families.empty()) {
    options.families.clear();
    for (const std::string& tok : split_commas(s.bench_families)) {
      options.families.push_back(parse_family(tok));
    }
  }
  options.ns = parse_n_spec(s.bench_n);
  if (!s.bench_algos.empty()) {
    options.run_direct = options.run_lattice = options.run_dfs =
        options.run_attractor = false;
    for (const std::string& tok : split_commas(s.bench_algos)) {
      if (tok == "walt") {
        options.run_direct = true;
      } else if (tok == "wk") {
        options.run_lattice = true;
      } else if (tok == "dfs") {
        options.run_dfs = true;
      } else if (tok == "attractor") {
        options.run_attractor = true;
      } else {
        throw InputError("unknown algorithm '" + tok +
                         "' (expected walt, wk, dfs or attractor)");
      }
    }
  }
  options.timeout_seconds = s.bench_timeout;
  options.lattice_cap = s.bench_lattice_cap;
  std::vector<BenchRecord> records = run_bench(options, &err);
  std::ostringstream buf;
  write_csv(records, !s.bench_no_times, buf);
  write_output(buf.str(), s.bench_csv, out);
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Antichain solvers for parameterized reachability games"};
  app.name("pargame");
  CliState s;
  build_app(app, s);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return dispatch(app, s, out, err);
  } catch (const TimeoutError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace pargame
