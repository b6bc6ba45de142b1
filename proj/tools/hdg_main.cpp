// hdg: command-line front end. Subcommands: solve, generate, play, verify,
// tournament. Exit codes: 0 success, 1 check failure, 2 input error,
// 3 precondition error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hdg/covergame.hpp"
#include "hdg/errors.hpp"
#include "hdg/generators.hpp"
#include "hdg/hypergraph.hpp"
#include "hdg/solver.hpp"
#include "hdg/strategies.hpp"
#include "hdg/verify.hpp"

namespace {

using namespace hdg;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPreconditionError = 3;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HDG_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw InputError("HDG_SEED is not an unsigned integer");
    }
  }
  return 0;
}

std::string join_moves(const std::vector<int>& moves) {
  std::string out;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(moves[i]);
  }
  return out;
}

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet s;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (...) {
      throw InputError("bad vertex token '" + tok + "'");
    }
    if (v < 0 || v >= n) {
      throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                       std::to_string(n - 1));
    }
    s.add(v);
  }
  return s;
}

// --- solve -------------------------------------------------------------------

struct SolveOpts {
  std::string input;
  std::string variant = "dom";
  bool both_starts = false;
  std::string first = "dominator";
  std::string given;
  bool all = false;
  bool want_gamma_g = false, want_gamma_g_prime = false;
  bool want_tau_g = false, want_tau_g_prime = false, want_gamma_tg = false;
  bool want_gamma = false, want_tau = false, want_gamma_t = false;
  bool line = true;
};

int run_solve(const SolveOpts& o) {
  const Hypergraph h = load_hg(o.input);
  std::vector<std::string> parts;

  if (!o.given.empty()) {
    const VertexSet s = parse_vertex_list(o.given, h.vertex_count());
    const game::Player first = o.first == "staller" ? game::Player::Staller
                                                    : game::Player::Dominator;
    const solver::GameValue v = solver::gamma_g_given(h, s, first);
    std::cout << "gamma_g_given=" << v.length << " S=" << o.given
              << " first=" << o.first << "\n";
    return kExitOk;
  }

  bool want_gg = o.want_gamma_g || o.all;
  bool want_ggp = o.want_gamma_g_prime || o.both_starts || o.all;
  if (o.variant == "dom" && !o.all && !o.want_tau_g && !o.want_tau_g_prime &&
      !o.want_gamma_tg && !o.want_gamma && !o.want_tau && !o.want_gamma_t) {
    want_gg = true;
  }
  if (o.variant == "transversal") {
    want_gg = false;
    want_ggp = false;
  }

  if (want_gg) parts.push_back("gamma_g=" + std::to_string(solver::gamma_g(h).length));
  if (want_ggp) parts.push_back("gamma_g'=" + std::to_string(solver::gamma_g_prime(h).length));
  if (o.want_tau_g || o.all || o.variant == "transversal") {
    parts.push_back("tau_g=" + std::to_string(solver::tau_g(h).length));
  }
  if (o.want_tau_g_prime || o.all || (o.variant == "transversal" && o.both_starts)) {
    parts.push_back("tau_g'=" + std::to_string(solver::tau_g_prime(h).length));
  }
  if (o.want_gamma_tg || o.all || o.variant == "total") {
    parts.push_back("gamma_tg=" + std::to_string(solver::gamma_tg(h).length));
  }
  if (o.want_gamma || o.all) parts.push_back("gamma=" + std::to_string(solver::gamma(h)));
  if (o.want_tau || o.all) parts.push_back("tau=" + std::to_string(solver::tau(h)));
  if (o.want_gamma_t || o.all) parts.push_back("gamma_t=" + std::to_string(solver::gamma_t(h)));

  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::cout << parts[i] << (i + 1 < parts.size() ? " " : "\n");
  }

  if (o.line) {
    const game::Variant variant = o.variant == "transversal" ? game::Variant::Transversal
                                  : o.variant == "total" ? game::Variant::TotalDomination
                                                         : game::Variant::Domination;
    const game::Player first = o.first == "staller" ? game::Player::Staller
                                                    : game::Player::Dominator;
    const game::CoverSystem sys = game::build(h, variant);
    const solver::SolvedLine sl = solver::solve_line(sys, game::initial_state(sys, first));
    std::cout << "optimal_line=" << join_moves(sl.line) << "\n";
    std::cout << "memo_hits=" << sl.stats.memo_hits
              << " memo_misses=" << sl.stats.memo_misses << "\n";
  }
  return kExitOk;
}

// --- generate ----------------------------------------------------------------

struct GenerateOpts {
  std::string family;
  int k = 3;
  int t = 3;
  int n = 9;
  int m = 5;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool isolate_free = false;
  std::string log_base = "natural";
  std::string f_input;
  std::string out;
};

int run_generate(const GenerateOpts& o) {
  const std::uint64_t seed = o.seed_given ? o.seed : default_seed();
  Hypergraph h;
  std::vector<std::string> comments;

  if (o.family == "hk1") {
    h = generators::gen_hk1(o.k);
    comments.push_back("genspec: family=hk1 k=" + std::to_string(o.k));
  } else if (o.family == "hk2") {
    h = generators::gen_hk2(o.k);
    comments.push_back("genspec: family=hk2 k=" + std::to_string(o.k));
  } else if (o.family == "fcomp") {
    Hypergraph f = o.f_input.empty() ? generators::default_f(o.t, o.k)
                                     : load_hg(o.f_input);
    h = generators::gen_f_composition(f, o.k);
    comments.push_back("genspec: family=fcomp k=" + std::to_string(o.k) +
                       " t=" + std::to_string(f.vertex_count()) +
                       (o.f_input.empty() ? " f=default" : " f=" + o.f_input));
  } else if (o.family == "alon") {
    const generators::LogBase base = o.log_base == "two" ? generators::LogBase::Two
                                                         : generators::LogBase::Natural;
    const generators::AlonInstance inst = generators::gen_alon(o.k, seed, base);
    h = inst.h;
    comments.push_back("genspec: family=alon k=" + std::to_string(o.k) +
                       " seed=" + std::to_string(seed) + " log=" + o.log_base);
    comments.push_back("core: 0.." + std::to_string(inst.core_size - 1));
    for (std::size_t i = 0; i < inst.pendants.size(); ++i) {
      comments.push_back("pendant: edge=" + std::to_string(i) +
                         " vertex=" + std::to_string(inst.pendants[i]));
    }
  } else if (o.family == "random") {
    h = generators::gen_random_uniform(o.n, o.m, o.k, seed, o.isolate_free);
    comments.push_back("genspec: family=random n=" + std::to_string(o.n) +
                       " m=" + std::to_string(o.m) + " k=" + std::to_string(o.k) +
                       " seed=" + std::to_string(seed) +
                       " isolate_free=" + (o.isolate_free ? "1" : "0"));
  } else {
    throw InputError("unknown family '" + o.family + "'");
  }

  if (o.out.empty()) {
    for (const std::string& c : comments) std::cout << "# " << c << "\n";
    std::cout << serialize_hg(h);
  } else {
    save_hg(h, o.out, comments);
  }
  return kExitOk;
}

// --- play --------------------------------------------------------------------

struct PlayOpts {
  std::string input;
  std::string engine = "optimal";
  std::string human = "staller";
  std::string first = "dominator";
};

void print_colors(const strategies::ResidualView& view) {
  std::cout << "colors:";
  for (int v = 0; v < view.n; ++v) {
    const char c = view.color[static_cast<std::size_t>(v)] == strategies::Color::White ? 'W'
                   : view.color[static_cast<std::size_t>(v)] == strategies::Color::Blue ? 'B'
                                                                                        : 'R';
    std::cout << " " << v << ":" << c;
  }
  std::cout << "\n";
}

int run_play(const PlayOpts& o) {
  const Hypergraph h = load_hg(o.input);
  const game::CoverSystem sys = game::build(h, game::Variant::Domination);
  const game::Player human = o.human == "dominator" ? game::Player::Dominator
                                                    : game::Player::Staller;
  const game::Player first = o.first == "staller" ? game::Player::Staller
                                                  : game::Player::Dominator;
  game::GameState state = game::initial_state(sys, first);

  const Hypergraph gstar = two_section(h);
  ValidationChecks vc;
  vc.g23 = true;
  vc.every_vertex_in_triangle = true;
  const bool machinery = validate(gstar, vc).ok();
  const std::vector<VertexSet> adj = gstar.adjacency();

  strategies::WeightState ws;
  strategies::ResidualView view;
  if (machinery) view = strategies::compute_residual(gstar, VertexSet());

  const strategies::Strategy engine = o.engine == "greedy"
                                          ? strategies::greedy_dominator()
                                          : strategies::optimal_strategy();
  if (engine.needs_residual && !machinery) {
    throw PreconditionError("greedy engine needs a triangle-covered 2-section");
  }

  std::cout << "playing the domination game on " << o.input << " (n="
            << h.vertex_count() << "); you are " << game::to_string(human)
            << ", engine is " << engine.name << "\n";

  int turn = 0;
  while (!game::is_terminal(sys, state)) {
    if (machinery) {
      if (state.to_move == game::Player::Dominator && ws.phase == 1 &&
          !strategies::detect_phase(view)) {
        ws.phase = 2;
        ws.i_star = turn;
        ws.blue_at_boundary = view.blues;
      }
      print_colors(view);
    }
    int v = -1;
    if (state.to_move == human) {
      std::cout << "your move (vertex or 'quit'): " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line) || line == "quit") {
        std::cout << "\ntranscript complete after " << turn << " turns\n";
        return kExitOk;
      }
      try {
        v = std::stoi(line);
      } catch (...) {
        std::cout << "not a vertex: '" << line << "'\n";
        continue;
      }
      if (!game::is_legal(sys, state, v)) {
        if (v >= 0 && v < sys.mover_count()) {
          std::cout << "illegal: vertex " << v
                    << " covers nothing new (covers[v] \\ covered is empty)\n";
        } else {
          std::cout << "illegal: vertex " << v << " out of range\n";
        }
        continue;
      }
    } else {
      strategies::StrategyContext ctx{&view, &ws};
      v = engine.choose(sys, state, machinery ? &ctx : nullptr);
      std::cout << "engine plays " << v << "\n";
    }
    state = game::apply_move(sys, state, v);
    ++turn;
    std::cout << "turn " << turn << ": " << game::to_string(game::other(state.to_move))
              << " played " << v << ", covered " << state.covered.count() << "/"
              << sys.universe_size << "\n";
    if (machinery) {
      // recomputed from scratch after each move
      view = strategies::compute_residual(gstar, state.played);
    }
  }
  std::cout << "game over, total length = " << turn << "\n";
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int n_max = 10;
  int count = 200;
  std::string out;
  int budget = 2000;
};

int run_verify(const VerifyOpts& o) {
  const std::uint64_t seed = o.seed_given ? o.seed : default_seed();
  std::vector<verify::CheckResult> results;

  const bool all = o.suite == "all";
  if (all || o.suite == "equivalence") {
    auto r = verify::suite_equivalence(o.count, o.n_max, seed);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (all || o.suite == "legal-sequences") {
    auto r = verify::suite_legal_sequences(std::min(o.count, 50), seed + 1);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (all || o.suite == "continuation") {
    auto r = verify::suite_continuation(50, std::max(1, o.count / 50), o.n_max, seed + 2);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (all || o.suite == "bounds-exhaustive") {
    auto r = verify::suite_bounds_exhaustive(std::min(o.n_max, 6));
    results.insert(results.end(), r.begin(), r.end());
  }
  if (all || o.suite == "bounds") {
    auto r = verify::suite_bounds_random(o.count, std::min(o.n_max + 2, 12), seed + 3);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (all || o.suite == "audit") {
    auto r = verify::suite_audit(10, std::min(o.n_max + 4, 14),
                                 std::min(o.count, 100), std::min(o.n_max + 8, 18),
                                 seed + 4);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (o.suite == "extremal") {
    const verify::ExtremalResult res = verify::extremal_search(
        o.n_max, 3, o.n_max <= 7 ? verify::ScanMode::Exhaustive : verify::ScanMode::Random,
        static_cast<std::uint64_t>(o.budget), seed);
    std::cout << "best_ratio=" << res.best_ratio << " scanned=" << res.scanned
              << " complete=" << (res.complete ? 1 : 0) << " witness="
              << res.witness_provenance << "\n";
    std::cout << serialize_hg(res.witness);
    return kExitOk;
  }
  if (results.empty()) throw InputError("unknown suite '" + o.suite + "'");

  int passed = 0, failed = 0, skipped = 0;
  for (const verify::CheckResult& r : results) {
    if (r.verdict == verify::Verdict::Pass) ++passed;
    if (r.verdict == verify::Verdict::Fail) {
      ++failed;
      std::cout << "FAIL " << r.id << " [" << r.provenance << "] " << r.values
                << " witness: " << r.witness << "\n";
    }
    if (r.verdict == verify::Verdict::Skip) ++skipped;
  }
  std::cout << "suite=" << o.suite << " seed=" << seed << " checks="
            << results.size() << " pass=" << passed << " fail=" << failed
            << " skip=" << skipped << "\n";

  if (!o.out.empty()) {
    std::ofstream csv(o.out);
    if (!csv) throw InputError("cannot write " + o.out);
    csv << verify::csv_header() << "\n";
    for (const verify::CheckResult& r : results) csv << verify::csv_row(r) << "\n";
  }
  return failed == 0 ? kExitOk : kExitCheckFailure;
}

// --- tournament ----------------------------------------------------------------

struct TournamentOpts {
  std::vector<std::string> inputs;
  std::string dom = "greedy";
  std::string stall = "random,greedy-min";
  std::string first = "dominator";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out;
};

strategies::Strategy make_staller(const std::string& name, const Hypergraph& h,
                                  std::uint64_t seed) {
  if (name == "random") return strategies::staller_random(seed);
  if (name == "optimal") return strategies::staller_optimal();
  if (name == "greedy-min") return strategies::staller_greedy_min();
  if (name == "pendant") return strategies::staller_pendant(h);
  if (name == "grid") {
    int k = 2;
    while (k * k < h.vertex_count()) ++k;
    if (k * k != h.vertex_count()) {
      throw InputError("grid staller: vertex count is not a square");
    }
    return strategies::staller_grid(k);
  }
  throw InputError("unknown staller '" + name + "'");
}

int run_tournament(const TournamentOpts& o) {
  if (o.inputs.empty()) throw InputError("tournament: empty instance set");
  const std::uint64_t seed = o.seed_given ? o.seed : default_seed();

  std::vector<std::string> stallers;
  {
    std::stringstream ss(o.stall);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty()) stallers.push_back(tok);
    }
  }
  if (stallers.empty()) throw InputError("tournament: no stallers selected");

  std::ostringstream csv;
  csv << "instance,n,dominator,staller,first,length,bound_5n9,within_bound,audit\n";
  bool any_fail = false;

  for (const std::string& path : o.inputs) {
    const Hypergraph h = load_hg(path);
    for (const std::string& sname : stallers) {
      const strategies::Strategy dom = o.dom == "optimal"
                                           ? strategies::optimal_strategy()
                                           : strategies::greedy_dominator();
      const strategies::Strategy stall = make_staller(sname, h, seed);
      const game::Player first = o.first == "staller" ? game::Player::Staller
                                                      : game::Player::Dominator;
      const strategies::Playout p = strategies::playout(h, dom, stall, first);
      const int n = h.vertex_count();
      const int bound = 5 * n / 9;
      std::string audit = "-";
      if (p.has_weights && dom.name == "greedy") {
        const strategies::AuditReport rep = strategies::audit_lemmas(p);
        audit = rep.all_pass ? "pass" : "fail";
        if (!rep.all_pass) any_fail = true;
      }
      const bool within = p.length() <= bound;
      if (p.has_weights && dom.name == "greedy" && !within) any_fail = true;
      csv << path << "," << n << "," << dom.name << "," << sname << ","
          << game::to_string(first) << "," << p.length() << "," << bound << ","
          << (within ? 1 : 0) << "," << audit << "\n";
    }
  }

  if (o.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw InputError("cannot write " + o.out);
    f << csv.str();
    std::cout << "wrote " << o.out << "\n";
  }
  return any_fail ? kExitCheckFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver and strategy laboratory for domination-style games on hypergraphs"};
  app.require_subcommand(1);

  SolveOpts so;
  CLI::App* solve = app.add_subcommand("solve", "compute game values of a .hg instance");
  solve->add_option("input", so.input, "instance file (.hg)")->required();
  solve->add_option("--variant", so.variant, "dom|total|transversal")
      ->check(CLI::IsMember({"dom", "total", "transversal"}));
  solve->add_flag("--both-starts", so.both_starts, "also report the Staller-start value");
  solve->add_option("--first", so.first, "dominator|staller")
      ->check(CLI::IsMember({"dominator", "staller"}));
  solve->add_option("--given", so.given, "comma-separated vertices already dominated");
  solve->add_flag("--all", so.all, "report every game and static number");
  solve->add_flag("--gamma-g", so.want_gamma_g);
  solve->add_flag("--gamma-g-prime", so.want_gamma_g_prime);
  solve->add_flag("--tau-g", so.want_tau_g);
  solve->add_flag("--tau-g-prime", so.want_tau_g_prime);
  solve->add_flag("--gamma-tg", so.want_gamma_tg);
  solve->add_flag("--gamma", so.want_gamma);
  solve->add_flag("--tau", so.want_tau);
  solve->add_flag("--gamma-t", so.want_gamma_t);
  solve->add_flag("!--no-line", so.line, "suppress the optimal line of play");

  GenerateOpts go;
  CLI::App* gen = app.add_subcommand("generate", "emit an instance family as .hg");
  gen->add_option("--family", go.family, "hk1|hk2|fcomp|alon|random")->required();
  gen->add_option("--k", go.k, "uniformity parameter");
  gen->add_option("--t", go.t, "number of copies for fcomp's default F");
  gen->add_option("--f-input", go.f_input, "explicit F for fcomp (.hg)");
  gen->add_option("--n", go.n, "vertex count (random)");
  gen->add_option("--m", go.m, "edge count (random)");
  gen->add_option("--seed", go.seed)->each([&go](const std::string&) { go.seed_given = true; });
  gen->add_flag("--isolate-free", go.isolate_free, "resample until isolate-free (random)");
  gen->add_option("--log-base", go.log_base, "natural|two (alon core size)")
      ->check(CLI::IsMember({"natural", "two"}));
  gen->add_option("--out", go.out, "output path (stdout when omitted)");

  PlayOpts po;
  CLI::App* play = app.add_subcommand("play", "interactive game against an engine");
  play->add_option("input", po.input, "instance file (.hg)")->required();
  play->add_option("--engine", po.engine, "optimal|greedy")
      ->check(CLI::IsMember({"optimal", "greedy"}));
  play->add_option("--human", po.human, "dominator|staller")
      ->check(CLI::IsMember({"dominator", "staller"}));
  play->add_option("--first", po.first, "dominator|staller")
      ->check(CLI::IsMember({"dominator", "staller"}));

  VerifyOpts vo;
  CLI::App* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", vo.suite,
                  "all|equivalence|legal-sequences|continuation|bounds|"
                  "bounds-exhaustive|audit|extremal");
  ver->add_option("--seed", vo.seed)->each([&vo](const std::string&) { vo.seed_given = true; });
  ver->add_option("--n-max", vo.n_max, "instance size ceiling");
  ver->add_option("--count", vo.count, "instances per randomized suite");
  ver->add_option("--budget", vo.budget, "extremal scan budget");
  ver->add_option("--out", vo.out, "CSV report path");

  TournamentOpts to;
  CLI::App* tour = app.add_subcommand("tournament", "cross-play strategies over instances");
  tour->add_option("inputs", to.inputs, "instance files (.hg)");
  tour->add_option("--dom", to.dom, "greedy|optimal")
      ->check(CLI::IsMember({"greedy", "optimal"}));
  tour->add_option("--stall", to.stall, "comma list: random,optimal,greedy-min,pendant,grid");
  tour->add_option("--first", to.first, "dominator|staller")
      ->check(CLI::IsMember({"dominator", "staller"}));
  tour->add_option("--seed", to.seed)->each([&to](const std::string&) { to.seed_given = true; });
  tour->add_option("--out", to.out, "CSV report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) return run_solve(so);
    if (gen->parsed()) return run_generate(go);
    if (play->parsed()) return run_play(po);
    if (ver->parsed()) return run_verify(vo);
    if (tour->parsed()) return run_tournament(to);
  } catch (const PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPreconditionError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitInputError;
}
