#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <bit>
#include <random>

#include "doctest.h"
#include "hdg/covergame.hpp"
#include "hdg/errors.hpp"
#include "hdg/generators.hpp"
#include "hdg/solver.hpp"
#include "hdg/verify.hpp"

using namespace hdg;
using game::Player;
using game::Variant;

namespace {

Hypergraph single_edge() { return Hypergraph::from_edge_lists(3, {{0, 1, 2}}); }

Hypergraph prop35() {
  return Hypergraph::from_edge_lists(
      9, {{0, 1, 2}, {3, 4, 5}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
}

// independent oracle: smallest dominating set by subset enumeration over the
// hypergraph definition, no CoverSystem involved
int brute_force_gamma(const Hypergraph& h) {
  const int n = h.vertex_count();
  for (int size = 0; size <= n; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      VertexSet dominated;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) dominated |= h.closed_neighborhood(v);
      }
      if (dominated == VertexSet::full(n)) return size;
    }
  }
  return n;
}

// independent oracle: smallest hitting set by subset enumeration
int brute_force_tau(const Hypergraph& h) {
  const int n = h.vertex_count();
  for (int size = 0; size <= n; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      VertexSet t;
      for (int v = 0; v < n; ++v) {
        if (mask >> v & 1) t.add(v);
      }
      bool hits_all = true;
      for (int i = 0; i < h.edge_count(); ++i) {
        if (!h.edge(i).intersects(t)) hits_all = false;
      }
      if (hits_all) return size;
    }
  }
  return n;
}

}  // namespace

TEST_CASE("paper instance values") {
  CHECK(solver::gamma_g(prop35()).length == 4);
  CHECK(solver::gamma_g_prime(prop35()).length == 4);
  CHECK(solver::gamma_g(single_edge()).length == 1);

  const game::CoverSystem sys = game::build(prop35(), Variant::Domination);
  CHECK(solver::naive_solve(sys, game::initial_state(sys, Player::Dominator)).length == 4);
}

TEST_CASE("memoized equals naive on every 3-uniform edge subset with n <= 4") {
  for (int n = 3; n <= 4; ++n) {
    // all k-subsets
    std::vector<std::vector<int>> triples;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
      }
    }
    const int m = static_cast<int>(triples.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<std::vector<int>> edges;
      for (int i = 0; i < m; ++i) {
        if (mask >> i & 1) edges.push_back(triples[i]);
      }
      const Hypergraph h = Hypergraph::from_edge_lists(n, edges);
      for (Variant var : {Variant::Domination, Variant::Transversal}) {
        const game::CoverSystem sys = game::build(h, var);
        for (Player p : {Player::Dominator, Player::Staller}) {
          const game::GameState s = game::initial_state(sys, p);
          CHECK(solver::solve(sys, s).length == solver::naive_solve(sys, s).length);
        }
      }
    }
  }
}

TEST_CASE("memoized equals naive on random instances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);  // 4..10
    const Hypergraph h = verify::random_general_hypergraph(
        n, 2 + static_cast<int>(rng() % n), rng(), false);
    const Variant var = trial % 2 == 0 ? Variant::Domination : Variant::Transversal;
    const game::CoverSystem sys = game::build(h, var);
    if (sys.universe_size > 12) continue;
    const Player p = trial % 4 < 2 ? Player::Dominator : Player::Staller;
    const game::GameState s = game::initial_state(sys, p);
    const solver::GameValue fast = solver::solve(sys, s);
    const solver::GameValue slow = solver::naive_solve(sys, s);
    CHECK(fast.length == slow.length);
    CHECK(fast.best_move == slow.best_move);
  }
}

TEST_CASE("optimality recursion holds at sampled states") {
  std::mt19937_64 rng(21);
  const Hypergraph h = generators::gen_random_uniform(9, 6, 3, 5, true);
  const game::CoverSystem sys = game::build(h, Variant::Domination);
  for (int trial = 0; trial < 40; ++trial) {
    // random reachable state
    game::GameState s = game::initial_state(sys, Player::Dominator);
    const int steps = static_cast<int>(rng() % 4);
    for (int i = 0; i < steps && !game::is_terminal(sys, s); ++i) {
      const auto moves = game::legal_moves(sys, s);
      s = game::apply_move(sys, s, moves[rng() % moves.size()]);
    }
    if (game::is_terminal(sys, s)) continue;
    const int value = solver::solve(sys, s).length;
    int best = s.to_move == Player::Dominator ? 1 << 20 : -1;
    for (int v : game::legal_moves(sys, s)) {
      const int child = solver::solve(sys, game::apply_move(sys, s, v)).length;
      best = s.to_move == Player::Dominator ? std::min(best, 1 + child)
                                            : std::max(best, 1 + child);
    }
    CHECK(value == best);
  }
}

TEST_CASE("grid family values") {
  CHECK(solver::gamma_g(generators::gen_hk1(2)).length == 2);
  CHECK(solver::gamma_g(generators::gen_hk1(3)).length == 4);
  CHECK(solver::gamma_g(generators::gen_hk1(4)).length == 5);
}

TEST_CASE("pendant construction values") {
  for (int k : {3, 4, 5}) {
    CHECK(solver::gamma_g(generators::gen_hk2(k)).length == 3);
    CHECK(solver::gamma_g_prime(generators::gen_hk2(k)).length == 3);
  }
}

TEST_CASE("equivalence of the three game numbers on seeded instances") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Hypergraph h = verify::random_general_hypergraph(
        n, 1 + static_cast<int>(rng() % n), rng(), false);
    const int a = solver::gamma_g(h).length;
    CHECK(a == solver::gamma_g(two_section(h)).length);
    CHECK(a == solver::tau_g(cnh(h)).length);
  }
}

TEST_CASE("residual game seeding") {
  const Hypergraph h = prop35();
  CHECK(solver::gamma_g_given(h, VertexSet::full(9), Player::Dominator).length == 0);
  CHECK(solver::gamma_g_given(h, VertexSet(), Player::Dominator).length ==
        solver::gamma_g(h).length);
  CHECK_THROWS_AS(solver::gamma_g_given(h, VertexSet::single(12), Player::Dominator),
                  InputError);

  // continuation principle on random nested pairs
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph g = verify::random_general_hypergraph(
        6 + static_cast<int>(rng() % 4), 4, rng(), false);
    VertexSet b_set;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (rng() & 1) b_set.add(v);
    }
    VertexSet a_set;
    for (int v : b_set) {
      if (rng() & 1) a_set.add(v);
    }
    for (Player p : {Player::Dominator, Player::Staller}) {
      CHECK(solver::gamma_g_given(g, a_set, p).length >=
            solver::gamma_g_given(g, b_set, p).length);
    }
  }
}

TEST_CASE("dominator-start and staller-start values differ by at most one") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Hypergraph h = verify::random_general_hypergraph(
        4 + static_cast<int>(rng() % 7), 3 + static_cast<int>(rng() % 4), rng(), false);
    const int d = solver::gamma_g(h).length;
    const int s = solver::gamma_g_prime(h).length;
    CHECK(std::abs(d - s) <= 1);
  }
}

TEST_CASE("static numbers against the brute-force oracles") {
  CHECK(solver::gamma(single_edge()) == 1);
  CHECK(solver::gamma(prop35()) == brute_force_gamma(prop35()));

  // gamma <= gamma_g <= 2 gamma - 1 on the paper instance
  const int g = solver::gamma(prop35());
  CHECK(g <= 4);
  CHECK(4 <= 2 * g - 1);

  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Hypergraph h = verify::random_general_hypergraph(
        n, 1 + static_cast<int>(rng() % n), rng(), false);
    CHECK(solver::gamma(h) == brute_force_gamma(h));
    CHECK(solver::tau(cnh(h)) == brute_force_tau(cnh(h)));

    const int gg = solver::gamma_g(h).length;
    const int gh = solver::gamma(h);
    CHECK(gh <= gg);
    CHECK(gg <= 2 * gh - 1);

    const Hypergraph f = cnh(h);
    const int tf = solver::tau(f);
    const int tgf = solver::tau_g(f).length;
    CHECK(tf <= tgf);
    CHECK(tgf <= 2 * tf - 1);
  }
}

TEST_CASE("total domination") {
  CHECK(solver::gamma_tg(single_edge()).length == 2);
  CHECK(solver::gamma_t(single_edge()) == 2);
  const Hypergraph iso = Hypergraph::from_edge_lists(3, {{0, 1}});
  CHECK_THROWS_AS(solver::gamma_tg(iso), PreconditionError);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h;
    try {
      h = generators::gen_random_uniform(4 + static_cast<int>(rng() % 5), 4, 2, rng(), true);
    } catch (const InputError&) {
      continue;
    }
    const game::CoverSystem sys = game::build(h, Variant::TotalDomination);
    const game::GameState s = game::initial_state(sys, Player::Dominator);
    CHECK(solver::solve(sys, s).length == solver::naive_solve(sys, s).length);
  }
}

TEST_CASE("determinism and tie-break of best_move") {
  const Hypergraph h = prop35();
  const game::CoverSystem sys = game::build(h, Variant::Domination);
  const game::GameState s = game::initial_state(sys, Player::Dominator);
  const solver::GameValue a = solver::solve(sys, s);
  const solver::GameValue b = solver::solve(sys, s);
  REQUIRE(a.best_move.has_value());
  CHECK(a.best_move == b.best_move);
  // no smaller-index vertex achieves the optimum
  for (int v = 0; v < *a.best_move; ++v) {
    if (!game::is_legal(sys, s, v)) continue;
    CHECK(1 + solver::solve(sys, game::apply_move(sys, s, v)).length > a.length);
  }

  const solver::SolvedLine line = solver::solve_line(sys, s);
  CHECK(line.value.length == a.length);
  CHECK(static_cast<int>(line.line.size()) == a.length);
  // the line replays legally to a terminal state
  game::GameState replay = game::initial_state(sys, Player::Dominator);
  for (int v : line.line) replay = game::apply_move(sys, replay, v);
  CHECK(game::is_terminal(sys, replay));
}

TEST_CASE("terminal state solves to zero") {
  const game::CoverSystem sys = game::build(single_edge(), Variant::Domination);
  const game::GameState done =
      game::initial_state(sys, Player::Dominator, VertexSet::full(3));
  const solver::GameValue v = solver::solve(sys, done);
  CHECK(v.length == 0);
  CHECK_FALSE(v.best_move.has_value());
}
