#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "hdg/covergame.hpp"
#include "hdg/errors.hpp"
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

}  // namespace

TEST_CASE("build per variant") {
  const game::CoverSystem dom = game::build(single_edge(), Variant::Domination);
  CHECK(dom.universe_size == 3);
  for (int v = 0; v < 3; ++v) CHECK(dom.covers[v] == VertexSet::full(3));

  const game::CoverSystem tot = game::build(single_edge(), Variant::TotalDomination);
  CHECK(tot.covers[0] == (VertexSet::single(1) | VertexSet::single(2)));

  const game::CoverSystem tr = game::build(prop35(), Variant::Transversal);
  CHECK(tr.universe_size == 5);
  CHECK(tr.covers[0] == (VertexSet::single(0) | VertexSet::single(2)));

  // isolated vertex makes the total-domination game unsatisfiable
  const Hypergraph iso = Hypergraph::from_edge_lists(3, {{0, 1}});
  CHECK_THROWS_AS(game::build(iso, Variant::TotalDomination), PreconditionError);
  CHECK_NOTHROW(game::build(iso, Variant::Domination));
}

TEST_CASE("legal moves") {
  const game::CoverSystem se = game::build(single_edge(), Variant::Domination);
  CHECK(game::legal_moves(se, game::initial_state(se, Player::Dominator)) ==
        std::vector<int>{0, 1, 2});

  const game::CoverSystem sys = game::build(prop35(), Variant::Domination);
  game::GameState s = game::initial_state(sys, Player::Dominator);
  s = game::apply_move(sys, s, 0);
  // covered = {0,1,2,3,6}; legal iff N[v] not inside it (checked by hand
  // against the edge list)
  CHECK(game::legal_moves(sys, s) == std::vector<int>{1, 2, 3, 4, 5, 7, 8});

  const game::GameState done =
      game::initial_state(sys, Player::Dominator, VertexSet::full(9));
  CHECK(game::legal_moves(sys, done).empty());
  CHECK(game::is_terminal(sys, done));
  CHECK(done.history.empty());
}

TEST_CASE("apply_move") {
  const game::CoverSystem sys = game::build(single_edge(), Variant::Domination);
  game::GameState s = game::initial_state(sys, Player::Dominator);
  s = game::apply_move(sys, s, 1);
  CHECK(game::is_terminal(sys, s));
  CHECK(s.covered == VertexSet::full(3));
  CHECK(s.to_move == Player::Staller);

  CHECK_THROWS_AS(game::apply_move(sys, s, 1), IllegalMoveError);
  CHECK_THROWS_AS(game::apply_move(sys, s, 7), IllegalMoveError);
}

TEST_CASE("seeded states") {
  const game::CoverSystem sys = game::build(prop35(), Variant::Domination);
  CHECK_FALSE(game::is_terminal(sys, game::initial_state(sys, Player::Dominator)));
  CHECK(game::is_terminal(
      sys, game::initial_state(sys, Player::Dominator, VertexSet::full(9))));
  CHECK_THROWS_AS(
      game::initial_state(sys, Player::Dominator, VertexSet::single(10)),
      InputError);
}

TEST_CASE("legal sequence equivalence across the three systems, exhaustive n <= 5") {
  const std::vector<Hypergraph> named{
      single_edge(),
      Hypergraph::from_edge_lists(4, {{0, 1}, {1, 2}, {2, 3}}),
      Hypergraph::from_edge_lists(5, {{0, 1, 2, 3, 4}}),
      Hypergraph::from_edge_lists(5, {{0, 1, 2}, {2, 3, 4}, {0, 4}}),
  };
  for (const Hypergraph& h : named) {
    const verify::CheckResult r =
        verify::check_legal_sequence_equivalence(h, "named");
    CHECK(r.verdict == verify::Verdict::Pass);
  }
  const auto suite = verify::suite_legal_sequences(40, 7);
  for (const auto& r : suite) CHECK(r.verdict == verify::Verdict::Pass);
}

TEST_CASE("random playouts: equivalent legality, monotone coverage, terminal history covers") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);  // 4..12
    const Hypergraph h = verify::random_general_hypergraph(
        n, 2 + static_cast<int>(rng() % 6), rng(), false);
    const game::CoverSystem a = game::build(h, Variant::Domination);
    const game::CoverSystem b = game::build(two_section(h), Variant::Domination);
    const game::CoverSystem c = game::build(cnh(h), Variant::Transversal);

    game::GameState sa = game::initial_state(a, Player::Dominator);
    game::GameState sb = game::initial_state(b, Player::Dominator);
    game::GameState sc = game::initial_state(c, Player::Dominator);
    int prev_covered = 0;
    while (!game::is_terminal(a, sa)) {
      const std::vector<int> la = game::legal_moves(a, sa);
      CHECK(la == game::legal_moves(b, sb));
      CHECK(la == game::legal_moves(c, sc));
      REQUIRE_FALSE(la.empty());
      const int v = la[rng() % la.size()];
      sa = game::apply_move(a, sa, v);
      sb = game::apply_move(b, sb, v);
      sc = game::apply_move(c, sc, v);
      CHECK(sa.covered.count() > prev_covered);
      prev_covered = sa.covered.count();
      CHECK(static_cast<int>(sa.history.size()) <= a.universe_size);
    }
    CHECK(game::is_terminal(b, sb));
    CHECK(game::is_terminal(c, sc));

    // the played set dominates every vertex, straight from the definition
    for (int v = 0; v < n; ++v) {
      bool dominated = false;
      for (int u : sa.played) {
        if (h.closed_neighborhood(u).contains(v)) dominated = true;
      }
      CHECK(dominated);
    }
    // and hits every edge of the closed neighborhood hypergraph
    const Hypergraph f = cnh(h);
    for (int i = 0; i < f.edge_count(); ++i) {
      CHECK(f.edge(i).intersects(sc.played));
    }
  }
}
