#pragma once

// One state machine for all three vertex-selection games. A move covers a
// subset of an abstract universe, a legal move must cover something new, and
// the game ends once the whole universe is covered:
//
//   domination        universe = vertices, playing v covers N[v]
//   total-domination  universe = vertices, playing v covers N(v)
//   transversal       universe = edges,    playing v covers the edges with v
//
// Future play depends only on (covered, to_move), which is what makes the
// solver's transposition table sound.

#include <string>
#include <vector>

#include "hdg/hypergraph.hpp"
#include "hdg/vertex_set.hpp"

namespace hdg::game {

enum class Player { Dominator, Staller };
enum class Variant { Domination, TotalDomination, Transversal };

inline Player other(Player p) {
  return p == Player::Dominator ? Player::Staller : Player::Dominator;
}

std::string to_string(Player p);
std::string to_string(Variant v);

struct CoverSystem {
  Variant variant = Variant::Domination;
  int universe_size = 0;
  VertexSet universe_mask;
  std::vector<VertexSet> covers;  // one entry per playable vertex
  Hypergraph origin;

  int mover_count() const { return static_cast<int>(covers.size()); }
};

// Throws PreconditionError for the total-domination variant on a hypergraph
// with an isolated vertex (that vertex could never be covered).
CoverSystem build(const Hypergraph& h, Variant variant);

struct GameState {
  VertexSet covered;
  VertexSet played;
  std::vector<int> history;
  Player to_move = Player::Dominator;
};

// `seed` pre-declares part of the universe as already covered (the residual
// game: vertices of S count as dominated from the start).
GameState initial_state(const CoverSystem& sys, Player first,
                        VertexSet seed = VertexSet());

bool is_terminal(const CoverSystem& sys, const GameState& s);
bool is_legal(const CoverSystem& sys, const GameState& s, int v);

// All legal vertices in ascending order; empty iff the game is over.
std::vector<int> legal_moves(const CoverSystem& sys, const GameState& s);

// Throws IllegalMoveError when covers[v] adds nothing.
GameState apply_move(const CoverSystem& sys, const GameState& s, int v);

}  // namespace hdg::game
