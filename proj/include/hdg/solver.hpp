#pragma once

// Exact game values by memoized minimax. Dominator minimizes the number of
// remaining moves, Staller maximizes; the value of a nonterminal state is
// 1 + opt over legal moves. The transposition key is (covered, to_move):
// by the residual-game formalism, future play depends on nothing else.
//
// naive_solve is the deliberately plain depth-first recursion kept as a
// cross-validation oracle; it must agree with solve wherever both run.

#include <cstdint>
#include <optional>
#include <vector>

#include "hdg/covergame.hpp"
#include "hdg/hypergraph.hpp"

namespace hdg::solver {

struct GameValue {
  int length = 0;                 // moves remaining under optimal play
  std::optional<int> best_move;   // smallest-index optimal vertex; absent iff terminal
};

struct SolveStats {
  std::uint64_t memo_hits = 0;
  std::uint64_t memo_misses = 0;
  double hit_rate() const {
    const double total = double(memo_hits) + double(memo_misses);
    return total == 0 ? 0.0 : double(memo_hits) / total;
  }
};

// Exact value from an arbitrary state. The memo table lives and dies inside
// the call. Practical ceiling is universe_size <= 28 or so; the table is
// bounded by 2^universe_size entries per side.
GameValue solve(const game::CoverSystem& sys, const game::GameState& s,
                SolveStats* stats = nullptr);

// Value plus the full principal line of play, sharing one memo table.
struct SolvedLine {
  GameValue value;
  std::vector<int> line;
  SolveStats stats;
};
SolvedLine solve_line(const game::CoverSystem& sys, const game::GameState& s);

// Plain minimax without memoization. Intended for universes up to ~14.
GameValue naive_solve(const game::CoverSystem& sys, const game::GameState& s);

// Game numbers. The Staller-start variants are the primed invariants.
GameValue gamma_g(const Hypergraph& h);
GameValue gamma_g_prime(const Hypergraph& h);
GameValue tau_g(const Hypergraph& h);
GameValue tau_g_prime(const Hypergraph& h);
GameValue gamma_tg(const Hypergraph& h);  // requires isolate-free

// Residual game: vertices of S are declared dominated before any move.
GameValue gamma_g_given(const Hypergraph& h, const VertexSet& s, game::Player first);

// Static optimization numbers by exact set cover (iterative deepening with
// a greedy upper bound).
int min_cover(const game::CoverSystem& sys);
int gamma(const Hypergraph& h);
int tau(const Hypergraph& h);
int gamma_t(const Hypergraph& h);  // requires isolate-free

}  // namespace hdg::solver
