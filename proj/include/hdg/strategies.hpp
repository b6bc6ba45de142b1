#pragma once

// Executable strategies and the potential-function audit.
//
// The central piece is the greedy Dominator for graphs in which every vertex
// and edge lies in a triangle. During a game each vertex is colored
//
//   white  not yet dominated
//   blue   dominated, but with an undominated closed neighbor
//   red    closed neighborhood fully dominated
//
// and the residual graph drops red vertices and blue-blue edges. Vertices
// carry integer weights: in Phase 1 (some white vertex has >= 4 white
// neighbors, or some blue vertex >= 5) white/blue/red weigh 20/12/0; once
// that condition dies at a Dominator turn the game enters Phase 2 for good
// and blue weights refine by W-degree, special-triangle membership and a +2
// bonus for vertices already blue at the boundary. The greedy Dominator
// plays the vertex maximizing the total-weight decrease; the auditor checks
// the decrease bounds (pairs of turns >= 72, etc.) that force the total game
// length below 5n/9.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hdg/covergame.hpp"
#include "hdg/hypergraph.hpp"

namespace hdg::strategies {

enum class Color : std::uint8_t { White, Blue, Red };

struct ResidualView {
  int n = 0;
  VertexSet dominated;                  // N[D]
  std::vector<Color> color;
  VertexSet whites, blues, reds;
  std::vector<VertexSet> residual_adj;  // empty row for red vertices
  std::vector<int> deg_w;               // white residual neighbors
  std::vector<int> deg_wb;              // residual degree
  VertexSet special_blue;               // blue vertices in a one-blue-two-white triangle
};

// Colors and residual structure for dominated set N[D], recomputed from
// scratch. Requires gstar to be a simple graph with every vertex and edge in
// a triangle (PreconditionError otherwise).
ResidualView compute_residual(const Hypergraph& gstar, const VertexSet& d);

// Successor view after playing a white or blue vertex. Needs no access to
// the base graph: everything a legal move can change is visible in the view.
ResidualView apply_to_view(const ResidualView& view, int v);

// True iff the Phase-1 condition holds: a white vertex with W-degree >= 4 or
// a blue vertex with W-degree >= 5.
bool detect_phase(const ResidualView& view);

struct WeightState {
  int phase = 1;
  std::optional<int> i_star;    // label of the last Phase-1 turn
  VertexSet blue_at_boundary;   // blue vertices of the boundary residual graph
};

struct VertexWeights {
  std::vector<int> per_vertex;
  int total = 0;
};

// Phase-1 weights or Phase-2 f + f^+. Throws std::logic_error if a Phase-2
// view violates the boundary degree caps (white <= 3, blue <= 4); that would
// mean phase detection ran at the wrong moments.
VertexWeights weight(const ResidualView& view, const WeightState& ws);

// Weight decrease caused by playing v under the current assignment.
int move_decrease(const ResidualView& view, const WeightState& ws, int v);

// The vertex with maximum weight decrease, smallest index on ties.
int greedy_dominator_move(const ResidualView& view, const WeightState& ws);

// --- strategies -------------------------------------------------------------

struct StrategyContext {
  const ResidualView* view = nullptr;
  const WeightState* ws = nullptr;
};

struct Strategy {
  std::string name;
  bool needs_residual = false;
  std::function<int(const game::CoverSystem&, const game::GameState&,
                    const StrategyContext*)> choose;
};

Strategy greedy_dominator();
// Exact minimax move for whichever player is to move (used for both the
// optimal Dominator and the optimal Staller).
Strategy optimal_strategy();
Strategy staller_optimal();
// Seeded and reproducible: the move is a pure function of seed and state.
Strategy staller_random(std::uint64_t seed);
// Cheap adversary: a legal move covering as little new ground as possible.
Strategy staller_greedy_min();
// Claims the pendant of an untouched core edge while one exists. Requires a
// core-plus-pendant instance as produced by gen_alon (InputError otherwise).
Strategy staller_pendant(const Hypergraph& alon);
// Row response on the k-by-k grid instance H_{k,1}: replies to Dominator's
// (i,j) with a legal (i,j') when possible.
Strategy staller_grid(int k);

// --- playouts ---------------------------------------------------------------

struct PlayoutTurn {
  int label = 0;  // odd = Dominator's turn; 0 = Staller-start preliminary turn
  game::Player player = game::Player::Dominator;
  int vertex = -1;
  int phase = 0;  // 0 when the weight machinery is off
  std::optional<int> g;
  std::optional<int> weight_after;
};

struct Playout {
  Hypergraph input;
  Hypergraph gstar;     // 2-section the weight machinery ran on
  bool has_weights = false;
  game::Player first = game::Player::Dominator;
  std::string dom_name, stall_name;
  std::vector<PlayoutTurn> turns;
  std::optional<int> w_initial;
  std::optional<int> i_star;  // label after which the re-weighting happened
  int boundary_drop = 0;
  bool phase_reentry_detected = false;

  int length() const { return static_cast<int>(turns.size()); }
};

// Alternates the two strategies until the domination game on `input` ends.
// The weight machinery runs on two_section(input) whenever that graph meets
// the triangle preconditions; a strategy that needs it on an input that does
// not is a PreconditionError. A strategy emitting an illegal move raises
// StrategyFaultError naming it.
Playout playout(const Hypergraph& input, const Strategy& dom,
                const Strategy& stall, game::Player first);

// One move per line: `turn player vertex g phase`, then a footer of totals.
std::string serialize_trace(const Playout& p);

// --- audit ------------------------------------------------------------------

struct AuditCheck {
  std::string id;
  int turn_label = -1;  // -1 for whole-game checks
  bool pass = false;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;
  bool all_pass = true;
  std::string to_string() const;
};

// Checks the per-round decreases of a greedy-Dominator playout: consecutive
// pairs g_i + g_{i+1} >= 72, terminal turns >= 36 (Phase 2) or >= 37
// (Phase 1), a Staller-start preliminary g_0 >= 36, the start/end totals
// w = 20n and 0, single-turn decreases >= 20 in trigger-free Phase-2 turns,
// and total length <= floor(5n/9). Failures are findings, not errors.
AuditReport audit_lemmas(const Playout& p);

}  // namespace hdg::strategies
