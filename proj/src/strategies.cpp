#include "hdg/strategies.hpp"

#include <algorithm>
#include <cassert>
#include <random>

#include "hdg/errors.hpp"
#include "hdg/solver.hpp"

namespace hdg::strategies {

using game::CoverSystem;
using game::GameState;
using game::Player;

namespace {

// Shared by compute_residual and apply_to_view. base_adj must carry, for
// every non-red vertex, at least its edges to white vertices, and for every
// white vertex its full neighborhood; the full graph adjacency and the
// previous residual adjacency both qualify.
ResidualView derive_view(int n, const std::vector<VertexSet>& base_adj,
                         const VertexSet& dominated) {
  ResidualView view;
  view.n = n;
  view.dominated = dominated;
  view.color.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (!dominated.contains(v)) {
      view.color[static_cast<std::size_t>(v)] = Color::White;
      view.whites.add(v);
    } else if ((base_adj[static_cast<std::size_t>(v)] - dominated).empty()) {
      view.color[static_cast<std::size_t>(v)] = Color::Red;
      view.reds.add(v);
    } else {
      view.color[static_cast<std::size_t>(v)] = Color::Blue;
      view.blues.add(v);
    }
  }
  view.residual_adj.resize(static_cast<std::size_t>(n));
  view.deg_w.resize(static_cast<std::size_t>(n), 0);
  view.deg_wb.resize(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    switch (view.color[static_cast<std::size_t>(v)]) {
      case Color::White:
        // a white vertex keeps every incident edge
        view.residual_adj[static_cast<std::size_t>(v)] = base_adj[static_cast<std::size_t>(v)];
        break;
      case Color::Blue:
        view.residual_adj[static_cast<std::size_t>(v)] =
            base_adj[static_cast<std::size_t>(v)] & view.whites;
        break;
      case Color::Red:
        break;
    }
    view.deg_w[static_cast<std::size_t>(v)] =
        (view.residual_adj[static_cast<std::size_t>(v)] & view.whites).count();
    view.deg_wb[static_cast<std::size_t>(v)] = view.residual_adj[static_cast<std::size_t>(v)].count();
  }
  for (int v : view.blues) {
    const VertexSet wn = view.residual_adj[static_cast<std::size_t>(v)] & view.whites;
    for (int u : wn) {
      if (!(view.residual_adj[static_cast<std::size_t>(u)] & wn).empty()) {
        view.special_blue.add(v);
        break;
      }
    }
  }
  return view;
}

}  // namespace

ResidualView compute_residual(const Hypergraph& gstar, const VertexSet& d) {
  ValidationChecks checks;
  checks.g23 = true;
  checks.every_vertex_in_triangle = true;
  const ValidationReport rep = validate(gstar, checks);
  if (!rep.ok()) {
    throw PreconditionError("compute_residual: base graph fails validation:\n" +
                            rep.to_string());
  }
  if (!d.subset_of(gstar.vertex_mask())) {
    throw InputError("compute_residual: D contains an out-of-range vertex");
  }
  const std::vector<VertexSet> adj = gstar.adjacency();
  VertexSet dominated;
  for (int v : d) dominated |= VertexSet::single(v) | adj[static_cast<std::size_t>(v)];
  return derive_view(gstar.vertex_count(), adj, dominated);
}

ResidualView apply_to_view(const ResidualView& view, int v) {
  assert(v >= 0 && v < view.n);
  assert(view.color[static_cast<std::size_t>(v)] != Color::Red);
  const VertexSet newly = VertexSet::single(v) |
                          (view.residual_adj[static_cast<std::size_t>(v)] & view.whites);
  return derive_view(view.n, view.residual_adj, view.dominated | newly);
}

bool detect_phase(const ResidualView& view) {
  for (int v : view.whites) {
    if (view.deg_w[static_cast<std::size_t>(v)] >= 4) return true;
  }
  for (int v : view.blues) {
    if (view.deg_w[static_cast<std::size_t>(v)] >= 5) return true;
  }
  return false;
}

VertexWeights weight(const ResidualView& view, const WeightState& ws) {
  VertexWeights out;
  out.per_vertex.resize(static_cast<std::size_t>(view.n), 0);
  if (ws.phase == 1) {
    for (int v = 0; v < view.n; ++v) {
      switch (view.color[static_cast<std::size_t>(v)]) {
        case Color::White: out.per_vertex[static_cast<std::size_t>(v)] = 20; break;
        case Color::Blue: out.per_vertex[static_cast<std::size_t>(v)] = 12; break;
        case Color::Red: break;
      }
      out.total += out.per_vertex[static_cast<std::size_t>(v)];
    }
    return out;
  }

  for (int v = 0; v < view.n; ++v) {
    const int dw = view.deg_w[static_cast<std::size_t>(v)];
    int f = 0;
    switch (view.color[static_cast<std::size_t>(v)]) {
      case Color::White:
        if (dw > 3) {
          throw std::logic_error("Phase-2 weight: white vertex " + std::to_string(v) +
                                 " has W-degree " + std::to_string(dw) +
                                 " > 3 (phase detection bug)");
        }
        f = 20;
        break;
      case Color::Blue:
        if (dw > 4 || dw < 1) {
          throw std::logic_error("Phase-2 weight: blue vertex " + std::to_string(v) +
                                 " has W-degree " + std::to_string(dw) +
                                 " (phase detection bug)");
        }
        if (dw == 4) {
          f = 10;
        } else if (dw >= 2) {
          f = view.special_blue.contains(v) ? 10 : 9;
        } else {
          f = 8;
        }
        break;
      case Color::Red:
        break;
    }
    const int fplus =
        (dw >= 2 && ws.blue_at_boundary.contains(v)) ? 2 : 0;
    assert(!(fplus && view.color[static_cast<std::size_t>(v)] == Color::White));
    out.per_vertex[static_cast<std::size_t>(v)] = f + fplus;
    out.total += f + fplus;
  }
  return out;
}

int move_decrease(const ResidualView& view, const WeightState& ws, int v) {
  return weight(view, ws).total - weight(apply_to_view(view, v), ws).total;
}

int greedy_dominator_move(const ResidualView& view, const WeightState& ws) {
  const VertexSet legal = view.whites | view.blues;
  if (legal.empty()) {
    throw PreconditionError("greedy_dominator_move: terminal state, no legal moves");
  }
  const int before = weight(view, ws).total;
  int best = -1, best_dec = -1;
  for (int v : legal) {
    const int dec = before - weight(apply_to_view(view, v), ws).total;
    if (dec > best_dec) {
      best_dec = dec;
      best = v;
    }
  }
  return best;
}

// --- strategies -------------------------------------------------------------

Strategy greedy_dominator() {
  Strategy s;
  s.name = "greedy";
  s.needs_residual = true;
  s.choose = [](const CoverSystem&, const GameState&, const StrategyContext* ctx) {
    if (!ctx || !ctx->view || !ctx->ws) {
      throw PreconditionError("greedy strategy needs the residual machinery");
    }
    return greedy_dominator_move(*ctx->view, *ctx->ws);
  };
  return s;
}

Strategy optimal_strategy() {
  Strategy s;
  s.name = "optimal";
  s.choose = [](const CoverSystem& sys, const GameState& st, const StrategyContext*) {
    const solver::GameValue v = solver::solve(sys, st);
    if (!v.best_move) {
      throw PreconditionError("optimal strategy called on a terminal state");
    }
    return *v.best_move;
  };
  return s;
}

Strategy staller_optimal() { return optimal_strategy(); }

Strategy staller_random(std::uint64_t seed) {
  Strategy s;
  s.name = "random";
  s.choose = [seed](const CoverSystem& sys, const GameState& st, const StrategyContext*) {
    const std::vector<int> moves = game::legal_moves(sys, st);
    if (moves.empty()) {
      throw PreconditionError("random strategy called on a terminal state");
    }
    // pure function of (seed, state): re-running the same position always
    // picks the same move
    std::mt19937_64 rng(seed ^ st.covered.hash() ^
                        (std::uint64_t(st.history.size()) << 32));
    return moves[static_cast<std::size_t>(rng() % moves.size())];
  };
  return s;
}

Strategy staller_greedy_min() {
  Strategy s;
  s.name = "greedy-min";
  s.choose = [](const CoverSystem& sys, const GameState& st, const StrategyContext*) {
    int best = -1, best_gain = -1;
    for (int v = 0; v < sys.mover_count(); ++v) {
      const int gain = (sys.covers[static_cast<std::size_t>(v)] - st.covered).count();
      if (gain > 0 && (best_gain < 0 || gain < best_gain)) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) {
      throw PreconditionError("greedy-min strategy called on a terminal state");
    }
    return best;
  };
  return s;
}

namespace {

struct AlonShape {
  int core = 0;
  std::vector<int> pendants;  // pendants[i] belongs to edge i
};

AlonShape alon_shape(const Hypergraph& h) {
  const int m = h.edge_count();
  const int core = h.vertex_count() - m;
  if (m < 1 || core < 1) {
    throw InputError("staller_pendant: not a core-plus-pendant instance");
  }
  std::vector<int> degree(static_cast<std::size_t>(h.vertex_count()), 0);
  for (const VertexSet& e : h.edges()) {
    for (int v : e) ++degree[static_cast<std::size_t>(v)];
  }
  AlonShape shape;
  shape.core = core;
  for (int i = 0; i < m; ++i) {
    const int pendant = core + i;
    if (!h.edge(i).contains(pendant) || degree[static_cast<std::size_t>(pendant)] != 1) {
      throw InputError("staller_pendant: edge " + std::to_string(i) +
                       " lacks its pendant vertex " + std::to_string(pendant));
    }
    for (int v : h.edge(i)) {
      if (v >= core && v != pendant) {
        throw InputError("staller_pendant: edge " + std::to_string(i) +
                         " touches a foreign pendant");
      }
    }
    shape.pendants.push_back(pendant);
  }
  return shape;
}

}  // namespace

Strategy staller_pendant(const Hypergraph& alon) {
  const AlonShape shape = alon_shape(alon);
  Strategy s;
  s.name = "pendant";
  s.choose = [alon, shape](const CoverSystem& sys, const GameState& st,
                           const StrategyContext*) {
    if (sys.origin != alon) {
      throw InputError("pendant strategy bound to a different instance");
    }
    for (int i = 0; i < alon.edge_count(); ++i) {
      if (!alon.edge(i).intersects(st.played)) {
        const int pendant = shape.pendants[static_cast<std::size_t>(i)];
        if (game::is_legal(sys, st, pendant)) return pendant;
      }
    }
    const std::vector<int> moves = game::legal_moves(sys, st);
    if (moves.empty()) {
      throw PreconditionError("pendant strategy called on a terminal state");
    }
    return moves.front();
  };
  return s;
}

Strategy staller_grid(int k) {
  Strategy s;
  s.name = "grid";
  s.choose = [k](const CoverSystem& sys, const GameState& st, const StrategyContext*) {
    if (sys.origin.vertex_count() != k * k) {
      throw InputError("grid strategy: instance is not the k-by-k grid family");
    }
    const std::vector<int> moves = game::legal_moves(sys, st);
    if (moves.empty()) {
      throw PreconditionError("grid strategy called on a terminal state");
    }
    if (!st.history.empty()) {
      const int last = st.history.back();  // Dominator's (i,j)
      const int row = last / k;
      for (int j = 0; j < k; ++j) {
        const int candidate = row * k + j;
        if (candidate != last && game::is_legal(sys, st, candidate)) {
          return candidate;
        }
      }
    }
    return moves.front();
  };
  return s;
}

// --- playout ----------------------------------------------------------------

namespace {

bool section_is_triangle_covered(const Hypergraph& gstar) {
  ValidationChecks checks;
  checks.g23 = true;
  checks.every_vertex_in_triangle = true;
  return validate(gstar, checks).ok();
}

bool is_simple_graph(const Hypergraph& h) {
  std::vector<VertexSet> seen;
  for (const VertexSet& e : h.edges()) {
    if (e.count() != 2) return false;
    if (std::find(seen.begin(), seen.end(), e) != seen.end()) return false;
    seen.push_back(e);
  }
  return true;
}

}  // namespace

Playout playout(const Hypergraph& input, const Strategy& dom,
                const Strategy& stall, Player first) {
  Playout p;
  p.input = input;
  p.gstar = is_simple_graph(input) ? input : two_section(input);
  p.first = first;
  p.dom_name = dom.name;
  p.stall_name = stall.name;
  p.has_weights = section_is_triangle_covered(p.gstar);
  if ((dom.needs_residual || stall.needs_residual) && !p.has_weights) {
    throw PreconditionError(
        "playout: strategy '" + (dom.needs_residual ? dom.name : stall.name) +
        "' needs the weight machinery, but the 2-section is not covered by "
        "triangles");
  }

  const CoverSystem sys = game::build(input, game::Variant::Domination);
  GameState state = game::initial_state(sys, first);

  const std::vector<VertexSet> adj = p.gstar.adjacency();
  ResidualView view;
  WeightState ws;
  if (p.has_weights) {
    view = derive_view(p.gstar.vertex_count(), adj, VertexSet());
    p.w_initial = weight(view, ws).total;
  }

  int move_no = 0;
  while (!game::is_terminal(sys, state)) {
    ++move_no;
    const int label = first == Player::Dominator ? move_no : move_no - 1;
    const bool dominator_turn = state.to_move == Player::Dominator;
    assert(dominator_turn == (label % 2 == 1));

    if (p.has_weights && label % 2 == 1) {
      // the phase of turns i and i+1 is decided right before Dominator's move
      const bool phase1_holds = detect_phase(view);
      if (ws.phase == 1 && !phase1_holds) {
        WeightState next;
        next.phase = 2;
        next.i_star = label - 1;
        next.blue_at_boundary = view.blues;
        p.boundary_drop = weight(view, ws).total - weight(view, next).total;
        p.i_star = label - 1;
        ws = next;
      } else if (ws.phase == 2 && phase1_holds) {
        // the theory says this cannot happen; record it as a finding
        p.phase_reentry_detected = true;
      }
    }

    const Strategy& mover = dominator_turn ? dom : stall;
    StrategyContext ctx{&view, &ws};
    const int v = mover.choose(sys, state, p.has_weights ? &ctx : nullptr);
    if (!game::is_legal(sys, state, v)) {
      throw StrategyFaultError(mover.name, "strategy '" + mover.name +
                                               "' returned illegal move " +
                                               std::to_string(v));
    }

    PlayoutTurn turn;
    turn.label = label;
    turn.player = state.to_move;
    turn.vertex = v;
    state = game::apply_move(sys, state, v);

    if (p.has_weights) {
      const int before = weight(view, ws).total;
      // recomputed from scratch: state.covered equals N[D] on the 2-section
      view = derive_view(p.gstar.vertex_count(), adj, state.covered);
      const VertexWeights after = weight(view, ws);
      turn.phase = ws.phase;
      turn.g = before - after.total;
      turn.weight_after = after.total;
    }
    p.turns.push_back(std::move(turn));
  }
  return p;
}

std::string serialize_trace(const Playout& p) {
  std::string out;
  for (const PlayoutTurn& t : p.turns) {
    out += std::to_string(t.label);
    out += t.player == Player::Dominator ? " D " : " S ";
    out += std::to_string(t.vertex);
    out += " ";
    out += t.g ? std::to_string(*t.g) : "-";
    out += " ";
    out += t.phase > 0 ? std::to_string(t.phase) : "-";
    out += "\n";
  }
  out += "# length=" + std::to_string(p.length());
  if (p.has_weights) {
    out += " w0=" + std::to_string(p.w_initial.value_or(0));
    out += " w_end=" +
           (p.turns.empty() ? std::to_string(p.w_initial.value_or(0))
                            : std::to_string(p.turns.back().weight_after.value_or(-1)));
    out += " i_star=" + (p.i_star ? std::to_string(*p.i_star) : std::string("-"));
    out += " boundary_drop=" + std::to_string(p.boundary_drop);
  }
  out += "\n";
  return out;
}

// --- audit ------------------------------------------------------------------

namespace {

// Structural triggers (i)..(vii) of the Phase-2 decrease analysis. The audit
// only uses them to know where the unconditional >=20 single-turn bound
// applies; the strategy itself never branches on them.
bool any_phase2_trigger(const ResidualView& view) {
  // (i) three pairwise adjacent white vertices
  for (int u : view.whites) {
    const VertexSet wu = view.residual_adj[static_cast<std::size_t>(u)] & view.whites;
    for (int v : wu) {
      if (v <= u) continue;
      if (!(view.residual_adj[static_cast<std::size_t>(v)] & wu).empty()) return true;
    }
  }
  // (ii) a white vertex of W-degree 3 or a blue vertex of W-degree 4
  for (int v : view.whites) {
    if (view.deg_w[static_cast<std::size_t>(v)] >= 3) return true;
  }
  for (int v : view.blues) {
    if (view.deg_w[static_cast<std::size_t>(v)] >= 4) return true;
  }
  // (iii) adjacent whites of W-degree 1 and 2
  for (int u : view.whites) {
    if (view.deg_w[static_cast<std::size_t>(u)] != 1) continue;
    for (int v : view.residual_adj[static_cast<std::size_t>(u)] & view.whites) {
      if (view.deg_w[static_cast<std::size_t>(v)] == 2) return true;
    }
  }
  // (iv) a triangle of two W-degree-1 whites and a W-degree-3 blue
  for (int w : view.blues) {
    if (view.deg_w[static_cast<std::size_t>(w)] != 3) continue;
    const VertexSet wn = view.residual_adj[static_cast<std::size_t>(w)] & view.whites;
    for (int u : wn) {
      if (view.deg_w[static_cast<std::size_t>(u)] != 1) continue;
      for (int v : view.residual_adj[static_cast<std::size_t>(u)] & wn) {
        if (v != u && view.deg_w[static_cast<std::size_t>(v)] == 1) return true;
      }
    }
  }
  // (v) a blue vertex in two special triangles
  for (int b : view.blues) {
    const VertexSet wn = view.residual_adj[static_cast<std::size_t>(b)] & view.whites;
    int triangles = 0;
    for (int u : wn) {
      for (int v : view.residual_adj[static_cast<std::size_t>(u)] & wn) {
        if (v > u) ++triangles;
      }
    }
    if (triangles >= 2) return true;
  }
  // (vi) an edge between a W-degree-0 white and a W-degree-3 blue
  for (int u : view.blues) {
    if (view.deg_w[static_cast<std::size_t>(u)] != 3) continue;
    for (int v : view.residual_adj[static_cast<std::size_t>(u)] & view.whites) {
      if (view.deg_w[static_cast<std::size_t>(v)] == 0) return true;
    }
  }
  // (vii) any white vertex of W-degree 2
  for (int v : view.whites) {
    if (view.deg_w[static_cast<std::size_t>(v)] == 2) return true;
  }
  return false;
}

}  // namespace

std::string AuditReport::to_string() const {
  std::string out;
  for (const AuditCheck& c : checks) {
    out += c.id;
    if (c.turn_label >= 0) out += "@" + std::to_string(c.turn_label);
    out += c.pass ? ": pass" : ": FAIL";
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    out += "\n";
  }
  return out;
}

AuditReport audit_lemmas(const Playout& p) {
  if (!p.has_weights) {
    throw PreconditionError("audit_lemmas: playout carries no weight data");
  }
  if (p.dom_name != "greedy") {
    throw PreconditionError("audit_lemmas: Dominator was '" + p.dom_name +
                            "', the decrease bounds are only guaranteed for "
                            "the greedy strategy");
  }

  AuditReport rep;
  auto add = [&rep](std::string id, int label, bool pass, std::string detail) {
    rep.checks.push_back({std::move(id), label, pass, std::move(detail)});
    rep.all_pass = rep.all_pass && rep.checks.back().pass;
  };

  const int n = p.gstar.vertex_count();
  const std::vector<VertexSet> adj = p.gstar.adjacency();

  // independent replay of the weight ledger
  ResidualView view = derive_view(n, adj, VertexSet());
  WeightState ws;
  std::vector<int> g(p.turns.size(), 0);
  std::vector<int> phase_of(p.turns.size(), 1);
  std::vector<bool> trigger_free(p.turns.size(), false);
  int boundary_drop = 0;
  VertexSet played;
  bool consistent = true;

  add("w0", -1, p.w_initial == 20 * n,
      "w(G_0)=" + std::to_string(p.w_initial.value_or(-1)) + " expected " +
          std::to_string(20 * n));

  for (std::size_t t = 0; t < p.turns.size(); ++t) {
    const PlayoutTurn& turn = p.turns[t];
    if (turn.label % 2 == 1) {
      const bool phase1_holds = detect_phase(view);
      if (ws.phase == 1 && !phase1_holds) {
        WeightState next;
        next.phase = 2;
        next.i_star = turn.label - 1;
        next.blue_at_boundary = view.blues;
        boundary_drop = weight(view, ws).total - weight(view, next).total;
        ws = next;
      }
    }
    phase_of[t] = ws.phase;
    trigger_free[t] = ws.phase == 2 && !any_phase2_trigger(view);
    const int before = weight(view, ws).total;
    played.add(turn.vertex);
    VertexSet dominated;
    for (int v : played) dominated |= VertexSet::single(v) | adj[static_cast<std::size_t>(v)];
    view = derive_view(n, adj, dominated);
    g[t] = before - weight(view, ws).total;
    consistent = consistent && turn.g && *turn.g == g[t] && turn.phase == ws.phase;
  }

  add("trace-consistency", -1, consistent,
      "recomputed decreases and phases match the recorded trace");
  add("w-end", -1, weight(view, ws).total == 0, "final residual weight");
  add("boundary-nonnegative", -1, boundary_drop >= 0 && p.boundary_drop == boundary_drop,
      "re-weighting drop " + std::to_string(boundary_drop));
  {
    bool monotone = true;
    for (std::size_t t = 0; t < g.size(); ++t) monotone = monotone && g[t] >= 0;
    add("weight-monotone", -1, monotone, "every per-turn decrease nonnegative");
  }
  add("phase-permanence", -1, !p.phase_reentry_detected,
      "Phase 1 condition never re-appeared in Phase 2");

  // preliminary turn of a Staller-start game
  if (p.first == Player::Staller && !p.turns.empty()) {
    add("staller-start-g0", 0, g[0] >= 36, "g_0=" + std::to_string(g[0]) + " >= 36");
  }

  // Dominator turns: pair bound or terminal bound
  for (std::size_t t = 0; t < p.turns.size(); ++t) {
    const int label = p.turns[t].label;
    if (label % 2 != 1) continue;
    if (t + 1 < p.turns.size()) {
      const int pair = g[t] + g[t + 1];
      add("pair-ge-72", label, pair >= 72,
          "g_" + std::to_string(label) + "+g_" + std::to_string(label + 1) + "=" +
              std::to_string(pair));
    } else if (phase_of[t] == 1) {
      add("terminal-phase1-ge-37", label, g[t] >= 37,
          "g=" + std::to_string(g[t]) + (g[t] >= 52 ? ", >=52 held" : ", >=52 not held"));
    } else {
      add("terminal-phase2-ge-36", label, g[t] >= 36, "g=" + std::to_string(g[t]));
    }
  }

  // trigger-free Phase-2 turns must drop the weight by at least 20
  for (std::size_t t = 0; t < p.turns.size(); ++t) {
    if (!trigger_free[t]) continue;
    add("phase2-turn-ge-20", p.turns[t].label, g[t] >= 20, "g=" + std::to_string(g[t]));
  }

  const int bound = 5 * n / 9;
  add("length-5n9", -1, p.length() <= bound,
      "length " + std::to_string(p.length()) + " <= " + std::to_string(bound));

  return rep;
}

}  // namespace hdg::strategies
