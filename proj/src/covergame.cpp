#include "hdg/covergame.hpp"

#include "hdg/errors.hpp"

namespace hdg::game {

std::string to_string(Player p) {
  return p == Player::Dominator ? "dominator" : "staller";
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::Domination: return "domination";
    case Variant::TotalDomination: return "total-domination";
    case Variant::Transversal: return "transversal";
  }
  return "?";
}

CoverSystem build(const Hypergraph& h, Variant variant) {
  CoverSystem sys;
  sys.variant = variant;
  sys.origin = h;
  const int n = h.vertex_count();
  sys.covers.resize(static_cast<std::size_t>(n));

  switch (variant) {
    case Variant::Domination:
      sys.universe_size = n;
      for (int v = 0; v < n; ++v) sys.covers[static_cast<std::size_t>(v)] = h.closed_neighborhood(v);
      break;
    case Variant::TotalDomination: {
      sys.universe_size = n;
      VertexSet reachable;
      for (int v = 0; v < n; ++v) {
        sys.covers[static_cast<std::size_t>(v)] = h.open_neighborhood(v);
        reachable |= sys.covers[static_cast<std::size_t>(v)];
      }
      if (reachable != VertexSet::full(n)) {
        const int iso = (VertexSet::full(n) - reachable).first();
        throw PreconditionError(
            "total-domination game is unsatisfiable: vertex " +
            std::to_string(iso) + " is isolated and can never be covered");
      }
      break;
    }
    case Variant::Transversal:
      sys.universe_size = h.edge_count();
      for (int i = 0; i < h.edge_count(); ++i) {
        for (int v : h.edge(i)) sys.covers[static_cast<std::size_t>(v)].add(i);
      }
      break;
  }
  sys.universe_mask = VertexSet::full(sys.universe_size);
  return sys;
}

GameState initial_state(const CoverSystem& sys, Player first, VertexSet seed) {
  if (!seed.subset_of(sys.universe_mask)) {
    throw InputError("seed covered set is not a subset of the universe");
  }
  GameState s;
  s.covered = seed;
  s.to_move = first;
  return s;
}

bool is_terminal(const CoverSystem& sys, const GameState& s) {
  return s.covered == sys.universe_mask;
}

bool is_legal(const CoverSystem& sys, const GameState& s, int v) {
  if (v < 0 || v >= sys.mover_count()) return false;
  return !sys.covers[static_cast<std::size_t>(v)].subset_of(s.covered);
}

std::vector<int> legal_moves(const CoverSystem& sys, const GameState& s) {
  std::vector<int> moves;
  for (int v = 0; v < sys.mover_count(); ++v) {
    if (!sys.covers[static_cast<std::size_t>(v)].subset_of(s.covered)) moves.push_back(v);
  }
  return moves;
}

GameState apply_move(const CoverSystem& sys, const GameState& s, int v) {
  if (v < 0 || v >= sys.mover_count()) {
    throw IllegalMoveError(v, "move " + std::to_string(v) + " out of range");
  }
  const VertexSet gain = sys.covers[static_cast<std::size_t>(v)] - s.covered;
  if (gain.empty()) {
    throw IllegalMoveError(
        v, "illegal move: vertex " + std::to_string(v) +
               " covers nothing new (covers[v] \\ covered = {})");
  }
  GameState next = s;
  next.covered |= sys.covers[static_cast<std::size_t>(v)];
  next.played.add(v);
  next.history.push_back(v);
  next.to_move = other(s.to_move);
  return next;
}

}  // namespace hdg::game
