#include "hdg/solver.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "hdg/errors.hpp"

namespace hdg::solver {

using game::CoverSystem;
using game::GameState;
using game::Player;
using game::Variant;

namespace {

struct MemoKey {
  VertexSet covered;
  bool staller_to_move;
  bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& k) const noexcept {
    return static_cast<std::size_t>(k.covered.hash() ^
                                    (k.staller_to_move ? 0x9e3779b97f4a7c15ULL : 0));
  }
};

class MemoTable {
 public:
  const int* find(const MemoKey& k) {
    auto it = table_.find(k);
    if (it == table_.end()) {
      ++stats_.memo_misses;
      return nullptr;
    }
    ++stats_.memo_hits;
    return &it->second;
  }
  void insert(const MemoKey& k, int value) { table_.emplace(k, value); }
  const SolveStats& stats() const { return stats_; }

 private:
  std::unordered_map<MemoKey, int, MemoKeyHash> table_;
  SolveStats stats_;
};

// Move ordering is a search heuristic only: biggest new coverage first for
// the minimizer, smallest first for the maximizer, index as tie-break.
// Values are exact either way.
void order_moves(const CoverSystem& sys, const VertexSet& covered,
                 Player to_move, std::vector<std::pair<int, int>>& buf) {
  buf.clear();
  for (int v = 0; v < sys.mover_count(); ++v) {
    const int gain = (sys.covers[static_cast<std::size_t>(v)] - covered).count();
    if (gain > 0) buf.push_back({gain, v});
  }
  if (to_move == Player::Dominator) {
    std::sort(buf.begin(), buf.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
  } else {
    std::sort(buf.begin(), buf.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
  }
}

int solve_rec(const CoverSystem& sys, const VertexSet& covered, Player to_move,
              MemoTable& memo) {
  if (covered == sys.universe_mask) return 0;
  const MemoKey key{covered, to_move == Player::Staller};
  if (const int* hit = memo.find(key)) return *hit;

  std::vector<std::pair<int, int>> moves;
  order_moves(sys, covered, to_move, moves);
  int best = to_move == Player::Dominator ? std::numeric_limits<int>::max() : -1;
  for (const auto& [gain, v] : moves) {
    const int child = solve_rec(sys, covered | sys.covers[static_cast<std::size_t>(v)],
                                game::other(to_move), memo);
    if (to_move == Player::Dominator) {
      best = std::min(best, 1 + child);
    } else {
      best = std::max(best, 1 + child);
    }
  }
  memo.insert(key, best);
  return best;
}

// smallest-index optimal vertex once the value is known (children are memoized)
int pick_best_move(const CoverSystem& sys, const VertexSet& covered,
                   Player to_move, int value, MemoTable& memo) {
  for (int v = 0; v < sys.mover_count(); ++v) {
    const VertexSet& cv = sys.covers[static_cast<std::size_t>(v)];
    if (cv.subset_of(covered)) continue;
    if (1 + solve_rec(sys, covered | cv, game::other(to_move), memo) == value) {
      return v;
    }
  }
  throw std::logic_error("solver internal error: no move achieves the computed value");
}

}  // namespace

GameValue solve(const CoverSystem& sys, const GameState& s, SolveStats* stats) {
  MemoTable memo;
  GameValue out;
  out.length = solve_rec(sys, s.covered, s.to_move, memo);
  if (out.length > 0) {
    out.best_move = pick_best_move(sys, s.covered, s.to_move, out.length, memo);
  }
  if (stats) *stats = memo.stats();
  return out;
}

SolvedLine solve_line(const CoverSystem& sys, const GameState& s) {
  MemoTable memo;
  SolvedLine out;
  out.value.length = solve_rec(sys, s.covered, s.to_move, memo);
  VertexSet covered = s.covered;
  Player to_move = s.to_move;
  int remaining = out.value.length;
  while (remaining > 0) {
    const int v = pick_best_move(sys, covered, to_move, remaining, memo);
    out.line.push_back(v);
    covered |= sys.covers[static_cast<std::size_t>(v)];
    to_move = game::other(to_move);
    --remaining;
  }
  if (!out.line.empty()) out.value.best_move = out.line.front();
  out.stats = memo.stats();
  return out;
}

namespace {

int naive_rec(const CoverSystem& sys, const VertexSet& covered, Player to_move) {
  if (covered == sys.universe_mask) return 0;
  int best = to_move == Player::Dominator ? std::numeric_limits<int>::max() : -1;
  for (int v = 0; v < sys.mover_count(); ++v) {
    const VertexSet& cv = sys.covers[static_cast<std::size_t>(v)];
    if (cv.subset_of(covered)) continue;
    const int child = naive_rec(sys, covered | cv, game::other(to_move));
    if (to_move == Player::Dominator) {
      best = std::min(best, 1 + child);
    } else {
      best = std::max(best, 1 + child);
    }
  }
  return best;
}

}  // namespace

GameValue naive_solve(const CoverSystem& sys, const GameState& s) {
  GameValue out;
  out.length = naive_rec(sys, s.covered, s.to_move);
  if (out.length > 0) {
    for (int v = 0; v < sys.mover_count(); ++v) {
      const VertexSet& cv = sys.covers[static_cast<std::size_t>(v)];
      if (cv.subset_of(s.covered)) continue;
      if (1 + naive_rec(sys, s.covered | cv, game::other(s.to_move)) == out.length) {
        out.best_move = v;
        break;
      }
    }
  }
  return out;
}

namespace {

GameValue solve_fresh(const Hypergraph& h, Variant variant, Player first) {
  const CoverSystem sys = game::build(h, variant);
  return solve(sys, game::initial_state(sys, first));
}

}  // namespace

GameValue gamma_g(const Hypergraph& h) {
  return solve_fresh(h, Variant::Domination, Player::Dominator);
}
GameValue gamma_g_prime(const Hypergraph& h) {
  return solve_fresh(h, Variant::Domination, Player::Staller);
}
GameValue tau_g(const Hypergraph& h) {
  return solve_fresh(h, Variant::Transversal, Player::Dominator);
}
GameValue tau_g_prime(const Hypergraph& h) {
  return solve_fresh(h, Variant::Transversal, Player::Staller);
}
GameValue gamma_tg(const Hypergraph& h) {
  return solve_fresh(h, Variant::TotalDomination, Player::Dominator);
}

GameValue gamma_g_given(const Hypergraph& h, const VertexSet& s, Player first) {
  if (!s.subset_of(h.vertex_mask())) {
    throw InputError("gamma_g_given: S contains a vertex outside 0.." +
                     std::to_string(h.vertex_count() - 1));
  }
  const CoverSystem sys = game::build(h, Variant::Domination);
  return solve(sys, game::initial_state(sys, first, s));
}

namespace {

// can the remaining universe be covered with at most `budget` movers?
bool cover_dfs(const CoverSystem& sys, const VertexSet& covered, int budget,
               int max_gain) {
  const VertexSet missing = sys.universe_mask - covered;
  if (missing.empty()) return true;
  if (budget == 0) return false;
  if (missing.count() > budget * max_gain) return false;

  // branch on the uncovered element with the fewest candidate coverers
  int pivot = -1, pivot_count = std::numeric_limits<int>::max();
  for (int e : missing) {
    int cnt = 0;
    for (int v = 0; v < sys.mover_count(); ++v) {
      if (sys.covers[static_cast<std::size_t>(v)].contains(e)) ++cnt;
    }
    if (cnt < pivot_count) {
      pivot_count = cnt;
      pivot = e;
    }
  }
  for (int v = 0; v < sys.mover_count(); ++v) {
    const VertexSet& cv = sys.covers[static_cast<std::size_t>(v)];
    if (!cv.contains(pivot)) continue;
    if (cover_dfs(sys, covered | cv, budget - 1, max_gain)) return true;
  }
  return false;
}

}  // namespace

int min_cover(const CoverSystem& sys) {
  if (sys.universe_size == 0) return 0;
  int max_gain = 0;
  for (const VertexSet& cv : sys.covers) max_gain = std::max(max_gain, cv.count());

  // greedy upper bound
  VertexSet covered;
  int upper = 0;
  while (covered != sys.universe_mask) {
    int best = -1, best_gain = 0;
    for (int v = 0; v < sys.mover_count(); ++v) {
      const int gain = (sys.covers[static_cast<std::size_t>(v)] - covered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best < 0) throw std::logic_error("min_cover: universe is not coverable");
    covered |= sys.covers[static_cast<std::size_t>(best)];
    ++upper;
  }

  const int lower = (sys.universe_size + max_gain - 1) / max_gain;
  for (int size = lower; size < upper; ++size) {
    if (cover_dfs(sys, VertexSet(), size, max_gain)) return size;
  }
  return upper;
}

int gamma(const Hypergraph& h) {
  return min_cover(game::build(h, Variant::Domination));
}
int tau(const Hypergraph& h) {
  return min_cover(game::build(h, Variant::Transversal));
}
int gamma_t(const Hypergraph& h) {
  return min_cover(game::build(h, Variant::TotalDomination));
}

}  // namespace hdg::solver
