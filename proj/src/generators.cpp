#include "hdg/generators.hpp"

#include <cmath>
#include <random>
#include <set>

#include "hdg/errors.hpp"

namespace hdg::generators {

Hypergraph gen_hk1(int k) {
  if (k < 2) throw InputError("gen_hk1 requires k >= 2");
  auto idx = [k](int i, int j) { return (i - 1) * k + (j - 1); };  // 1-based grid
  std::vector<VertexSet> edges;
  for (int i0 = 1; i0 <= k - 1; ++i0) {
    VertexSet row;
    for (int j = 1; j <= k; ++j) row.add(idx(i0, j));
    edges.push_back(row);
  }
  for (int j0 = 1; j0 <= k; ++j0) {
    VertexSet col;
    for (int i = 1; i <= k; ++i) col.add(idx(i, j0));
    edges.push_back(col);
  }
  return Hypergraph(k * k, std::move(edges));
}

Hypergraph gen_hk2(int k) {
  if (k < 2) throw InputError("gen_hk2 requires k >= 2");
  const int a = 0, b = 1, c = 2;
  VertexSet us, vs;
  for (int i = 0; i < k - 1; ++i) {
    us.add(3 + i);
    vs.add(k + 2 + i);
  }
  std::vector<VertexSet> edges{
      us | VertexSet::single(a), us | VertexSet::single(b),
      vs | VertexSet::single(b), vs | VertexSet::single(c)};
  return Hypergraph(2 * k + 1, std::move(edges));
}

Hypergraph gen_f_composition(const Hypergraph& f, int k) {
  for (int i = 0; i < f.edge_count(); ++i) {
    if (f.edge(i).count() != k) {
      throw InputError("gen_f_composition: F is not " + std::to_string(k) +
                       "-uniform (edge " + std::to_string(i) + ")");
    }
  }
  const int t = f.vertex_count();
  if (t < 1) throw InputError("gen_f_composition: F has no vertices");
  const int block = 2 * k + 1;
  const Hypergraph unit = gen_hk2(k);
  std::vector<VertexSet> edges;
  for (int copy = 0; copy < t; ++copy) {
    for (const VertexSet& e : unit.edges()) {
      VertexSet shifted;
      for (int v : e) shifted.add(copy * block + v);
      edges.push_back(shifted);
    }
  }
  // F's vertex x_i sits on the b-vertex of copy i
  auto b_of = [block](int i) { return i * block + 1; };
  for (const VertexSet& e : f.edges()) {
    VertexSet mapped;
    for (int x : e) mapped.add(b_of(x));
    edges.push_back(mapped);
  }
  return Hypergraph(t * block, std::move(edges));
}

Hypergraph default_f(int t, int k) {
  std::vector<VertexSet> edges;
  if (t >= k) {
    VertexSet e;
    for (int v = 0; v < k; ++v) e.add(v);
    edges.push_back(e);
  }
  return Hypergraph(t, std::move(edges));
}

namespace {

// selection sampling: r distinct elements of {0..pool-1}, ascending
VertexSet sample_subset(int pool, int r, std::mt19937_64& rng) {
  VertexSet out;
  int need = r;
  for (int v = 0; v < pool && need > 0; ++v) {
    const int remaining = pool - v;
    if (static_cast<int>(rng() % static_cast<std::uint64_t>(remaining)) < need) {
      out.add(v);
      --need;
    }
  }
  return out;
}

}  // namespace

AlonInstance gen_alon(int k, std::uint64_t seed, LogBase base) {
  if (k < 3) throw InputError("gen_alon requires k >= 3");
  const double lg = base == LogBase::Natural ? std::log(double(k - 1))
                                             : std::log2(double(k - 1));
  const int core = static_cast<int>(std::ceil((k - 1) * lg));
  const int m = k - 1;
  if (core < k - 1) {
    throw InputError("gen_alon: core smaller than k-1, cannot draw edges");
  }
  if (core + m > VertexSet::kCapacity) {
    throw InputError("gen_alon: instance exceeds supported vertex count");
  }
  std::mt19937_64 rng(seed);
  AlonInstance inst;
  inst.core_size = core;
  std::vector<VertexSet> edges;
  for (int i = 0; i < m; ++i) {
    VertexSet e = sample_subset(core, k - 1, rng);
    e.add(core + i);
    edges.push_back(e);
    inst.pendants.push_back(core + i);
  }
  inst.h = Hypergraph(core + m, std::move(edges));
  return inst;
}

Hypergraph gen_random_uniform(int n, int m, int k, std::uint64_t seed,
                              bool require_isolate_free) {
  if (k < 1 || k > n) throw InputError("gen_random_uniform requires 1 <= k <= n");
  if (n > VertexSet::kCapacity) throw InputError("n exceeds supported vertex count");
  // C(n,k) with early cutoff so m's feasibility check cannot overflow
  double choices = 1.0;
  for (int i = 0; i < k; ++i) choices = choices * (n - i) / (i + 1);
  if (m < 0 || double(m) > choices + 0.5) {
    throw InputError("gen_random_uniform: m exceeds the number of k-subsets");
  }
  if (require_isolate_free && std::int64_t(m) * k < n) {
    throw InputError("gen_random_uniform: m*k < n can never be isolate-free");
  }

  std::mt19937_64 rng(seed);
  const int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    std::vector<VertexSet> edges;
    VertexSet touched;
    // fresh distinct draws; the draw loop itself always terminates because
    // m <= C(n,k)
    while (static_cast<int>(edges.size()) < m) {
      VertexSet e = sample_subset(n, k, rng);
      std::pair<std::uint64_t, std::uint64_t> key{0, 0};
      for (int v : e) (v < 64 ? key.first : key.second) |= std::uint64_t{1} << (v & 63);
      if (!seen.insert(key).second) continue;
      touched |= e;
      edges.push_back(e);
    }
    if (!require_isolate_free || touched == VertexSet::full(n)) {
      return Hypergraph(n, std::move(edges));
    }
  }
  throw InputError("gen_random_uniform: retry budget exhausted while "
                   "searching for an isolate-free instance");
}

}  // namespace hdg::generators
