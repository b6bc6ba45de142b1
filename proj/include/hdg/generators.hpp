#pragma once

// Instance families: the grid-minus-a-line hypergraphs H_{k,1}, the 4-edge
// pendant construction H_{k,2}, the composition F(H_{k,2}), the randomized
// core-plus-pendant construction, and seeded random k-uniform hypergraphs.
// All generators are deterministic in their parameters and seed.

#include <cstdint>
#include <string>
#include <vector>

#include "hdg/hypergraph.hpp"

namespace hdg::generators {

// k^2 vertices on a k-by-k grid, vertex (i,j) (1-based) stored as
// (i-1)*k + (j-1). Edges: the k-1 rows i0 = 1..k-1 first, then the k
// columns. Requires k >= 2.
Hypergraph gen_hk1(int k);

// 2k+1 vertices a=0, b=1, c=2, u_1..u_{k-1} = 3..k+1, v_1..v_{k-1} = k+2..2k;
// four k-edges {a,u*}, {b,u*}, {b,v*}, {c,v*}. Requires k >= 2.
Hypergraph gen_hk2(int k);

// t = |V(F)| disjoint copies of H_{k,2}; copy i's b-vertex plays the role of
// F's vertex x_i, and F's edges (re-indexed onto those b-vertices) are
// appended after the copies' edges. Requires F k-uniform.
Hypergraph gen_f_composition(const Hypergraph& f, int k);

// Convenience F for the composition: t vertices carrying one k-edge
// {0..k-1} when t >= k, and no edges otherwise.
Hypergraph default_f(int t, int k);

enum class LogBase { Natural, Two };

struct AlonInstance {
  Hypergraph h;
  int core_size = 0;           // vertices 0..core_size-1
  std::vector<int> pendants;   // pendants[i] = the degree-1 vertex of edge i
};

// Core of ceil((k-1)*log(k-1)) vertices plus k-1 pendants; edge i is a
// uniformly random (k-1)-subset of the core together with pendant i.
// Requires k >= 3. The log defaults to the natural one.
AlonInstance gen_alon(int k, std::uint64_t seed, LogBase base = LogBase::Natural);

// m distinct uniformly random k-subsets of {0..n-1}. With
// require_isolate_free, redraws until every vertex is covered (bounded
// retries, then InputError).
Hypergraph gen_random_uniform(int n, int m, int k, std::uint64_t seed,
                              bool require_isolate_free = false);

}  // namespace hdg::generators
