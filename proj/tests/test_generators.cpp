#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "hdg/errors.hpp"
#include "hdg/generators.hpp"
#include "hdg/solver.hpp"

using namespace hdg;
using namespace hdg::generators;

TEST_CASE("gen_hk1 reproduces the grid-minus-a-line instance at k=3") {
  const Hypergraph expect = Hypergraph::from_edge_lists(
      9, {{0, 1, 2}, {3, 4, 5}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  CHECK(gen_hk1(3) == expect);
}

TEST_CASE("gen_hk1 shape") {
  CHECK_THROWS_AS(gen_hk1(1), InputError);
  for (int k : {2, 3, 4, 5}) {
    const Hypergraph h = gen_hk1(k);
    CHECK(h.vertex_count() == k * k);
    CHECK(h.edge_count() == 2 * k - 1);
    ValidationChecks c;
    c.uniform_k = k;
    c.isolate_free = true;
    CHECK(validate(h, c).ok());

    // degrees: the last row has the k degree-1 vertices, everything else
    // sits in one row and one column
    int deg1 = 0;
    for (int v = 0; v < h.vertex_count(); ++v) {
      int deg = 0;
      for (const VertexSet& e : h.edges()) {
        if (e.contains(v)) ++deg;
      }
      CHECK(deg >= 1);
      CHECK(deg <= 2);
      if (deg == 1) ++deg1;
    }
    CHECK(deg1 == k);
  }
}

TEST_CASE("gen_hk2 shape") {
  CHECK_THROWS_AS(gen_hk2(1), InputError);
  const Hypergraph h = gen_hk2(3);
  CHECK(h.vertex_count() == 7);
  CHECK(h.edge_count() == 4);
  ValidationChecks c;
  c.uniform_k = 3;
  c.isolate_free = true;
  CHECK(validate(h, c).ok());

  auto degree = [&h](int v) {
    int d = 0;
    for (const VertexSet& e : h.edges()) {
      if (e.contains(v)) ++d;
    }
    return d;
  };
  CHECK(degree(0) == 1);  // a
  CHECK(degree(1) == 2);  // b
  CHECK(degree(2) == 1);  // c
}

TEST_CASE("gen_f_composition") {
  // default F for t=3, k=3 is a single 3-edge
  const Hypergraph f = default_f(3, 3);
  REQUIRE(f.edge_count() == 1);
  const Hypergraph h = gen_f_composition(f, 3);
  CHECK(h.vertex_count() == 21);
  CHECK(h.edge_count() == 3 * 4 + 1);
  ValidationChecks c;
  c.uniform_k = 3;
  c.isolate_free = true;
  CHECK(validate(h, c).ok());
  // the appended edge joins the three b-vertices
  CHECK(h.edge(12) == (VertexSet::single(1) | VertexSet::single(8) | VertexSet::single(15)));

  // non-uniform F is rejected
  const Hypergraph bad = Hypergraph::from_edge_lists(3, {{0}});
  CHECK_THROWS_AS(gen_f_composition(bad, 3), InputError);

  // before appending F's edges the 2-section splits into t components
  const Hypergraph unitless = gen_f_composition(default_f(3, 4), 4);
  const Hypergraph sec = two_section(Hypergraph(
      unitless.vertex_count(),
      std::vector<VertexSet>(unitless.edges().begin(), unitless.edges().end() - 1)));
  std::vector<int> comp(static_cast<std::size_t>(sec.vertex_count()), -1);
  int components = 0;
  for (int start = 0; start < sec.vertex_count(); ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = components;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : sec.open_neighborhood(v)) {
        if (comp[static_cast<std::size_t>(u)] < 0) {
          comp[static_cast<std::size_t>(u)] = components;
          stack.push_back(u);
        }
      }
    }
    ++components;
  }
  CHECK(components == 3);
}

TEST_CASE("gen_alon") {
  CHECK_THROWS_AS(gen_alon(2, 0), InputError);
  for (std::uint64_t seed : {0ULL, 1ULL, 9ULL}) {
    for (int k : {3, 4, 5}) {
      const AlonInstance inst = gen_alon(k, seed);
      CHECK(inst.h.edge_count() == k - 1);
      ValidationChecks c;
      c.uniform_k = k;
      CHECK(validate(inst.h, c).ok());
      // each edge has exactly one pendant and pendant degrees are 1
      REQUIRE(static_cast<int>(inst.pendants.size()) == k - 1);
      for (int i = 0; i < k - 1; ++i) {
        const int p = inst.pendants[static_cast<std::size_t>(i)];
        CHECK(p == inst.core_size + i);
        CHECK(inst.h.edge(i).contains(p));
        int deg = 0;
        for (const VertexSet& e : inst.h.edges()) {
          if (e.contains(p)) ++deg;
        }
        CHECK(deg == 1);
        // the rest of the edge lies in the core
        for (int v : inst.h.edge(i)) {
          if (v != p) CHECK(v < inst.core_size);
        }
      }
    }
  }
  // determinism, and the log-base knob changes only the core size
  CHECK(gen_alon(5, 123).h == gen_alon(5, 123).h);
  CHECK(gen_alon(5, 123, LogBase::Two).core_size >= gen_alon(5, 123).core_size);
}

TEST_CASE("gen_random_uniform") {
  CHECK(gen_random_uniform(3, 1, 3, 42) ==
        Hypergraph::from_edge_lists(3, {{0, 1, 2}}));
  CHECK(gen_random_uniform(9, 5, 3, 7) == gen_random_uniform(9, 5, 3, 7));
  CHECK(gen_random_uniform(9, 5, 3, 7) != gen_random_uniform(9, 5, 3, 8));

  const Hypergraph h = gen_random_uniform(9, 5, 3, 11, true);
  ValidationChecks c;
  c.uniform_k = 3;
  c.isolate_free = true;
  CHECK(validate(h, c).ok());

  CHECK_THROWS_AS(gen_random_uniform(3, 2, 3, 0), InputError);   // only one 3-subset
  CHECK_THROWS_AS(gen_random_uniform(3, 1, 4, 0), InputError);   // k > n
  CHECK_THROWS_AS(gen_random_uniform(9, 2, 3, 0, true), InputError);  // m*k < n
}

TEST_CASE("grid value for k=2 via the solver") {
  CHECK(solver::gamma_g(gen_hk1(2)).length == 2);
}
