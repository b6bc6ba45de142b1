#pragma once

// Hypergraph representation and the structural transformations the game
// machinery is built on: 2-section graph, closed neighborhood hypergraph,
// triangle hypergraph, validation, and the .hg text format.
//
// Vertices are dense integers 0..n-1. Edges are vertex sets stored in
// insertion order; duplicate edges are allowed (the closed neighborhood
// hypergraph produces them), duplicate vertices within an edge are not.
// Instances are immutable after construction.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hdg/vertex_set.hpp"

namespace hdg {

class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws InputError on out-of-range vertices, empty edges, or n outside
  // [0, VertexSet::kCapacity].
  Hypergraph(int n, std::vector<VertexSet> edges);

  static Hypergraph from_edge_lists(int n,
                                    const std::vector<std::vector<int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  VertexSet vertex_mask() const { return VertexSet::full(n_); }

  // N[v] = {v} plus every vertex sharing an edge with v. O(m) scan.
  VertexSet closed_neighborhood(int v) const;
  // N(v), i.e. closed neighborhood minus v itself.
  VertexSet open_neighborhood(int v) const;

  // Open neighborhoods of all vertices in one pass over the edges.
  std::vector<VertexSet> adjacency() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// Graph on the same vertices joining every pair that co-occurs in some edge;
// output is 2-uniform with no duplicate edges, pairs listed in first-seen
// order with ascending endpoints.
Hypergraph two_section(const Hypergraph& h);

// Closed neighborhood hypergraph: n edges, edge i = N[i]. Duplicates kept.
Hypergraph cnh(const Hypergraph& h);

// One 3-edge per triangle of a simple 2-uniform graph, in lexicographic
// order. Throws InputError if the input is not a simple 2-uniform graph.
Hypergraph triangle_hypergraph(const Hypergraph& g);

// --- validation ------------------------------------------------------------

struct ValidationChecks {
  bool isolate_free = false;
  // require every edge to have exactly k vertices
  std::optional<int> uniform_k;
  bool min_edge_size_3 = false;
  // simple 2-uniform graph whose every edge lies in a triangle
  bool g23 = false;
  // simple 2-uniform graph whose every vertex lies in a triangle
  bool every_vertex_in_triangle = false;
};

struct ValidationItem {
  std::string check;
  bool pass = false;
  std::string witness;  // offending vertex/edge when pass is false
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const;
  std::string to_string() const;
};

// Failures are data in the report, not errors.
ValidationReport validate(const Hypergraph& h, const ValidationChecks& checks);

// --- .hg text format --------------------------------------------------------
//
//   # comment lines start with '#'
//   n m
//   v v v ...        (m lines, one edge per line)
//
// Trailing whitespace is ignored; blank lines are skipped. The serializer
// emits edges in stored order with vertices ascending.

Hypergraph parse_hg(std::istream& in);
Hypergraph parse_hg_string(const std::string& text);
Hypergraph load_hg(const std::string& path);

std::string serialize_hg(const Hypergraph& h);
void save_hg(const Hypergraph& h, const std::string& path,
             const std::vector<std::string>& comment_lines = {});

}  // namespace hdg
