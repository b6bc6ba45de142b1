#include "hdg/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "hdg/errors.hpp"

namespace hdg {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > VertexSet::kCapacity) {
    throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(VertexSet::kCapacity) + "]");
  }
  const VertexSet all = VertexSet::full(n);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].empty()) {
      throw InputError("edge " + std::to_string(i) + " is empty");
    }
    if (!edges_[i].subset_of(all)) {
      throw InputError("edge " + std::to_string(i) +
                       " contains a vertex outside 0.." + std::to_string(n - 1));
    }
  }
}

Hypergraph Hypergraph::from_edge_lists(
    int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    VertexSet s;
    for (int v : edges[i]) {
      if (v < 0 || v >= VertexSet::kCapacity) {
        throw InputError("edge " + std::to_string(i) + " vertex " +
                         std::to_string(v) + " out of range");
      }
      if (s.contains(v)) {
        throw InputError("edge " + std::to_string(i) + " repeats vertex " +
                         std::to_string(v));
      }
      s.add(v);
    }
    sets.push_back(s);
  }
  return Hypergraph(n, std::move(sets));
}

VertexSet Hypergraph::closed_neighborhood(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range 0.." +
                     std::to_string(n_ - 1));
  }
  VertexSet nb = VertexSet::single(v);
  for (const VertexSet& e : edges_) {
    if (e.contains(v)) nb |= e;
  }
  return nb;
}

VertexSet Hypergraph::open_neighborhood(int v) const {
  VertexSet nb = closed_neighborhood(v);
  nb.remove(v);
  return nb;
}

std::vector<VertexSet> Hypergraph::adjacency() const {
  std::vector<VertexSet> adj(static_cast<std::size_t>(n_));
  for (const VertexSet& e : edges_) {
    for (int v : e) adj[static_cast<std::size_t>(v)] |= e;
  }
  for (int v = 0; v < n_; ++v) adj[static_cast<std::size_t>(v)].remove(v);
  return adj;
}

Hypergraph two_section(const Hypergraph& h) {
  std::vector<VertexSet> pairs;
  std::unordered_set<VertexSet> seen;
  for (const VertexSet& e : h.edges()) {
    for (int u : e) {
      for (int v : e) {
        if (v <= u) continue;
        VertexSet p = VertexSet::single(u) | VertexSet::single(v);
        if (seen.insert(p).second) pairs.push_back(p);
      }
    }
  }
  return Hypergraph(h.vertex_count(), std::move(pairs));
}

Hypergraph cnh(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  edges.reserve(static_cast<std::size_t>(h.vertex_count()));
  for (int v = 0; v < h.vertex_count(); ++v) {
    edges.push_back(h.closed_neighborhood(v));
  }
  return Hypergraph(h.vertex_count(), std::move(edges));
}

namespace {

// is `h` a simple 2-uniform graph? returns offending edge index otherwise
std::optional<int> non_simple_graph_witness(const Hypergraph& h) {
  std::unordered_set<VertexSet> seen;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (h.edge(i).count() != 2) return i;
    if (!seen.insert(h.edge(i)).second) return i;
  }
  return std::nullopt;
}

std::string edge_to_string(const VertexSet& e) {
  std::string s = "{";
  bool first = true;
  for (int v : e) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace

Hypergraph triangle_hypergraph(const Hypergraph& g) {
  if (auto bad = non_simple_graph_witness(g)) {
    throw InputError("triangle_hypergraph: input is not a simple 2-uniform "
                     "graph (edge " + std::to_string(*bad) + ")");
  }
  const std::vector<VertexSet> adj = g.adjacency();
  std::vector<VertexSet> tris;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (v <= u) continue;
      VertexSet common = adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)];
      for (int w : common) {
        if (w <= v) continue;
        tris.push_back(VertexSet::single(u) | VertexSet::single(v) |
                       VertexSet::single(w));
      }
    }
  }
  return Hypergraph(g.vertex_count(), std::move(tris));
}

bool ValidationReport::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const ValidationItem& it) { return it.pass; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const ValidationItem& it : items) {
    out += it.check;
    out += it.pass ? ": pass" : ": fail (" + it.witness + ")";
    out += "\n";
  }
  return out;
}

ValidationReport validate(const Hypergraph& h, const ValidationChecks& checks) {
  ValidationReport rep;
  const int n = h.vertex_count();

  if (checks.isolate_free) {
    VertexSet touched;
    for (const VertexSet& e : h.edges()) touched |= e;
    ValidationItem it{"isolate-free", true, ""};
    for (int v = 0; v < n; ++v) {
      if (!touched.contains(v)) {
        it.pass = false;
        it.witness = "vertex " + std::to_string(v);
        break;
      }
    }
    rep.items.push_back(std::move(it));
  }

  if (checks.uniform_k) {
    const int k = *checks.uniform_k;
    ValidationItem it{std::to_string(k) + "-uniform", true, ""};
    for (int i = 0; i < h.edge_count(); ++i) {
      if (h.edge(i).count() != k) {
        it.pass = false;
        it.witness = "edge " + edge_to_string(h.edge(i));
        break;
      }
    }
    rep.items.push_back(std::move(it));
  }

  if (checks.min_edge_size_3) {
    ValidationItem it{"min-edge-size-3", true, ""};
    for (int i = 0; i < h.edge_count(); ++i) {
      if (h.edge(i).count() < 3) {
        it.pass = false;
        it.witness = "edge " + edge_to_string(h.edge(i));
        break;
      }
    }
    rep.items.push_back(std::move(it));
  }

  if (checks.g23 || checks.every_vertex_in_triangle) {
    const auto bad = non_simple_graph_witness(h);
    std::vector<VertexSet> adj;
    if (!bad) adj = h.adjacency();

    if (checks.g23) {
      ValidationItem it{"g23", true, ""};
      if (bad) {
        it.pass = false;
        it.witness = "not a simple graph, edge " + std::to_string(*bad);
      } else {
        for (int i = 0; i < h.edge_count() && it.pass; ++i) {
          const VertexSet& e = h.edge(i);
          const int u = e.first();
          const int v = e.next_after(u);
          if ((adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]).empty()) {
            it.pass = false;
            it.witness = "edge " + edge_to_string(e);
          }
        }
      }
      rep.items.push_back(std::move(it));
    }

    if (checks.every_vertex_in_triangle) {
      ValidationItem it{"every-vertex-in-triangle", true, ""};
      if (bad) {
        it.pass = false;
        it.witness = "not a simple graph, edge " + std::to_string(*bad);
      } else {
        for (int v = 0; v < n && it.pass; ++v) {
          bool in_triangle = false;
          for (int u : adj[static_cast<std::size_t>(v)]) {
            if (!(adj[static_cast<std::size_t>(v)] & adj[static_cast<std::size_t>(u)]).empty()) {
              in_triangle = true;
              break;
            }
          }
          if (!in_triangle) {
            it.pass = false;
            it.witness = "vertex " + std::to_string(v);
          }
        }
      }
      rep.items.push_back(std::move(it));
    }
  }

  return rep;
}

namespace {

// strip trailing whitespace/CR; returns true if the line carries data
bool clean_line(std::string& line) {
  while (!line.empty() &&
         (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  std::size_t start = line.find_first_not_of(" \t");
  if (start == std::string::npos) return false;
  if (line[start] == '#') return false;
  if (start > 0) line.erase(0, start);
  return true;
}

}  // namespace

Hypergraph parse_hg(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::vector<int>> edges;
  while (std::getline(in, line)) {
    if (!clean_line(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) {
        throw InputError("bad header line, expected `n m`: " + line);
      }
      std::string extra;
      if (ls >> extra) throw InputError("trailing tokens on header line: " + line);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<int>(edges.size()) >= m) {
      throw InputError("more than " + std::to_string(m) + " edge lines");
    }
    std::vector<int> e;
    int v;
    while (ls >> v) e.push_back(v);
    if (!ls.eof()) throw InputError("non-integer token in edge line: " + line);
    if (e.empty()) throw InputError("empty edge line");
    edges.push_back(std::move(e));
  }
  if (n < 0) throw InputError("missing header line `n m`");
  if (static_cast<int>(edges.size()) != m) {
    throw InputError("expected " + std::to_string(m) + " edges, got " +
                     std::to_string(edges.size()));
  }
  return Hypergraph::from_edge_lists(n, edges);
}

Hypergraph parse_hg_string(const std::string& text) {
  std::istringstream in(text);
  return parse_hg(in);
}

Hypergraph load_hg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_hg(in);
}

std::string serialize_hg(const Hypergraph& h) {
  std::string out = std::to_string(h.vertex_count()) + " " +
                    std::to_string(h.edge_count()) + "\n";
  for (const VertexSet& e : h.edges()) {
    bool first = true;
    for (int v : e) {
      if (!first) out += " ";
      out += std::to_string(v);
      first = false;
    }
    out += "\n";
  }
  return out;
}

void save_hg(const Hypergraph& h, const std::string& path,
             const std::vector<std::string>& comment_lines) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  for (const std::string& c : comment_lines) out << "# " << c << "\n";
  out << serialize_hg(h);
}

}  // namespace hdg
