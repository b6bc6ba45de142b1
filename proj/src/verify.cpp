#include "hdg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include "hdg/errors.hpp"
#include "hdg/generators.hpp"
#include "hdg/solver.hpp"
#include "hdg/strategies.hpp"

namespace hdg::verify {

using game::Player;
using game::Variant;

std::string csv_header() {
  return "check_id,instance,values,bound,verdict,witness";
}

namespace {

std::string csv_field(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n') c = ' ';
  }
  return s;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

}  // namespace

std::string csv_row(const CheckResult& r) {
  return csv_field(r.id) + "," + csv_field(r.provenance) + "," +
         csv_field(r.values) + "," + csv_field(r.bound) + "," +
         verdict_name(r.verdict) + "," + csv_field(r.witness);
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.verdict == Verdict::Fail;
  });
}

CheckResult check_equivalence(const Hypergraph& h, const std::string& provenance) {
  CheckResult r{"equivalence", provenance, "", "gamma_g(H)=gamma_g([H]2)=tau_g(CNH)", Verdict::Pass, ""};
  const Hypergraph sec = two_section(h);
  const Hypergraph closed = cnh(h);
  const int gd = solver::gamma_g(h).length;
  const int gd2 = solver::gamma_g(sec).length;
  const int td = solver::tau_g(closed).length;
  const int gs = solver::gamma_g_prime(h).length;
  const int gs2 = solver::gamma_g_prime(sec).length;
  const int ts = solver::tau_g_prime(closed).length;
  r.values = "gamma_g=" + std::to_string(gd) + " gamma_g_2sec=" + std::to_string(gd2) +
             " tau_g_cnh=" + std::to_string(td) + " gamma_g'=" + std::to_string(gs) +
             " gamma_g'_2sec=" + std::to_string(gs2) + " tau_g'_cnh=" + std::to_string(ts);
  if (gd != gd2 || gd != td || gs != gs2 || gs != ts) {
    r.verdict = Verdict::Fail;
    r.witness = "values disagree";
  }
  return r;
}

namespace {

bool legal_full_game(const game::CoverSystem& sys, const std::vector<int>& seq) {
  game::GameState s = game::initial_state(sys, Player::Dominator);
  for (int v : seq) {
    if (!game::is_legal(sys, s, v)) return false;
    s = game::apply_move(sys, s, v);
  }
  return game::is_terminal(sys, s);
}

}  // namespace

CheckResult check_legal_sequence_equivalence(const Hypergraph& h,
                                             const std::string& provenance) {
  CheckResult r{"legal-sequence-equivalence", provenance, "", "same legal full games on H, [H]2, CNH", Verdict::Pass, ""};
  const int n = h.vertex_count();
  if (n > 5) {
    r.verdict = Verdict::Skip;
    r.witness = "exhaustive sequence check limited to n <= 5";
    return r;
  }
  const game::CoverSystem a = game::build(h, Variant::Domination);
  const game::CoverSystem b = game::build(two_section(h), Variant::Domination);
  const game::CoverSystem c = game::build(cnh(h), Variant::Transversal);

  std::uint64_t tested = 0;
  std::vector<int> seq;
  // depth-first enumeration of all sequences with repetition, length <= n
  std::function<bool()> rec = [&]() -> bool {
    if (!seq.empty()) {
      ++tested;
      const bool la = legal_full_game(a, seq);
      const bool lb = legal_full_game(b, seq);
      const bool lc = legal_full_game(c, seq);
      if (la != lb || la != lc) {
        std::string w = "sequence";
        for (int v : seq) w += " " + std::to_string(v);
        r.verdict = Verdict::Fail;
        r.witness = w;
        return false;
      }
    }
    if (static_cast<int>(seq.size()) == n) return true;
    for (int v = 0; v < n; ++v) {
      seq.push_back(v);
      const bool ok = rec();
      seq.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  rec();
  r.values = "sequences=" + std::to_string(tested);
  return r;
}

CheckResult check_continuation(const Hypergraph& h, int trials,
                               std::uint64_t seed, const std::string& provenance) {
  CheckResult r{"continuation", provenance, "", "A subset of B implies gamma_g(H|A) >= gamma_g(H|B)", Verdict::Pass, ""};
  std::mt19937_64 rng(seed);
  const int n = h.vertex_count();
  int done = 0;
  for (int t = 0; t < trials; ++t) {
    VertexSet b_set;
    for (int v = 0; v < n; ++v) {
      if (rng() & 1) b_set.add(v);
    }
    VertexSet a_set;
    for (int v : b_set) {
      if (rng() & 1) a_set.add(v);
    }
    for (Player p : {Player::Dominator, Player::Staller}) {
      const int va = solver::gamma_g_given(h, a_set, p).length;
      const int vb = solver::gamma_g_given(h, b_set, p).length;
      if (va < vb) {
        r.verdict = Verdict::Fail;
        r.witness = "trial " + std::to_string(t) + " first=" + game::to_string(p) +
                    " |A|=" + std::to_string(a_set.count()) +
                    " |B|=" + std::to_string(b_set.count()) +
                    " gamma(A)=" + std::to_string(va) +
                    " gamma(B)=" + std::to_string(vb);
        return r;
      }
    }
    ++done;
  }
  r.values = "pairs=" + std::to_string(done);
  return r;
}

namespace {

bool is_simple_graph(const Hypergraph& h) {
  std::unordered_set<VertexSet> seen;
  for (const VertexSet& e : h.edges()) {
    if (e.count() != 2 || !seen.insert(e).second) return false;
  }
  return true;
}

}  // namespace

CheckResult check_5_9(const Hypergraph& h, const std::string& provenance) {
  CheckResult r{"bound-5/9", provenance, "", "gamma_g, gamma_g' <= floor(5n/9)", Verdict::Pass, ""};
  const int n = h.vertex_count();

  ValidationChecks pre;
  pre.isolate_free = true;
  if (is_simple_graph(h)) {
    pre.g23 = true;
  } else {
    pre.min_edge_size_3 = true;
  }
  const ValidationReport rep = validate(h, pre);
  if (!rep.ok()) {
    r.verdict = Verdict::Skip;
    r.witness = "precondition: " + rep.to_string();
    return r;
  }

  const Hypergraph sec = is_simple_graph(h) ? h : two_section(h);
  const int gd = solver::gamma_g(sec).length;
  const int gs = solver::gamma_g_prime(sec).length;
  const int bound = 5 * n / 9;
  r.values = "n=" + std::to_string(n) + " gamma_g=" + std::to_string(gd) +
             " gamma_g'=" + std::to_string(gs) +
             " ratio=" + std::to_string(double(std::max(gd, gs)) / n);
  if (gd > bound || gs > bound) {
    r.verdict = Verdict::Fail;
    r.witness = "exceeds floor(5n/9)=" + std::to_string(bound);
  }
  return r;
}

CheckResult check_5_8(const Hypergraph& h, const std::string& provenance) {
  CheckResult r{"bound-5/8", provenance, "", "gamma_g <= floor(5n/8)", Verdict::Pass, ""};
  const int n = h.vertex_count();

  ValidationChecks pre;
  pre.isolate_free = true;
  ValidationReport rep = validate(h, pre);
  bool no_singletons = true;
  for (int i = 0; i < h.edge_count(); ++i) {
    if (h.edge(i).count() < 2) no_singletons = false;
  }
  if (!rep.ok() || !no_singletons) {
    r.verdict = Verdict::Skip;
    r.witness = !no_singletons ? "precondition: 1-element edge present"
                               : "precondition: " + rep.to_string();
    return r;
  }

  const int gd = solver::gamma_g(h).length;
  const int gs = solver::gamma_g_prime(h).length;  // recorded, not gated
  const int bound = 5 * n / 8;
  r.values = "n=" + std::to_string(n) + " gamma_g=" + std::to_string(gd) +
             " gamma_g'=" + std::to_string(gs);
  if (gd > bound) {
    r.verdict = Verdict::Fail;
    r.witness = "exceeds floor(5n/8)=" + std::to_string(bound);
  }
  return r;
}

CheckResult check_tau_chain(const Hypergraph& h, const std::string& provenance) {
  CheckResult r{"tau-chain", provenance, "",
                "tau_g(F)<=2tau(F)-1, tau(F)<=(1+ln k)n/k, gamma_g(H)=tau_g(F)",
                Verdict::Pass, ""};
  const int n = h.vertex_count();
  if (n == 0) {
    r.verdict = Verdict::Skip;
    r.witness = "empty hypergraph";
    return r;
  }
  const Hypergraph f = cnh(h);
  int k_min = f.edge(0).count();
  for (int i = 1; i < f.edge_count(); ++i) k_min = std::min(k_min, f.edge(i).count());

  const int tau_f = solver::tau(f);
  const int tau_g_f = solver::tau_g(f).length;
  const int gamma_g_h = solver::gamma_g(h).length;
  r.values = "n=" + std::to_string(n) + " k=" + std::to_string(k_min) +
             " tau=" + std::to_string(tau_f) + " tau_g=" + std::to_string(tau_g_f) +
             " gamma_g=" + std::to_string(gamma_g_h);

  if (tau_g_f > 2 * tau_f - 1) {
    r.verdict = Verdict::Fail;
    r.witness = "tau_g > 2 tau - 1";
    return r;
  }
  if (gamma_g_h != tau_g_f) {
    r.verdict = Verdict::Fail;
    r.witness = "gamma_g(H) != tau_g(CNH(H))";
    return r;
  }
  if (k_min >= 2) {
    const double rhs = (1.0 + std::log(double(k_min))) / k_min * n;
    const int floor_rhs = static_cast<int>(std::floor(rhs + 1e-12));
    if (tau_f > floor_rhs) {
      r.verdict = Verdict::Fail;
      r.witness = "tau exceeds (1+ln k)n/k = " + std::to_string(rhs);
      return r;
    }
  }
  return r;
}

// --- corpora ----------------------------------------------------------------

Hypergraph random_general_hypergraph(int n, int edges, std::uint64_t seed,
                                     bool isolate_free, int min_edge_size) {
  if (n < 1 || min_edge_size > n) {
    throw InputError("random_general_hypergraph: infeasible parameters");
  }
  std::mt19937_64 rng(seed);
  const int kMaxAttempts = 10000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<VertexSet> es;
    VertexSet touched;
    for (int i = 0; i < edges; ++i) {
      const int max_size = std::min(n, 4);
      const int size = min_edge_size +
                       static_cast<int>(rng() % std::uint64_t(max_size - min_edge_size + 1));
      VertexSet e;
      while (e.count() < size) e.add(static_cast<int>(rng() % std::uint64_t(n)));
      touched |= e;
      es.push_back(e);
    }
    if (!isolate_free || touched == VertexSet::full(n)) {
      return Hypergraph(n, std::move(es));
    }
  }
  throw InputError("random_general_hypergraph: retry budget exhausted");
}

void for_each_isolate_free_uniform(int n, int k,
                                   const std::function<void(const Hypergraph&)>& f) {
  if (n > 8) throw InputError("for_each_isolate_free_uniform: n > 8 unsupported");
  if (k > n) return;

  // all k-subsets in lexicographic order
  std::vector<VertexSet> all_edges;
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    VertexSet e;
    for (int v : comb) e.add(v);
    all_edges.push_back(e);
    int i = k - 1;
    while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++comb[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
  }

  const int m = static_cast<int>(all_edges.size());
  if (m > 24) throw InputError("for_each_isolate_free_uniform: too many potential edges");
  const VertexSet full = VertexSet::full(n);

  // 8-bit closed-neighborhood rows packed into one word; instances sharing
  // the signature play the same game and are enumerated once
  std::vector<std::uint64_t> row_bits(static_cast<std::size_t>(m), 0);
  std::vector<std::uint64_t> edge_word(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    std::uint64_t word = 0;
    for (int v : all_edges[static_cast<std::size_t>(i)]) word |= std::uint64_t{1} << v;
    edge_word[static_cast<std::size_t>(i)] = word;
    for (int v : all_edges[static_cast<std::size_t>(i)]) {
      row_bits[static_cast<std::size_t>(i)] |= word << (8 * v);
    }
  }

  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::uint64_t covered = 0;
    std::uint64_t sig = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        covered |= edge_word[static_cast<std::size_t>(i)];
        sig |= row_bits[static_cast<std::size_t>(i)];
      }
    }
    if (covered != ((std::uint64_t{1} << n) - 1)) continue;  // isolated vertex
    if (!seen.insert(sig).second) continue;
    std::vector<VertexSet> es;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) es.push_back(all_edges[static_cast<std::size_t>(i)]);
    }
    f(Hypergraph(n, std::move(es)));
  }
  (void)full;
}

// --- extremal scan ----------------------------------------------------------

namespace {

// minimum over all vertex permutations of the packed adjacency signature
std::uint64_t canonical_adjacency(const Hypergraph& h) {
  const int n = h.vertex_count();
  const std::vector<VertexSet> adj = h.adjacency();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t sig = 0;
    for (int v = 0; v < n; ++v) {
      std::uint64_t row = 0;
      for (int u : adj[static_cast<std::size_t>(v)]) {
        row |= std::uint64_t{1} << perm[static_cast<std::size_t>(u)];
      }
      sig |= row << (8 * perm[static_cast<std::size_t>(v)]);
    }
    best = std::min(best, sig);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double ratio_of(const Hypergraph& h) {
  const int gd = solver::gamma_g(h).length;
  const int gs = solver::gamma_g_prime(h).length;
  return double(std::max(gd, gs)) / h.vertex_count();
}

}  // namespace

ExtremalResult extremal_search(int n_max, int k, ScanMode mode,
                               std::uint64_t budget, std::uint64_t seed) {
  ExtremalResult res;
  if (mode == ScanMode::Exhaustive) {
    if (k == 3 && n_max > 7) {
      throw InputError("extremal_search: exhaustive mode limited to n <= 7 for k = 3");
    }
    if (n_max > 8) throw InputError("extremal_search: exhaustive mode limited to n <= 8");
    std::unordered_set<std::uint64_t> canon_seen;
    for (int n = k; n <= n_max && res.complete; ++n) {
      try {
        for_each_isolate_free_uniform(n, k, [&](const Hypergraph& h) {
          if (!res.complete) return;
          if (res.scanned >= budget) {
            res.complete = false;
            return;
          }
          ++res.scanned;
          if (!canon_seen.insert(canonical_adjacency(h)).second) return;
          const double ratio = ratio_of(h);
          if (ratio > res.best_ratio) {
            res.best_ratio = ratio;
            res.witness = h;
            res.witness_provenance = "exhaustive n=" + std::to_string(n);
          }
        });
      } catch (const InputError&) {
        res.complete = false;
      }
    }
    return res;
  }

  // random scan, seeded with the known constructions when they fit
  std::vector<std::pair<Hypergraph, std::string>> pool;
  if (k == 3 && n_max >= 9) pool.push_back({generators::gen_hk1(3), "gen_hk1(3)"});
  if (2 * k + 1 <= n_max) {
    pool.push_back({generators::gen_hk2(k), "gen_hk2(" + std::to_string(k) + ")"});
  }
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    const int n = k + 1 + static_cast<int>(rng() % std::uint64_t(std::max(1, n_max - k)));
    const int min_m = (n + k - 1) / k;
    const int m = min_m + static_cast<int>(rng() % std::uint64_t(min_m + 2));
    const std::uint64_t child_seed = rng();
    try {
      Hypergraph h = generators::gen_random_uniform(n, m, k, child_seed, true);
      pool.push_back({std::move(h),
                      "gen_random_uniform(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
                          ",k=" + std::to_string(k) + ",seed=" + std::to_string(child_seed) + ")"});
    } catch (const InputError&) {
      // infeasible draw; skip
    }
  }
  for (const auto& [h, prov] : pool) {
    ++res.scanned;
    const double ratio = ratio_of(h);
    if (ratio > res.best_ratio) {
      res.best_ratio = ratio;
      res.witness = h;
      res.witness_provenance = prov;
    }
  }
  return res;
}

// --- suites -----------------------------------------------------------------

std::vector<CheckResult> suite_equivalence(int count, int n_max, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = 3 + static_cast<int>(rng() % std::uint64_t(std::max(1, n_max - 2)));
    const int m = 1 + static_cast<int>(rng() % std::uint64_t(n));
    const std::uint64_t child = rng();
    const Hypergraph h = random_general_hypergraph(n, m, child, false);
    out.push_back(check_equivalence(
        h, "random_general(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
               ",seed=" + std::to_string(child) + ")"));
  }
  return out;
}

std::vector<CheckResult> suite_legal_sequences(int count, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);  // 2..5
    const int m = 1 + static_cast<int>(rng() % std::uint64_t(n));
    const std::uint64_t child = rng();
    const Hypergraph h = random_general_hypergraph(n, m, child, false);
    out.push_back(check_legal_sequence_equivalence(
        h, "random_general(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
               ",seed=" + std::to_string(child) + ")"));
  }
  return out;
}

std::vector<CheckResult> suite_continuation(int instances, int pairs_per_instance,
                                            int n_max, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < instances; ++i) {
    const int n = 4 + static_cast<int>(rng() % std::uint64_t(std::max(1, n_max - 3)));
    const int m = 2 + static_cast<int>(rng() % std::uint64_t(n));
    const std::uint64_t child = rng();
    const Hypergraph h = random_general_hypergraph(n, m, child, false);
    out.push_back(check_continuation(
        h, pairs_per_instance, rng(),
        "random_general(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
            ",seed=" + std::to_string(child) + ")"));
  }
  return out;
}

std::vector<CheckResult> suite_bounds_exhaustive(int n_max) {
  std::vector<CheckResult> out;
  for (int n = 3; n <= std::min(n_max, 6); ++n) {
    std::uint64_t classes = 0, checked = 0;
    bool ok = true;
    for_each_isolate_free_uniform(n, 3, [&](const Hypergraph& h) {
      ++classes;
      const CheckResult r = check_5_9(h, "exhaustive n=" + std::to_string(n));
      if (r.verdict != Verdict::Pass) {
        ok = false;
        out.push_back(r);
      }
      ++checked;
    });
    CheckResult summary{"bound-5/9-exhaustive", "n=" + std::to_string(n),
                        "signature_classes=" + std::to_string(classes) +
                            " checked=" + std::to_string(checked),
                        "gamma_g, gamma_g' <= floor(5n/9)",
                        ok ? Verdict::Pass : Verdict::Fail, ok ? "" : "see rows above"};
    out.push_back(std::move(summary));
  }
  return out;
}

std::vector<CheckResult> suite_bounds_random(int count, int n_max, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  // isolate-free 3-uniform corpus: 5/9 bound plus the tau chain
  for (int i = 0; i < count; ++i) {
    const int n = 4 + static_cast<int>(rng() % std::uint64_t(std::max(1, n_max - 3)));
    const int min_m = (n + 2) / 3;
    const int m = min_m + 1 + static_cast<int>(rng() % std::uint64_t(min_m + 2));
    const std::uint64_t child = rng();
    Hypergraph h;
    try {
      h = generators::gen_random_uniform(n, m, 3, child, true);
    } catch (const InputError&) {
      continue;
    }
    const std::string prov = "gen_random_uniform(n=" + std::to_string(n) +
                             ",m=" + std::to_string(m) + ",k=3,seed=" +
                             std::to_string(child) + ",iso=1)";
    out.push_back(check_5_9(h, prov));
    out.push_back(check_tau_chain(h, prov));
  }
  // mixed-size corpus without singleton edges: 5/8 bound plus the tau chain
  for (int i = 0; i < count / 2; ++i) {
    const int n = 4 + static_cast<int>(rng() % std::uint64_t(std::max(1, n_max - 3)));
    const int m = (n + 1) / 2 + 1 + static_cast<int>(rng() % std::uint64_t(n));
    const std::uint64_t child = rng();
    Hypergraph h;
    try {
      h = random_general_hypergraph(n, m, child, true, 2);
    } catch (const InputError&) {
      continue;
    }
    const std::string prov = "random_general(n=" + std::to_string(n) +
                             ",m=" + std::to_string(m) + ",seed=" +
                             std::to_string(child) + ",iso=1,min_size=2)";
    out.push_back(check_5_8(h, prov));
    out.push_back(check_tau_chain(h, prov));
  }
  return out;
}

namespace {

CheckResult audit_playout(const Hypergraph& h, const strategies::Strategy& stall,
                          Player first, const std::string& provenance) {
  CheckResult r{"audit", provenance, "", "audit_lemmas all pass", Verdict::Pass, ""};
  const strategies::Playout p =
      strategies::playout(h, strategies::greedy_dominator(), stall, first);
  const strategies::AuditReport rep = strategies::audit_lemmas(p);
  r.values = "n=" + std::to_string(p.gstar.vertex_count()) +
             " length=" + std::to_string(p.length()) +
             " staller=" + stall.name + " first=" + game::to_string(first);
  if (!rep.all_pass) {
    r.verdict = Verdict::Fail;
    for (const strategies::AuditCheck& c : rep.checks) {
      if (!c.pass) {
        r.witness = c.id + ": " + c.detail;
        break;
      }
    }
  }
  return r;
}

Hypergraph random_g23_instance(int n_max, std::mt19937_64& rng, std::string* prov) {
  const int n = 6 + static_cast<int>(rng() % std::uint64_t(std::max(1, n_max - 5)));
  const int min_m = (n + 2) / 3;
  const int m = min_m + 1 + static_cast<int>(rng() % std::uint64_t(min_m + 3));
  const std::uint64_t child = rng();
  *prov = "gen_random_uniform(n=" + std::to_string(n) + ",m=" + std::to_string(m) +
          ",k=3,seed=" + std::to_string(child) + ",iso=1)";
  return generators::gen_random_uniform(n, m, 3, child, true);
}

}  // namespace

std::vector<CheckResult> suite_audit(int optimal_count, int optimal_n_max,
                                     int fuzz_count, int fuzz_n_max,
                                     std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < optimal_count; ++i) {
    std::string prov;
    Hypergraph h;
    try {
      h = random_g23_instance(optimal_n_max, rng, &prov);
    } catch (const InputError&) {
      continue;
    }
    const Player first = i % 2 == 0 ? Player::Dominator : Player::Staller;
    out.push_back(audit_playout(h, strategies::staller_optimal(), first, prov));
  }
  for (int i = 0; i < fuzz_count; ++i) {
    std::string prov;
    Hypergraph h;
    try {
      h = random_g23_instance(fuzz_n_max, rng, &prov);
    } catch (const InputError&) {
      continue;
    }
    const Player first = i % 2 == 0 ? Player::Dominator : Player::Staller;
    const strategies::Strategy stall = i % 4 < 2
                                           ? strategies::staller_random(rng())
                                           : strategies::staller_greedy_min();
    out.push_back(audit_playout(h, stall, first, prov));
  }
  return out;
}

}  // namespace hdg::verify
