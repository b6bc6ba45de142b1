#pragma once

// Property checks tying solver outputs to the equivalences and bounds the
// rest of the code relies on, plus the small-instance extremal scan. Every
// check returns a CheckResult carrying enough provenance to replay a
// failure; failures are data, not exceptions.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hdg/hypergraph.hpp"

namespace hdg::verify {

enum class Verdict { Pass, Fail, Skip };

struct CheckResult {
  std::string id;
  std::string provenance;  // generator spec or file reference
  std::string values;      // measured quantities, space separated k=v pairs
  std::string bound;       // the inequality or equality being checked
  Verdict verdict = Verdict::Pass;
  std::string witness;     // failure witness or skip reason
};

std::string csv_header();
std::string csv_row(const CheckResult& r);
bool all_pass(const std::vector<CheckResult>& results);

// gamma_g(H) = gamma_g of the 2-section = tau_g of the closed neighborhood
// hypergraph, and the Staller-start triple.
CheckResult check_equivalence(const Hypergraph& h, const std::string& provenance);

// For every vertex sequence (with repetition, length <= n): being a legal
// full game is the same property in all three systems. Exhaustive, so only
// sensible for n <= 5.
CheckResult check_legal_sequence_equivalence(const Hypergraph& h,
                                             const std::string& provenance);

// Sampled nested pairs A subseteq B: dominating more never lengthens the
// optimal remainder, for either player to move.
CheckResult check_continuation(const Hypergraph& h, int trials,
                               std::uint64_t seed, const std::string& provenance);

// gamma_g and gamma_g' at most floor(5n/9). Applies to isolate-free inputs
// that are either simple graphs with every edge in a triangle, or
// hypergraphs with no edge smaller than 3; anything else is skipped with a
// reason.
CheckResult check_5_9(const Hypergraph& h, const std::string& provenance);

// gamma_g at most floor(5n/8) for isolate-free inputs without 1-element
// edges. The Staller-start value is recorded but not gated.
CheckResult check_5_8(const Hypergraph& h, const std::string& provenance);

// For F = cnh(H) with minimum edge size k: tau_g(F) <= 2 tau(F) - 1,
// tau(F) <= (1+ln k)n/k when k >= 2, and gamma_g(H) = tau_g(F).
CheckResult check_tau_chain(const Hypergraph& h, const std::string& provenance);

// --- corpora ----------------------------------------------------------------

// Mixed-size random hypergraph (edge sizes min_edge_size..4), duplicates
// possible. Fuzzing substrate for the equivalence and continuation suites.
Hypergraph random_general_hypergraph(int n, int edges, std::uint64_t seed,
                                     bool isolate_free, int min_edge_size = 1);

// Calls f once per distinct closed-neighborhood signature among all
// isolate-free k-uniform edge subsets on exactly n vertices (instances with
// equal signatures have identical games). Requires n <= 8.
void for_each_isolate_free_uniform(int n, int k,
                                   const std::function<void(const Hypergraph&)>& f);

// --- extremal scan ----------------------------------------------------------

enum class ScanMode { Exhaustive, Random };

struct ExtremalResult {
  double best_ratio = 0.0;  // max over scanned H of max(gamma_g, gamma_g')/n
  Hypergraph witness;
  std::string witness_provenance;
  bool complete = true;  // false when the budget ran out first
  std::uint64_t scanned = 0;
};

// Exhaustive mode enumerates edge subsets up to n_max vertices with
// brute-force canonical deduplication (limited to n_max <= 7 for k = 3);
// random mode draws `budget` seeded instances and always includes the known
// grid construction when it fits.
ExtremalResult extremal_search(int n_max, int k, ScanMode mode,
                               std::uint64_t budget, std::uint64_t seed);

// --- suites -----------------------------------------------------------------

std::vector<CheckResult> suite_equivalence(int count, int n_max, std::uint64_t seed);
std::vector<CheckResult> suite_legal_sequences(int count, std::uint64_t seed);
std::vector<CheckResult> suite_continuation(int instances, int pairs_per_instance,
                                            int n_max, std::uint64_t seed);
std::vector<CheckResult> suite_bounds_exhaustive(int n_max);
std::vector<CheckResult> suite_bounds_random(int count, int n_max, std::uint64_t seed);
std::vector<CheckResult> suite_audit(int optimal_count, int optimal_n_max,
                                     int fuzz_count, int fuzz_n_max,
                                     std::uint64_t seed);

}  // namespace hdg::verify
