#ifndef KMATCH_HARNESS_HPP
#define KMATCH_HARNESS_HPP

#include "kmatch/fastcount.hpp"
#include "kmatch/report.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kmatch {

/// Instance-space bounds for one claim. Unset fields take the claim's default.
struct Budget {
  std::optional<int> n_max;
  std::optional<int> k_max;
  std::uint64_t seed = 0;
  /// Random instances per (size, shape) cell for the vector/matrix claims.
  int trials = 20;
  /// LEMMA4 polynomial check: 2 <= k <= poly_k_max, 0 <= s <= s_max.
  int poly_k_max = 6;
  int s_max = 8;
};

struct ClaimLimits {
  int default_n_max;
  int default_k_max;
  int max_n;
  int max_k;
};

ClaimLimits claim_limits(ClaimId claim);

/// Worker count: KMATCH_THREADS if set and positive, else hardware concurrency.
int worker_count();

/// Evaluates both sides of `claim` on every instance in the budget, for every
/// applicable entry of `options` (claims without options ignore it). Records
/// come back in canonical instance order regardless of worker count.
/// Throws capacity_error before any work if the budget exceeds the claim's limits.
std::vector<VerificationRecord> verify_claim(ClaimId claim, const Budget& budget,
                                             const std::vector<FastCountOptions>& options =
                                                 all_option_combinations());

/// verify_claim over several claims, packaged as a report.
VerificationReport verify_claims(const std::vector<ClaimId>& claims, const Budget& budget,
                                 const std::vector<FastCountOptions>& options =
                                     all_option_combinations());

/// fast_count against count_k_matchings for every labeled graph with
/// 1 <= n <= n_max, every 1 <= k <= k_max and every option combination.
VerificationReport discrepancy_search(int n_max, int k_max,
                                      const std::vector<FastCountOptions>& options =
                                          all_option_combinations());

/// Canonical key used in instance descriptions: "n=<n> g6=<graph6>".
std::string graph_key(const Graph& g);

} // namespace kmatch

#endif // KMATCH_HARNESS_HPP
