#ifndef KMATCH_ORACLE_HPP
#define KMATCH_ORACLE_HPP

// Brute-force ground truth. Everything here enumerates explicitly; nothing
// relies on the coefficient tables or on the degree factorization.

#include "kmatch/coeffs.hpp"
#include "kmatch/exact.hpp"
#include "kmatch/graph.hpp"
#include "kmatch/matrix.hpp"
#include "kmatch/partitions.hpp"

#include <span>
#include <vector>

namespace kmatch {

/// Sets of k pairwise vertex-disjoint edges; N(0) = 1. Guard: |E| <= 64, k <= 8.
ExactInt count_k_matchings(const Graph& g, int k);

/// Sets of k directed edges (each edge in both orientations) whose 2k
/// endpoints are distinct. Same guard as count_k_matchings.
ExactInt count_k_directed_matchings(const Graph& g, int k);

/// k-subsets of the 1-entries of A with distinct rows and distinct columns.
/// Guard: n <= 8 or k <= 4.
ExactInt count_rook_placements(const Graph& g, int k);

/// Sum over injective sigma: {1..k} -> {1..n} of prod_i x[sigma(i)].
/// Guard: n <= 10. Zero when k > n.
ExactInt arrangement_sum(std::span<const long> x, int k);

/// Sum over injective sigma: {1..m} -> {1..n} of prod_i X(i, sigma(i)),
/// using the first m rows of X. Guard: m <= n <= 8.
ExactInt injection_sum(const IntMatrix& x, int m);

/// Normalized double sum over all n! permutations phi and all sigma in
/// P(n,k) of prod_j A[sigma(j)][phi(sigma(j))]. Guard: n <= 7.
ExactRat lemma1_sum(const Graph& g, int k);

/// The same normalization applied to the g'-weighted free-index sums, with
/// phi still ranging over all n! permutations. Guard: n <= 7.
ExactRat theorem1_eval(const Graph& g, int k, GMode gmode);

/// Free l-tuples (j_1..j_l), repeats included, against injections
/// phi in P(n,l), each weighted by (n-l)! g'_k(l). Guard: n <= 6.
ExactRat theorem2_eval(const Graph& g, int k, GMode gmode);

/// sum_{p in [n]^q} sum_{j in [n]^m} prod_h prod_{i in P_h} A[j_i][p_h] by
/// explicit nested loops. Guard: n <= 5, m <= 5.
ExactInt direct_partition_sum(const Graph& g, const SetPartition& partition);

/// 1 / (k! (n-k)! 2^k), zero when k > n.
ExactRat matching_prefactor(int n, int k);

} // namespace kmatch

#endif // KMATCH_ORACLE_HPP
