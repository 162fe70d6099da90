#include "kmatch/oracle.hpp"

#include "kmatch/detail/tuple.hpp"
#include "kmatch/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace kmatch {

namespace {

void check_matching_guard(const Graph& g, int k) {
  if (k < 0)
    throw input_error("k must be nonnegative");
  if (g.edge_count() > 64 || k > 8)
    throw capacity_error("matching enumeration is limited to |E| <= 64 and k <= 8");
}

// Counts k-subsets of `arcs` (index-increasing) whose endpoints are pairwise
// distinct across the whole subset.
std::int64_t count_disjoint(const std::vector<Graph::Edge>& arcs, std::size_t from, int k,
                            std::vector<char>& used) {
  if (k == 0)
    return 1;
  std::int64_t total = 0;
  for (std::size_t e = from; e < arcs.size(); ++e) {
    auto [a, b] = arcs[e];
    if (used[a] || used[b])
      continue;
    used[a] = used[b] = 1;
    total += count_disjoint(arcs, e + 1, k - 1, used);
    used[a] = used[b] = 0;
  }
  return total;
}

std::int64_t count_rooks(const std::vector<Graph::Edge>& cells, std::size_t from, int k,
                         std::vector<char>& rows, std::vector<char>& cols) {
  if (k == 0)
    return 1;
  std::int64_t total = 0;
  for (std::size_t e = from; e < cells.size(); ++e) {
    auto [r, c] = cells[e];
    if (rows[r] || cols[c])
      continue;
    rows[r] = cols[c] = 1;
    total += count_rooks(cells, e + 1, k - 1, rows, cols);
    rows[r] = cols[c] = 0;
  }
  return total;
}

// Sum over injective sequences of length `left` drawn from unused positions.
ExactInt arrange(std::span<const long> x, int left, std::uint32_t used) {
  if (left == 0)
    return 1;
  ExactInt total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((used >> i & 1) || x[i] == 0)
      continue;
    total += x[i] * arrange(x, left - 1, used | (1u << i));
  }
  return total;
}

ExactInt inject(const IntMatrix& x, int row, int m, std::uint32_t used) {
  if (row > m)
    return 1;
  ExactInt total = 0;
  for (int c = 1; c <= x.cols(); ++c) {
    long v = x(row, c);
    if ((used >> c & 1) || v == 0)
      continue;
    total += v * inject(x, row + 1, m, used | (1u << c));
  }
  return total;
}

std::vector<int> identity_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

} // namespace

ExactRat matching_prefactor(int n, int k) {
  if (k > n)
    return ExactRat(0);
  return ExactRat(ExactInt(1), factorial(k) * factorial(n - k) * pow(ExactInt(2), k));
}

ExactInt count_k_matchings(const Graph& g, int k) {
  check_matching_guard(g, k);
  std::vector<char> used(g.n() + 1, 0);
  return ExactInt(static_cast<long>(count_disjoint(g.edges(), 0, k, used)));
}

ExactInt count_k_directed_matchings(const Graph& g, int k) {
  check_matching_guard(g, k);
  std::vector<Graph::Edge> arcs;
  for (auto [a, b] : g.edges()) {
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  std::vector<char> used(g.n() + 1, 0);
  return ExactInt(static_cast<long>(count_disjoint(arcs, 0, k, used)));
}

ExactInt count_rook_placements(const Graph& g, int k) {
  if (k < 0)
    throw input_error("k must be nonnegative");
  if (g.n() > 8 && k > 4)
    throw capacity_error("rook placement enumeration requires n <= 8 or k <= 4");
  std::vector<Graph::Edge> cells;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = 1; j <= g.n(); ++j)
      if (g.adj(i, j))
        cells.emplace_back(i, j);
  std::vector<char> rows(g.n() + 1, 0), cols(g.n() + 1, 0);
  return ExactInt(static_cast<long>(count_rooks(cells, 0, k, rows, cols)));
}

ExactInt arrangement_sum(std::span<const long> x, int k) {
  if (x.size() > 10)
    throw capacity_error("arrangement_sum is limited to n <= 10");
  if (k < 0)
    throw input_error("k must be nonnegative");
  if (k > static_cast<int>(x.size()))
    return 0;
  return arrange(x, k, 0);
}

ExactInt injection_sum(const IntMatrix& x, int m) {
  if (m < 0 || m > x.rows())
    throw input_error("injection_sum: m outside 0..rows");
  if (x.cols() > 8)
    throw capacity_error("injection_sum is limited to n <= 8");
  if (m > x.cols())
    return 0;
  return inject(x, 1, m, 0);
}

ExactRat lemma1_sum(const Graph& g, int k) {
  const int n = g.n();
  if (n > 7)
    throw capacity_error("lemma1_sum enumerates all n! permutations; limited to n <= 7");
  if (k < 0)
    throw input_error("k must be nonnegative");
  ExactInt raw = 0;
  std::vector<long> x(n);
  auto phi = identity_perm(n);
  do {
    for (int j = 1; j <= n; ++j)
      x[j - 1] = g.adj(j, phi[j - 1]);
    raw += arrangement_sum(x, k);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return matching_prefactor(n, k) * ExactRat(raw);
}

ExactRat theorem1_eval(const Graph& g, int k, GMode gmode) {
  const int n = g.n();
  if (n > 7)
    throw capacity_error("theorem1_eval enumerates all n! permutations; limited to n <= 7");
  if (k < 1)
    throw input_error("k must be at least 1");
  if (k > 8)
    throw capacity_error("theorem1_eval is limited to k <= 8");
  if (k > n)
    return ExactRat(0);
  const auto& gp = compute_gprime(k, gmode);
  // per_l[l-1] = sum_phi sum_{j in [n]^l} prod_h A[j_h][phi(j_h)]
  std::vector<std::int64_t> per_l(k, 0);
  auto phi = identity_perm(n);
  do {
    for (int l = 1; l <= k; ++l) {
      std::vector<int> j(l, 1);
      do {
        int prod = 1;
        for (int h = 0; h < l && prod; ++h)
          prod = g.adj(j[h], phi[j[h] - 1]);
        per_l[l - 1] += prod;
      } while (detail::next_tuple(j, n));
    }
  } while (std::next_permutation(phi.begin(), phi.end()));
  ExactInt total = 0;
  for (int l = 1; l <= k; ++l)
    total += gp(l) * ExactInt(static_cast<long>(per_l[l - 1]));
  return matching_prefactor(n, k) * ExactRat(total);
}

ExactRat theorem2_eval(const Graph& g, int k, GMode gmode) {
  const int n = g.n();
  if (n > 6)
    throw capacity_error("theorem2_eval is limited to n <= 6");
  if (k < 1)
    throw input_error("k must be at least 1");
  if (k > 8)
    throw capacity_error("theorem2_eval is limited to k <= 8");
  const auto& gp = compute_gprime(k, gmode);
  ExactInt total = 0;
  for (int l = 1; l <= std::min(k, n); ++l) {
    ExactInt inner = 0;
    std::vector<int> j(l, 1);
    IntMatrix rows(l, n);
    do {
      for (int h = 1; h <= l; ++h)
        for (int c = 1; c <= n; ++c)
          rows(h, c) = g.adj(j[h - 1], c);
      inner += injection_sum(rows, l);
    } while (detail::next_tuple(j, n));
    total += factorial(n - l) * gp(l) * inner;
  }
  // l > n terms carry 1/(n-k)! = 0 in the prefactor.
  return matching_prefactor(n, k) * ExactRat(total);
}

ExactInt direct_partition_sum(const Graph& g, const SetPartition& partition) {
  const int n = g.n();
  const int m = partition.m();
  const int q = partition.block_count();
  if (n > 5 || m > 5)
    throw capacity_error("direct_partition_sum is limited to n <= 5 and m <= 5");
  std::int64_t total = 0;
  std::vector<int> p(q, 1);
  do {
    std::vector<int> j(m, 1);
    do {
      int prod = 1;
      for (int i = 1; i <= m && prod; ++i)
        prod = g.adj(j[i - 1], p[partition.block_of(i)]);
      total += prod;
    } while (detail::next_tuple(j, n));
  } while (detail::next_tuple(p, n));
  return ExactInt(static_cast<long>(total));
}

} // namespace kmatch
