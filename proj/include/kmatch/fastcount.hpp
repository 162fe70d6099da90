#ifndef KMATCH_FASTCOUNT_HPP
#define KMATCH_FASTCOUNT_HPP

#include "kmatch/coeffs.hpp"
#include "kmatch/exact.hpp"
#include "kmatch/graph.hpp"
#include "kmatch/partitions.hpp"

#include <string>
#include <string_view>

namespace kmatch {

/// Ground set of the partition sum inside the l-th term.
///  - paper:     partitions of {1..k} for every l, every index j_1..j_k free.
///  - corrected: partitions of {1..l}, matching the l injected rows.
enum class IndexConvention { paper, corrected };

std::string_view to_string(IndexConvention c);
IndexConvention parse_index_convention(std::string_view text);

struct FastCountOptions {
  GMode gmode = GMode::corrected;
  IndexConvention index = IndexConvention::corrected;

  /// "gmode=<..> index=<..>", both fields always spelled out.
  std::string label() const;
  friend bool operator==(const FastCountOptions&, const FastCountOptions&) = default;
};

/// gmode x index, in the order (paper,paper) (paper,corrected) (corrected,paper) (corrected,corrected).
std::vector<FastCountOptions> all_option_combinations();

struct CountResult {
  ExactRat value;
  bool is_integral = true;
  int n = 0;
  int k = 0;
  FastCountOptions options;

  /// {"n":..,"k":..,"gmode":..,"index":..,"value":"p/q","is_integral":..}
  std::string to_json() const;
};

/// sum_p d_p^e.
ExactInt power_sum(const DegreeVector& d, int e);

/// prod over blocks B of power_sum(d, |B|).
ExactInt partition_product(const DegreeVector& d, const SetPartition& partition);

/// The degree power-sum evaluator
///   N(k) = 1/(k! (n-k)! 2^k) sum_l (n-l)! g'_k(l) sum_pi f(pi) prod_B sum_p d_p^|B|
/// with power sums computed once per exponent and partition terms grouped by
/// block-size multiset. Zero when k > n (1/(n-k)! vanishes). Requires 1 <= k <= 12.
CountResult fast_count(const Graph& g, int k, const FastCountOptions& options);

/// The same formula before the summation interchange: explicit j-tuples and
/// p-tuples against the adjacency matrix. Requires n <= 5.
ExactRat lemma7_eval(const Graph& g, int k, const FastCountOptions& options);

} // namespace kmatch

#endif // KMATCH_FASTCOUNT_HPP
