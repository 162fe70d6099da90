#ifndef KMATCH_COEFFS_HPP
#define KMATCH_COEFFS_HPP

#include "kmatch/exact.hpp"
#include "kmatch/matrix.hpp"
#include "kmatch/partitions.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kmatch {

/// Which base case seeds the g' recursion.
///  - paper:     g'_2(1) = g'_2(2) = 1, as printed.
///  - corrected: g'_2(1) = -1, g'_2(2) = 1, the values that make the
///               two-index arrangement identity on 0/1 inputs hold.
enum class GMode { paper, corrected };

std::string_view to_string(GMode mode);
GMode parse_gmode(std::string_view text);

class GPrimeTable {
public:
  GPrimeTable(int k, GMode mode, std::vector<ExactInt> values);

  int k() const { return k_; }
  GMode mode() const { return mode_; }
  /// g'_k(l) for 1 <= l <= k.
  const ExactInt& operator()(int l) const;

  /// {"k":3,"mode":"corrected","g":{"1":"2","2":"-3","3":"1"}}
  std::string to_json() const;

private:
  int k_;
  GMode mode_;
  std::vector<ExactInt> values_; // values_[l-1]
};

/// g' coefficients by the k -> k-1 recursion; g'_1(1) = 1 in both modes.
/// O(k^2) exact operations. Results are memoized.
const GPrimeTable& compute_gprime(int k, GMode mode);

/// Coefficients f over set partitions of {1..m}, for every m <= k_max,
/// built by peeling off the largest element m:
///   m alone in its block B:  f(pi) = f(pi - B)
///   otherwise:               f(pi) = -(|B| - 1) f(pi with m removed)
/// |f| <= (m-1)^(m-1) at every step, so values are held as int64.
class FTable {
public:
  struct Entry {
    PartitionKey key;
    std::int64_t value;
  };

  int k_max() const { return k_max_; }
  ExactInt operator()(const SetPartition& p) const { return at(p.key()); }
  ExactInt at(PartitionKey key) const;
  /// Entries for partitions of {1..m}, in restricted-growth-string order.
  const std::vector<Entry>& entries(int m) const { return by_m_.at(m - 1); }

  /// {"k":3,"f":{"{1|2|3}":"1",...}} for partitions of {1..m}.
  std::string to_json(int m) const;

private:
  friend std::shared_ptr<const FTable> compute_f(int k_max);

  int k_max_ = 0;
  std::vector<std::vector<Entry>> by_m_;
  std::unordered_map<PartitionKey, std::int64_t> lookup_;
};

std::shared_ptr<const FTable> compute_f(int k_max);

/// sum over partitions pi of {1..m} of f(pi) * prod_{B in pi} sum_j prod_{i in B} X(i, j),
/// the partition-lattice expansion of the injective sum over the first m rows of X.
ExactInt lattice_expansion(const IntMatrix& x, int m, const FTable& f);

/// Block sizes of the partition encoded by key, in block-label order.
std::vector<int> block_sizes(PartitionKey key);

} // namespace kmatch

#endif // KMATCH_COEFFS_HPP
