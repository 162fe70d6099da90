#ifndef KMATCH_PARTITIONS_HPP
#define KMATCH_PARTITIONS_HPP

#include "kmatch/exact.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace kmatch {

constexpr int max_partition_ground = 12;

/// Packed restricted growth string: 4 bits per element plus the ground size.
/// Equal keys <=> equal partitions.
using PartitionKey = std::uint64_t;

/// Unordered partition of {1..m} into nonempty blocks, held in canonical
/// form: ascending within blocks, blocks ordered by their minimum.
class SetPartition {
public:
  /// Canonicalizes; throws input_error unless the blocks partition {1..m}.
  static SetPartition from_blocks(int m, std::vector<std::vector<int>> blocks);
  /// rgs[i] is the block label of element i+1; rgs[0] == 0 and each label is
  /// at most one more than every earlier label.
  static SetPartition from_rgs(const std::vector<int>& rgs);
  /// Inverse of to_string: "{1,3|2|4,5}".
  static SetPartition parse(std::string_view text);

  int m() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& rgs() const { return rgs_; }
  /// 0-based index of the block containing element e (1-based).
  int block_of(int e) const { return rgs_[e - 1]; }
  PartitionKey key() const;
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
  friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.rgs_ < b.rgs_; }

private:
  std::vector<int> rgs_;
  std::vector<std::vector<int>> blocks_;
};

PartitionKey rgs_key(const std::vector<int>& rgs);

/// Every partition of {1..m} once, in lexicographic restricted-growth-string
/// order. m in 1..12, otherwise capacity_error (m > 12) or input_error (m < 1).
void enumerate_partitions(int m, const std::function<void(const SetPartition&)>& visit);

/// Partitions of {1..m} with exactly q blocks, same order. Requires 1 <= q <= m <= 12.
void enumerate_partitions_q(int m, int q, const std::function<void(const SetPartition&)>& visit);

std::vector<SetPartition> all_partitions(int m);
std::vector<SetPartition> all_partitions_q(int m, int q);

/// Stirling numbers of the second kind; 0 <= q <= m <= 30.
ExactInt stirling2(int m, int q);
/// Bell numbers; 0 <= m <= 30.
ExactInt bell(int m);

} // namespace kmatch

#endif // KMATCH_PARTITIONS_HPP
