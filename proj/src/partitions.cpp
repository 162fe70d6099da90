#include "kmatch/partitions.hpp"

#include "kmatch/error.hpp"

#include <algorithm>

namespace kmatch {

namespace {

void check_ground(int m) {
  if (m < 1)
    throw input_error("partition ground set size must be positive");
  if (m > max_partition_ground)
    throw capacity_error("partition enumeration is limited to m <= " +
                         std::to_string(max_partition_ground));
}

} // namespace

SetPartition SetPartition::from_rgs(const std::vector<int>& rgs) {
  if (rgs.empty())
    throw input_error("empty restricted growth string");
  SetPartition p;
  int next = 0;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    int b = rgs[i];
    if (b < 0 || b > next)
      throw input_error("invalid restricted growth string");
    if (b == next) {
      p.blocks_.emplace_back();
      ++next;
    }
    p.blocks_[b].push_back(static_cast<int>(i) + 1);
  }
  p.rgs_ = rgs;
  return p;
}

SetPartition SetPartition::from_blocks(int m, std::vector<std::vector<int>> blocks) {
  if (m < 1)
    throw input_error("partition ground set size must be positive");
  std::vector<int> owner(m, -1);
  for (auto& block : blocks) {
    if (block.empty())
      throw input_error("partition has an empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int e : blocks[b]) {
      if (e < 1 || e > m)
        throw input_error("partition element " + std::to_string(e) + " outside 1.." +
                          std::to_string(m));
      if (owner[e - 1] != -1)
        throw input_error("partition element " + std::to_string(e) + " appears twice");
      owner[e - 1] = static_cast<int>(b);
    }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end())
    throw input_error("partition blocks do not cover 1.." + std::to_string(m));
  return from_rgs(owner);
}

SetPartition SetPartition::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw input_error("partition text must look like {1,3|2}");
  text = text.substr(1, text.size() - 2);
  std::vector<std::vector<int>> blocks(1);
  int m = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '|') {
      blocks.emplace_back();
      ++i;
    } else if (c == ',') {
      ++i;
    } else if (c >= '0' && c <= '9') {
      int v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9')
        v = v * 10 + (text[i++] - '0');
      blocks.back().push_back(v);
      m = std::max(m, v);
    } else {
      throw input_error("unexpected character in partition text");
    }
  }
  return from_blocks(m, std::move(blocks));
}

PartitionKey rgs_key(const std::vector<int>& rgs) {
  PartitionKey k = rgs.size();
  for (std::size_t i = 0; i < rgs.size(); ++i)
    k |= static_cast<PartitionKey>(rgs[i]) << (8 + 4 * i);
  return k;
}

PartitionKey SetPartition::key() const { return rgs_key(rgs_); }

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b)
      out += '|';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i)
        out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out + "}";
}

void enumerate_partitions(int m, const std::function<void(const SetPartition&)>& visit) {
  check_ground(m);
  std::vector<int> a(m, 0);
  // prefix_max[i] = max(a[0..i-1])
  std::vector<int> prefix_max(m, 0);
  while (true) {
    visit(SetPartition::from_rgs(a));
    int i = m - 1;
    while (i >= 1 && a[i] > prefix_max[i])
      --i;
    if (i < 1)
      return;
    ++a[i];
    for (int j = i + 1; j < m; ++j) {
      a[j] = 0;
      prefix_max[j] = std::max(prefix_max[j - 1], a[j - 1]);
    }
  }
}

void enumerate_partitions_q(int m, int q, const std::function<void(const SetPartition&)>& visit) {
  check_ground(m);
  if (q < 1 || q > m)
    throw input_error("block count q=" + std::to_string(q) + " outside 1.." + std::to_string(m));
  enumerate_partitions(m, [&](const SetPartition& p) {
    if (p.block_count() == q)
      visit(p);
  });
}

std::vector<SetPartition> all_partitions(int m) {
  std::vector<SetPartition> out;
  enumerate_partitions(m, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<SetPartition> all_partitions_q(int m, int q) {
  std::vector<SetPartition> out;
  enumerate_partitions_q(m, q, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

namespace {

constexpr int stirling_max = 30;

const std::vector<std::vector<ExactInt>>& stirling_table() {
  static const std::vector<std::vector<ExactInt>> table = [] {
    std::vector<std::vector<ExactInt>> s(stirling_max + 1,
                                         std::vector<ExactInt>(stirling_max + 1, 0));
    s[0][0] = 1;
    for (int m = 1; m <= stirling_max; ++m)
      for (int q = 1; q <= m; ++q)
        s[m][q] = q * s[m - 1][q] + s[m - 1][q - 1];
    return s;
  }();
  return table;
}

} // namespace

ExactInt stirling2(int m, int q) {
  if (m < 0 || q < 0 || q > m || m > stirling_max)
    throw input_error("stirling2 requires 0 <= q <= m <= 30");
  return stirling_table()[m][q];
}

ExactInt bell(int m) {
  if (m < 0 || m > stirling_max)
    throw input_error("bell requires 0 <= m <= 30");
  ExactInt b = 0;
  for (int q = 0; q <= m; ++q)
    b += stirling_table()[m][q];
  return b;
}

} // namespace kmatch
