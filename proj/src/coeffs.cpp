#include "kmatch/coeffs.hpp"

#include "kmatch/error.hpp"

#include <map>
#include <mutex>

#include "json.hpp"

namespace kmatch {

std::string_view to_string(GMode mode) {
  return mode == GMode::paper ? "paper" : "corrected";
}

GMode parse_gmode(std::string_view text) {
  if (text == "paper") return GMode::paper;
  if (text == "corrected") return GMode::corrected;
  throw input_error("unknown mode '" + std::string(text) + "' (expected paper|corrected)");
}

GPrimeTable::GPrimeTable(int k, GMode mode, std::vector<ExactInt> values)
    : k_(k), mode_(mode), values_(std::move(values)) {}

const ExactInt& GPrimeTable::operator()(int l) const {
  if (l < 1 || l > k_)
    throw input_error("g' index l=" + std::to_string(l) + " outside 1.." + std::to_string(k_));
  return values_[l - 1];
}

std::string GPrimeTable::to_json() const {
  nlohmann::ordered_json j;
  j["k"] = k_;
  j["mode"] = std::string(to_string(mode_));
  nlohmann::ordered_json g = nlohmann::ordered_json::object();
  for (int l = 1; l <= k_; ++l)
    g[std::to_string(l)] = values_[l - 1].get_str();
  j["g"] = g;
  return j.dump();
}

namespace {

std::vector<ExactInt> gprime_values(int k, GMode mode) {
  if (k == 1)
    return {ExactInt(1)};
  std::vector<ExactInt> g = mode == GMode::paper ? std::vector<ExactInt>{1, 1}
                                                 : std::vector<ExactInt>{-1, 1};
  for (int kk = 3; kk <= k; ++kk) {
    std::vector<ExactInt> next(kk);
    next[kk - 1] = g[kk - 2];
    for (int l = 2; l < kk; ++l)
      next[l - 1] = g[l - 2] - (kk - 1) * g[l - 1];
    next[0] = -(kk - 1) * g[0];
    g = std::move(next);
  }
  return g;
}

} // namespace

const GPrimeTable& compute_gprime(int k, GMode mode) {
  if (k < 1)
    throw input_error("g' requires k >= 1");
  static std::mutex mu;
  static std::map<std::pair<int, GMode>, std::unique_ptr<GPrimeTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{k, mode}];
  if (!slot)
    slot = std::make_unique<GPrimeTable>(k, mode, gprime_values(k, mode));
  return *slot;
}

std::vector<int> block_sizes(PartitionKey key) {
  int m = static_cast<int>(key & 0xff);
  std::vector<int> sizes;
  for (int i = 0; i < m; ++i) {
    auto b = static_cast<std::size_t>((key >> (8 + 4 * i)) & 0xf);
    if (b == sizes.size())
      sizes.push_back(0);
    ++sizes[b];
  }
  return sizes;
}

ExactInt FTable::at(PartitionKey key) const {
  auto it = lookup_.find(key);
  if (it == lookup_.end())
    throw input_error("partition not covered by f table (k_max=" + std::to_string(k_max_) + ")");
  return ExactInt(static_cast<long>(it->second));
}

std::string FTable::to_json(int m) const {
  if (m < 1 || m > k_max_)
    throw input_error("f table dump requires 1 <= m <= k_max");
  nlohmann::ordered_json j;
  j["k"] = m;
  nlohmann::ordered_json f = nlohmann::ordered_json::object();
  for (const auto& e : entries(m)) {
    std::vector<int> rgs(m);
    for (int i = 0; i < m; ++i)
      rgs[i] = static_cast<int>((e.key >> (8 + 4 * i)) & 0xf);
    f[SetPartition::from_rgs(rgs).to_string()] = std::to_string(e.value);
  }
  j["f"] = f;
  return j.dump();
}

ExactInt lattice_expansion(const IntMatrix& x, int m, const FTable& f) {
  if (m < 1 || m > x.rows())
    throw input_error("lattice_expansion: m outside 1..rows");
  if (m > f.k_max())
    throw input_error("lattice_expansion: f table too small for m=" + std::to_string(m));
  ExactInt total = 0;
  enumerate_partitions(m, [&](const SetPartition& p) {
    ExactInt term = f(p);
    for (const auto& block : p.blocks()) {
      ExactInt column_sum = 0;
      for (int j = 1; j <= x.cols(); ++j) {
        ExactInt prod = 1;
        for (int i : block)
          prod *= x(i, j);
        column_sum += prod;
      }
      term *= column_sum;
    }
    total += term;
  });
  return total;
}

std::shared_ptr<const FTable> compute_f(int k_max) {
  if (k_max < 1)
    throw input_error("f table requires k_max >= 1");
  if (k_max > max_partition_ground)
    throw capacity_error("f table is limited to k_max <= " +
                         std::to_string(max_partition_ground));
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const FTable>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(k_max); it != cache.end())
    return it->second;

  auto table = std::make_shared<FTable>();
  table->k_max_ = k_max;
  table->by_m_.resize(k_max);
  for (int m = 1; m <= k_max; ++m) {
    auto& out = table->by_m_[m - 1];
    enumerate_partitions(m, [&](const SetPartition& p) {
      std::int64_t value;
      if (m == 1) {
        value = 1;
      } else if (m == 2) {
        // {1}{2} -> 1, {1,2} -> -1: the two terms of the two-index identity.
        value = p.block_count() == 2 ? 1 : -1;
      } else {
        const auto& rgs = p.rgs();
        std::vector<int> prefix(rgs.begin(), rgs.end() - 1);
        auto size = static_cast<std::int64_t>(p.blocks()[p.block_of(m)].size());
        std::int64_t rest = table->lookup_.at(rgs_key(prefix));
        value = size == 1 ? rest : -(size - 1) * rest;
      }
      out.push_back({p.key(), value});
      table->lookup_.emplace(p.key(), value);
    });
  }
  cache.emplace(k_max, table);
  return table;
}

} // namespace kmatch
