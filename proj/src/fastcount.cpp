#include "kmatch/fastcount.hpp"

#include "kmatch/detail/tuple.hpp"
#include "kmatch/error.hpp"
#include "kmatch/oracle.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace kmatch {

std::string_view to_string(IndexConvention c) {
  return c == IndexConvention::paper ? "paper" : "corrected";
}

IndexConvention parse_index_convention(std::string_view text) {
  if (text == "paper") return IndexConvention::paper;
  if (text == "corrected") return IndexConvention::corrected;
  throw input_error("unknown index convention '" + std::string(text) +
                    "' (expected paper|corrected)");
}

std::string FastCountOptions::label() const {
  return "gmode=" + std::string(to_string(gmode)) + " index=" + std::string(to_string(index));
}

std::vector<FastCountOptions> all_option_combinations() {
  std::vector<FastCountOptions> out;
  for (GMode g : {GMode::paper, GMode::corrected})
    for (IndexConvention c : {IndexConvention::paper, IndexConvention::corrected})
      out.push_back({g, c});
  return out;
}

std::string CountResult::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["gmode"] = std::string(to_string(options.gmode));
  j["index"] = std::string(to_string(options.index));
  j["value"] = value.to_string();
  j["is_integral"] = is_integral;
  return j.dump();
}

ExactInt power_sum(const DegreeVector& d, int e) {
  if (e < 1)
    throw input_error("power_sum exponent must be positive");
  ExactInt total = 0;
  for (long dp : d)
    total += pow(ExactInt(dp), static_cast<unsigned>(e));
  return total;
}

ExactInt partition_product(const DegreeVector& d, const SetPartition& partition) {
  ExactInt prod = 1;
  for (const auto& block : partition.blocks())
    prod *= power_sum(d, static_cast<int>(block.size()));
  return prod;
}

namespace {

constexpr int fast_k_max = max_partition_ground;

void check_k(int k) {
  if (k < 1)
    throw input_error("k must be at least 1");
  if (k > fast_k_max)
    throw capacity_error("fast_count is limited to k <= " + std::to_string(fast_k_max));
}

// sum over partitions pi of {1..m} of f(pi) prod_B ps[|B|].
ExactInt lattice_sum(const FTable& f, int m, const std::vector<ExactInt>& ps) {
  // Terms depend on pi only through its block-size multiset.
  std::map<std::vector<int>, std::int64_t> by_shape;
  for (const auto& e : f.entries(m)) {
    auto sizes = block_sizes(e.key);
    std::sort(sizes.begin(), sizes.end());
    by_shape[sizes] += e.value;
  }
  ExactInt total = 0;
  for (const auto& [sizes, weight] : by_shape) {
    if (weight == 0)
      continue;
    ExactInt term(static_cast<long>(weight));
    for (int s : sizes)
      term *= ps[s];
    total += term;
  }
  return total;
}

} // namespace

CountResult fast_count(const Graph& g, int k, const FastCountOptions& options) {
  check_k(k);
  const int n = g.n();
  CountResult result;
  result.n = n;
  result.k = k;
  result.options = options;
  if (k > n) {
    result.value = ExactRat(0);
    return result;
  }

  auto d = degree_vector(g);
  std::vector<ExactInt> ps(k + 1);
  for (int e = 1; e <= k; ++e)
    ps[e] = power_sum(d, e);

  const auto& gp = compute_gprime(k, options.gmode);
  auto f = compute_f(k);

  ExactInt total = 0;
  if (options.index == IndexConvention::paper) {
    ExactInt inner = lattice_sum(*f, k, ps);
    for (int l = 1; l <= k; ++l)
      total += factorial(n - l) * gp(l) * inner;
  } else {
    for (int l = 1; l <= k; ++l)
      total += factorial(n - l) * gp(l) * lattice_sum(*f, l, ps);
  }
  result.value = matching_prefactor(n, k) * ExactRat(total);
  result.is_integral = result.value.is_integer();
  return result;
}

ExactRat lemma7_eval(const Graph& g, int k, const FastCountOptions& options) {
  check_k(k);
  const int n = g.n();
  if (n > 5)
    throw capacity_error("lemma7_eval is limited to n <= 5");
  if (k > n)
    return ExactRat(0);
  const auto& gp = compute_gprime(k, options.gmode);
  auto f = compute_f(k);

  ExactInt total = 0;
  for (int l = 1; l <= k; ++l) {
    const int ground = options.index == IndexConvention::paper ? k : l;
    auto partitions = all_partitions(ground);
    ExactInt inner = 0;
    std::vector<int> j(ground, 1);
    do {
      for (const auto& pi : partitions) {
        std::vector<int> p(pi.block_count(), 1);
        std::int64_t count = 0;
        do {
          int prod = 1;
          for (int i = 1; i <= ground && prod; ++i)
            prod = g.adj(j[i - 1], p[pi.block_of(i)]);
          count += prod;
        } while (detail::next_tuple(p, n));
        inner += (*f)(pi) * ExactInt(static_cast<long>(count));
      }
    } while (detail::next_tuple(j, n));
    total += factorial(n - l) * gp(l) * inner;
  }
  return matching_prefactor(n, k) * ExactRat(total);
}

} // namespace kmatch
