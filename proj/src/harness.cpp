#include "kmatch/harness.hpp"

#include "kmatch/error.hpp"
#include "kmatch/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

namespace kmatch {

namespace {

using Task = std::function<std::vector<VerificationRecord>()>;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (seed, a, b, c) so any single instance can be replayed.
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                             std::uint64_t c) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return std::mt19937_64(h);
}

long small_int(std::mt19937_64& rng) { return static_cast<long>(rng() % 7) - 3; }

std::string vector_text(const std::vector<long>& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i)
    s += (i ? " " : "") + std::to_string(x[i]);
  return s + "]";
}

std::vector<long> bits_vector(int n, std::uint32_t bits) {
  std::vector<long> x(n);
  for (int i = 0; i < n; ++i)
    x[i] = bits >> i & 1;
  return x;
}

std::vector<GMode> distinct_gmodes(const std::vector<FastCountOptions>& options) {
  std::vector<GMode> out;
  for (const auto& o : options)
    if (std::find(out.begin(), out.end(), o.gmode) == out.end())
      out.push_back(o.gmode);
  return out;
}

std::string gmode_label(GMode g) { return "gmode=" + std::string(to_string(g)); }

std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks, int workers) {
  std::vector<std::vector<VerificationRecord>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        slots[i] = tasks[i]();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure)
          failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  workers = std::max(1, std::min<int>(workers, static_cast<int>(tasks.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back(work);
    for (auto& t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);
  std::vector<VerificationRecord> out;
  for (auto& s : slots)
    for (auto& r : s)
      out.push_back(std::move(r));
  return out;
}

// One task per labeled graph with 1 <= n <= n_max, each evaluating `eval`
// for every k in 1..k_max.
using GraphEval = std::function<void(const Graph&, int k, const std::string& instance,
                                     std::vector<VerificationRecord>&)>;

void add_graph_tasks(std::vector<Task>& tasks, int n_max, int k_max, GraphEval eval) {
  auto shared = std::make_shared<GraphEval>(std::move(eval));
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t total = graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
      tasks.push_back([n, mask, k_max, shared] {
        Graph g = graph_from_mask(n, mask);
        std::string key = graph_key(g);
        std::vector<VerificationRecord> out;
        for (int k = 1; k <= k_max; ++k)
          (*shared)(g, k, key + " k=" + std::to_string(k), out);
        return out;
      });
  }
}

std::vector<Task> build_tasks(ClaimId claim, int n_max, int k_max, const Budget& budget,
                              const std::vector<FastCountOptions>& options) {
  std::vector<Task> tasks;
  const auto gmodes = distinct_gmodes(options);
  switch (claim) {
  case ClaimId::LEMMA2:
  case ClaimId::LEMMA3: {
    // Both sides written out as the displayed double sums.
    bool binary_identity = claim == ClaimId::LEMMA3;
    auto rhs = [binary_identity](const std::vector<long>& x) -> ExactInt {
      ExactInt full = 0, diagonal = 0;
      for (long a : x)
        for (long b : x)
          full += a * b;
      for (long a : x)
        diagonal += binary_identity ? a : a * a;
      return ExactInt(full - diagonal);
    };
    for (int n = 1; n <= n_max; ++n)
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        tasks.push_back([=] {
          auto x = bits_vector(n, bits);
          return std::vector{VerificationRecord(claim, "n=" + std::to_string(n) + " x=" +
                                                           vector_text(x),
                                                "-", arrangement_sum(x, 2), rhs(x))};
        });
    if (claim == ClaimId::LEMMA2)
      for (int n = 1; n <= n_max; ++n)
        for (int t = 0; t < budget.trials; ++t)
          tasks.push_back([=, seed = budget.seed] {
            auto rng = instance_rng(seed, 2, n, t);
            std::vector<long> x(n);
            for (auto& v : x)
              v = small_int(rng);
            std::string inst = "n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                               " trial=" + std::to_string(t) + " x=" + vector_text(x);
            return std::vector{VerificationRecord(claim, inst, "-", arrangement_sum(x, 2), rhs(x))};
          });
    break;
  }
  case ClaimId::LEMMA4:
    for (GMode gm : gmodes) {
      tasks.push_back([=, s_max = budget.s_max, poly_k = budget.poly_k_max] {
        std::vector<VerificationRecord> out;
        for (int k = 2; k <= poly_k; ++k) {
          const auto& gp = compute_gprime(k, gm);
          for (int s = 0; s <= s_max; ++s) {
            ExactInt expansion = 0;
            for (int l = 1; l <= k; ++l)
              expansion += gp(l) * pow(ExactInt(s), l);
            out.emplace_back(claim, "poly k=" + std::to_string(k) + " s=" + std::to_string(s),
                             gmode_label(gm), falling_factorial(s, k), expansion);
          }
        }
        return out;
      });
      for (int n = 1; n <= n_max; ++n)
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
          tasks.push_back([=] {
            auto x = bits_vector(n, bits);
            long s = std::count(x.begin(), x.end(), 1L);
            std::vector<VerificationRecord> out;
            for (int k = 2; k <= k_max; ++k) {
              const auto& gp = compute_gprime(k, gm);
              ExactInt expansion = 0;
              for (int l = 1; l <= k; ++l)
                expansion += gp(l) * pow(ExactInt(s), l);
              out.emplace_back(claim,
                               "vec n=" + std::to_string(n) + " x=" + vector_text(x) +
                                   " k=" + std::to_string(k),
                               gmode_label(gm), arrangement_sum(x, k), expansion);
            }
            return out;
          });
    }
    break;
  case ClaimId::LEMMA6: {
    auto f = compute_f(k_max);
    for (int m = 1; m <= k_max; ++m)
      for (int n = m; n <= n_max; ++n)
        for (int t = 0; t < budget.trials; ++t)
          tasks.push_back([=, seed = budget.seed] {
            auto rng = instance_rng(seed, 6 + (static_cast<std::uint64_t>(m) << 8), n, t);
            IntMatrix x(m, n);
            for (int i = 1; i <= m; ++i)
              for (int j = 1; j <= n; ++j)
                x(i, j) = small_int(rng);
            std::string inst = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " seed=" + std::to_string(seed) + " trial=" + std::to_string(t);
            return std::vector{
                VerificationRecord(claim, inst, "-", injection_sum(x, m), lattice_expansion(x, m, *f))};
          });
    break;
  }
  case ClaimId::LEMMA1_VS_ORACLE:
    add_graph_tasks(tasks, n_max, k_max, [=](const Graph& g, int k, const std::string& inst, auto& out) {
      out.emplace_back(claim, inst, "-", lemma1_sum(g, k), ExactRat(count_k_matchings(g, k)));
    });
    break;
  case ClaimId::THM1_VS_LEMMA1:
    add_graph_tasks(tasks, n_max, k_max, [=](const Graph& g, int k, const std::string& inst, auto& out) {
      ExactRat base = lemma1_sum(g, k);
      for (GMode gm : gmodes)
        out.emplace_back(claim, inst, gmode_label(gm), theorem1_eval(g, k, gm), base);
    });
    break;
  case ClaimId::THM2_VS_THM1:
    add_graph_tasks(tasks, n_max, k_max, [=](const Graph& g, int k, const std::string& inst, auto& out) {
      for (GMode gm : gmodes)
        out.emplace_back(claim, inst, gmode_label(gm), theorem2_eval(g, k, gm),
                         theorem1_eval(g, k, gm));
    });
    break;
  case ClaimId::LEMMA7_VS_THM2:
    add_graph_tasks(tasks, n_max, k_max, [=](const Graph& g, int k, const std::string& inst, auto& out) {
      for (const auto& o : options)
        out.emplace_back(claim, inst, o.label(), lemma7_eval(g, k, o), theorem2_eval(g, k, o.gmode));
    });
    break;
  case ClaimId::THM3_VS_LEMMA7:
    add_graph_tasks(tasks, n_max, k_max, [=](const Graph& g, int k, const std::string& inst, auto& out) {
      for (const auto& o : options)
        out.emplace_back(claim, inst, o.label(), fast_count(g, k, o).value, lemma7_eval(g, k, o));
    });
    break;
  case ClaimId::THM4_FACTORIZATION: {
    std::vector<SetPartition> partitions;
    for (int m = 1; m <= k_max; ++m)
      for (auto& p : all_partitions(m))
        partitions.push_back(std::move(p));
    for (int n = 1; n <= n_max; ++n) {
      std::uint64_t total = graph_count(n);
      for (std::uint64_t mask = 0; mask < total; ++mask)
        tasks.push_back([=] {
          Graph g = graph_from_mask(n, mask);
          auto d = degree_vector(g);
          std::vector<VerificationRecord> out;
          for (const auto& p : partitions)
            out.emplace_back(claim, graph_key(g) + " pi=" + p.to_string(), "-",
                             partition_product(d, p), direct_partition_sum(g, p));
          return out;
        });
    }
    break;
  }
  case ClaimId::END_TO_END:
    add_graph_tasks(tasks, n_max, k_max, [=](const Graph& g, int k, const std::string& inst, auto& out) {
      ExactRat truth(count_k_matchings(g, k));
      for (const auto& o : options)
        out.emplace_back(claim, inst, o.label(), fast_count(g, k, o).value, truth);
    });
    break;
  }
  return tasks;
}

} // namespace

ClaimLimits claim_limits(ClaimId claim) {
  switch (claim) {
  case ClaimId::LEMMA2: return {6, 2, 10, 2};
  case ClaimId::LEMMA3: return {6, 2, 10, 2};
  case ClaimId::LEMMA4: return {8, 4, 10, 8};
  case ClaimId::LEMMA6: return {6, 4, 8, 6};
  case ClaimId::LEMMA1_VS_ORACLE: return {5, 2, 7, 8};
  case ClaimId::THM1_VS_LEMMA1: return {5, 2, 7, 8};
  case ClaimId::THM2_VS_THM1: return {4, 3, 6, 8};
  case ClaimId::LEMMA7_VS_THM2: return {4, 3, 5, 4};
  case ClaimId::THM3_VS_LEMMA7: return {4, 3, 5, 4};
  case ClaimId::THM4_FACTORIZATION: return {4, 4, 5, 4};
  case ClaimId::END_TO_END: return {6, 3, 6, 3};
  }
  throw input_error("unknown claim");
}

int worker_count() {
  if (const char* env = std::getenv("KMATCH_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string graph_key(const Graph& g) {
  return "n=" + std::to_string(g.n()) + " g6=" + to_graph6(g);
}

std::vector<VerificationRecord> verify_claim(ClaimId claim, const Budget& budget,
                                             const std::vector<FastCountOptions>& options) {
  auto limits = claim_limits(claim);
  int n_max = budget.n_max.value_or(limits.default_n_max);
  int k_max = budget.k_max.value_or(limits.default_k_max);
  if (n_max < 1 || k_max < 1)
    throw input_error("budget bounds must be positive");
  if (n_max > limits.max_n || k_max > limits.max_k)
    throw capacity_error(std::string(to_string(claim)) + " budget n_max=" + std::to_string(n_max) +
                         " k_max=" + std::to_string(k_max) + " exceeds limits n<=" +
                         std::to_string(limits.max_n) + " k<=" + std::to_string(limits.max_k));
  if (claim == ClaimId::LEMMA4 && (budget.poly_k_max > 12 || budget.s_max < 0))
    throw capacity_error("LEMMA4 polynomial budget out of range");
  if (options.empty())
    throw input_error("options matrix is empty");
  if (budget.trials < 0)
    throw input_error("trials must be nonnegative");
  return run_tasks(build_tasks(claim, n_max, k_max, budget, options), worker_count());
}

VerificationReport verify_claims(const std::vector<ClaimId>& claims, const Budget& budget,
                                 const std::vector<FastCountOptions>& options) {
  VerificationReport report;
  report.version = std::string(tool_version());
  for (const auto& o : options)
    report.options_matrix.push_back(o.label());
  auto ordered = claims;
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  for (ClaimId c : ordered)
    for (auto& r : verify_claim(c, budget, options))
      report.records.push_back(std::move(r));
  return report;
}

VerificationReport discrepancy_search(int n_max, int k_max,
                                      const std::vector<FastCountOptions>& options) {
  Budget budget;
  budget.n_max = n_max;
  budget.k_max = k_max;
  return verify_claims({ClaimId::END_TO_END}, budget, options);
}

} // namespace kmatch
