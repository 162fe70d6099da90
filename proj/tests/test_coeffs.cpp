#include "doctest.h"

#include "kmatch/coeffs.hpp"
#include "kmatch/error.hpp"
#include "kmatch/partitions.hpp"
#include "support/fit.hpp"

#include <algorithm>
#include <numeric>

using namespace kmatch;

namespace {

// Injective sum over the first m rows by enumerating column permutations.
mpq_class brute_injection_sum(const IntMatrix& x, int m) {
  std::vector<int> cols(x.cols());
  std::iota(cols.begin(), cols.end(), 1);
  // Each injection appears (n-m)! times among permutations of the columns.
  mpz_class total = 0, repeats = 1;
  for (int i = 2; i <= x.cols() - m; ++i)
    repeats *= i;
  do {
    mpz_class prod = 1;
    for (int i = 1; i <= m; ++i)
      prod *= x(i, cols[i - 1]);
    total += prod;
  } while (std::next_permutation(cols.begin(), cols.end()));
  mpq_class q(total, repeats);
  q.canonicalize();
  return q;
}

mpq_class block_term(const IntMatrix& x, const SetPartition& p) {
  mpz_class term = 1;
  for (const auto& b : p.blocks()) {
    mpz_class col_sum = 0;
    for (int j = 1; j <= x.cols(); ++j) {
      mpz_class prod = 1;
      for (int i : b)
        prod *= x(i, j);
      col_sum += prod;
    }
    term *= col_sum;
  }
  return term;
}

// Coefficients c_pi forced by requiring sum_pi c_pi * block_term = injective
// sum on enough random integer matrices.
std::vector<mpq_class> fit_lattice_coefficients(int m, int n, unsigned long long seed) {
  auto parts = all_partitions(m);
  testing::Lcg rng(seed);
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (std::size_t t = 0; t < parts.size() + 25; ++t) {
    IntMatrix x(m, n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        x(i, j) = rng.in_range(-3, 3);
    std::vector<mpq_class> row;
    for (const auto& p : parts)
      row.push_back(block_term(x, p));
    a.push_back(row);
    b.push_back(brute_injection_sum(x, m));
  }
  auto solution = testing::solve_exact(a, b);
  REQUIRE(solution.has_value());
  return *solution;
}

// Same fit carried out modulo 2^61 - 1, for systems too large for rational elimination.
std::vector<unsigned long long> fit_lattice_coefficients_mod(int m, int n, unsigned long long seed) {
  using M = testing::Mod61;
  auto parts = all_partitions(m);
  testing::Lcg rng(seed);
  std::vector<std::vector<unsigned long long>> a;
  std::vector<unsigned long long> b;
  for (std::size_t t = 0; t < parts.size() + 25; ++t) {
    IntMatrix x(m, n);
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        x(i, j) = rng.in_range(-3, 3);
    std::vector<unsigned long long> row;
    for (const auto& p : parts)
      row.push_back(M::reduce(block_term(x, p).get_num()));
    a.push_back(row);
    mpq_class rhs = brute_injection_sum(x, m);
    REQUIRE(rhs.get_den() == 1);
    b.push_back(M::reduce(rhs.get_num()));
  }
  auto solution = testing::solve_mod(a, b);
  REQUIRE(solution.has_value());
  return *solution;
}

} // namespace

TEST_CASE("g' corrected small tables") {
  const auto& g2 = compute_gprime(2, GMode::corrected);
  CHECK(g2(1) == -1);
  CHECK(g2(2) == 1);
  const auto& g3 = compute_gprime(3, GMode::corrected);
  auto poly = testing::falling_factorial_coefficients(3);
  CHECK(poly[0] == 0);
  for (int l = 1; l <= 3; ++l)
    CHECK(g3(l) == poly[l]);
  CHECK(g3(1) == 2);
  CHECK(g3(2) == -3);
  CHECK(g3(3) == 1);
  CHECK(compute_gprime(1, GMode::corrected)(1) == 1);
  CHECK(compute_gprime(1, GMode::paper)(1) == 1);
}

TEST_CASE("g' paper mode follows the printed base case") {
  const auto& g2 = compute_gprime(2, GMode::paper);
  CHECK(g2(1) == 1);
  CHECK(g2(2) == 1);
  // g'_3(3) = g'_2(2); g'_3(2) = g'_2(1) - 2 g'_2(2); g'_3(1) = -2 g'_2(1).
  const auto& g3 = compute_gprime(3, GMode::paper);
  CHECK(g3(1) == -2);
  CHECK(g3(2) == -1);
  CHECK(g3(3) == 1);
  // At k=2, s=2 the printed base gives s^2 + s = 6, not 2*1 = 2.
  ExactInt expansion = g2(1) * 2 + g2(2) * 4;
  CHECK(expansion == 6);
  CHECK(expansion != falling_factorial(2, 2));
}

TEST_CASE("g' corrected reproduces falling factorials") {
  for (int k = 2; k <= 6; ++k) {
    const auto& g = compute_gprime(k, GMode::corrected);
    auto poly = testing::falling_factorial_coefficients(k);
    for (int l = 1; l <= k; ++l)
      CHECK(g(l) == poly[l]);
    for (int s = 0; s <= 8; ++s) {
      ExactInt sum = 0;
      for (int l = 1; l <= k; ++l)
        sum += g(l) * pow(ExactInt(s), l);
      CHECK(sum == falling_factorial(s, k));
    }
  }
}

TEST_CASE("g' top coefficient is one in both modes") {
  for (int k = 1; k <= 12; ++k) {
    CHECK(compute_gprime(k, GMode::paper)(k) == 1);
    CHECK(compute_gprime(k, GMode::corrected)(k) == 1);
  }
  CHECK_THROWS_AS(compute_gprime(3, GMode::corrected)(4), input_error);
  CHECK_THROWS_AS(compute_gprime(0, GMode::corrected), input_error);
}

TEST_CASE("g' json dump") {
  CHECK(compute_gprime(3, GMode::corrected).to_json() ==
        R"({"k":3,"mode":"corrected","g":{"1":"2","2":"-3","3":"1"}})");
}

TEST_CASE("f table small values") {
  auto f = compute_f(3);
  CHECK((*f)(SetPartition::parse("{1}")) == 1);
  CHECK((*f)(SetPartition::parse("{1|2}")) == 1);
  CHECK((*f)(SetPartition::parse("{1,2}")) == -1);
  CHECK((*f)(SetPartition::parse("{1|2|3}")) == 1);
  CHECK((*f)(SetPartition::parse("{1,2|3}")) == -1);
  CHECK((*f)(SetPartition::parse("{1,3|2}")) == -1);
  CHECK((*f)(SetPartition::parse("{1|2,3}")) == -1);
  CHECK((*f)(SetPartition::parse("{1,2,3}")) == 2);
  CHECK_THROWS_AS((*f)(SetPartition::parse("{1|2|3|4}")), input_error);
  CHECK_THROWS_AS(compute_f(13), capacity_error);
}

TEST_CASE("f table matches coefficients fitted against brute-force injective sums") {
  for (int m = 2; m <= 5; ++m) {
    auto fitted = fit_lattice_coefficients(m, 6, 100 + m);
    auto parts = all_partitions(m);
    auto f = compute_f(m);
    for (std::size_t i = 0; i < parts.size(); ++i)
      CHECK(mpq_class((*f)(parts[i])) == fitted[i]);
  }
}

TEST_CASE("one-block coefficient equals the fitted value up to m = 6") {
  // Fitted values for every m <= 6; compared with (-1)^(m-1) (m-1)! only afterwards.
  for (int m = 1; m <= 5; ++m) {
    auto fitted = fit_lattice_coefficients(m, m + 1, 200 + m);
    auto parts = all_partitions(m);
    // The one-block partition has the all-zero restricted growth string: index 0.
    REQUIRE(parts[0].block_count() == 1);
    auto f = compute_f(m);
    CHECK(mpq_class((*f)(parts[0])) == fitted[0]);
    mpz_class closed = factorial(m - 1) * ((m - 1) % 2 ? -1 : 1);
    CHECK(fitted[0] == mpq_class(closed));
  }
  using M = testing::Mod61;
  auto fitted = fit_lattice_coefficients_mod(6, 6, 206);
  auto parts = all_partitions(6);
  auto f = compute_f(6);
  for (std::size_t i = 0; i < parts.size(); ++i)
    CHECK(M::reduce((*f)(parts[i])) == fitted[i]);
  CHECK(fitted[0] == M::reduce(mpz_class(-120)));
}

TEST_CASE("f table coverage and singleton partitions") {
  auto f = compute_f(8);
  for (int m = 1; m <= 8; ++m) {
    CHECK(static_cast<long>(f->entries(m).size()) == bell(m).get_si());
    std::vector<std::vector<int>> singles;
    for (int e = 1; e <= m; ++e)
      singles.push_back({e});
    CHECK((*f)(SetPartition::from_blocks(m, singles)) == 1);
  }
}

TEST_CASE("lattice expansion equals the injective sum") {
  auto f = compute_f(5);
  testing::Lcg rng(9);
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 6; ++n)
      for (int t = 0; t < 5; ++t) {
        IntMatrix x(m, n);
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j)
            x(i, j) = rng.in_range(-3, 3);
        CHECK(mpq_class(lattice_expansion(x, m, *f)) == brute_injection_sum(x, m));
      }
}

TEST_CASE("f json dump") {
  CHECK(compute_f(2)->to_json(2) == R"({"k":2,"f":{"{1,2}":"-1","{1|2}":"1"}})");
}
