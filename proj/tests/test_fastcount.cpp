#include "doctest.h"

#include "kmatch/error.hpp"
#include "kmatch/fastcount.hpp"
#include "kmatch/oracle.hpp"

using namespace kmatch;

TEST_CASE("power sums") {
  CHECK(power_sum({2, 2, 2, 2}, 2) == 16);
  CHECK(power_sum({1, 2, 1}, 1) == 4);
  CHECK(power_sum({0, 0, 0}, 5) == 0);
  CHECK_THROWS_AS(power_sum({1}, 0), input_error);
}

TEST_CASE("partition products") {
  auto c4 = degree_vector(generate(GraphKind::cycle, 4));
  auto p3 = degree_vector(generate(GraphKind::path, 3));
  CHECK(partition_product(c4, SetPartition::parse("{1|2}")) == 64);
  CHECK(partition_product(p3, SetPartition::parse("{1,2}")) == 6);
}

TEST_CASE("degree factorization equals the nested sum") {
  for (int n = 1; n <= 4; ++n)
    enumerate_all_graphs(n, [](const Graph& g) {
      auto d = degree_vector(g);
      for (int m = 1; m <= 4; ++m)
        for (const auto& p : all_partitions(m))
          REQUIRE(partition_product(d, p) == direct_partition_sum(g, p));
    });
}

TEST_CASE("fast count small cases") {
  for (const auto& o : all_option_combinations()) {
    auto r = fast_count(generate(GraphKind::complete, 2), 1, o);
    CHECK(r.value == 1);
    CHECK(r.is_integral);
    CHECK(fast_count(from_edge_list(4, {}), 2, o).value.is_zero());
    CHECK(r.options == o);
  }
  // k = 1 collapses to |E| for every graph and option.
  for (int n = 1; n <= 5; ++n)
    enumerate_all_graphs(n, [](const Graph& g) {
      for (const auto& o : all_option_combinations())
        REQUIRE(fast_count(g, 1, o).value == g.edge_count());
    });
}

TEST_CASE("fast count on P3 with k=2") {
  // 1/(2! 1! 4) * [ 2! g'(1) f{1} S1 + 1! g'(2) (f{1|2} S1^2 + f{1,2} S2) ]
  // with S1 = 4, S2 = 6 and corrected g' = (-1, 1): (-8 + 10) / 8 = 1/4.
  auto r = fast_count(generate(GraphKind::path, 3), 2, {GMode::corrected, IndexConvention::corrected});
  CHECK(r.value == ExactRat(ExactInt(1), ExactInt(4)));
  CHECK_FALSE(r.is_integral);
  CHECK(r.value != ExactRat(count_k_matchings(generate(GraphKind::path, 3), 2)));
  CHECK(r.value != lemma1_sum(generate(GraphKind::path, 3), 2));
}

TEST_CASE("fast count when k exceeds n") {
  for (const auto& o : all_option_combinations())
    CHECK(fast_count(generate(GraphKind::complete, 2), 3, o).value.is_zero());
}

TEST_CASE("fast count guards") {
  auto g = generate(GraphKind::path, 4);
  CHECK_THROWS_AS(fast_count(g, 0, {}), input_error);
  CHECK_THROWS_AS(fast_count(g, 13, {}), capacity_error);
  CHECK_THROWS_AS(lemma7_eval(generate(GraphKind::path, 6), 2, {}), capacity_error);
}

TEST_CASE("summation interchange: fast count equals the index-sum transcription") {
  for (int n = 1; n <= 4; ++n)
    enumerate_all_graphs(n, [](const Graph& g) {
      for (int k = 1; k <= 3; ++k)
        for (const auto& o : all_option_combinations())
          REQUIRE(fast_count(g, k, o).value == lemma7_eval(g, k, o));
    });
}

TEST_CASE("substitution: index sum (corrected index) equals the injection sum") {
  for (int n = 1; n <= 4; ++n)
    enumerate_all_graphs(n, [](const Graph& g) {
      for (int k = 1; k <= 2; ++k)
        for (GMode m : {GMode::paper, GMode::corrected})
          REQUIRE(lemma7_eval(g, k, {m, IndexConvention::corrected}) == theorem2_eval(g, k, m));
    });
}

TEST_CASE("isolated vertices change the fast count") {
  // A correct matching count ignores isolated vertices; record that this one does not.
  auto c4 = generate(GraphKind::cycle, 4);
  FastCountOptions o{GMode::corrected, IndexConvention::corrected};
  CHECK(count_k_matchings(c4, 2) == count_k_matchings(add_isolated(c4, 2), 2));
  // S1 = 8, S2 = 16.  n=4: (3! (-1) 8 + 2! (64 - 16)) / (2! 2! 4) = 3.
  //                   n=6: (5! (-1) 8 + 4! (64 - 16)) / (2! 4! 4) = 1.
  CHECK(fast_count(c4, 2, o).value == 3);
  CHECK(fast_count(add_isolated(c4, 2), 2, o).value == 1);
}

TEST_CASE("count result json") {
  auto r = fast_count(generate(GraphKind::path, 3), 2, {GMode::corrected, IndexConvention::paper});
  CHECK(r.to_json().find(R"("gmode":"corrected","index":"paper")") != std::string::npos);
  CHECK(r.to_json().find(R"("is_integral":)") != std::string::npos);
  CHECK(FastCountOptions{}.label() == "gmode=corrected index=corrected");
  CHECK_THROWS_AS(parse_index_convention("other"), input_error);
}
