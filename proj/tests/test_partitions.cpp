#include "doctest.h"

#include "kmatch/error.hpp"
#include "kmatch/partitions.hpp"

#include <algorithm>
#include <set>

using namespace kmatch;

namespace {

using Blocks = std::vector<std::vector<int>>;

// Independent enumeration: insert element e into each existing block or a new one.
void insert_all(int e, int m, Blocks& cur, std::set<Blocks>& out) {
  if (e > m) {
    Blocks sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.insert(sorted);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(e);
    insert_all(e + 1, m, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({e});
  insert_all(e + 1, m, cur, out);
  cur.pop_back();
}

std::set<Blocks> brute_partitions(int m) {
  std::set<Blocks> out;
  Blocks cur;
  insert_all(1, m, cur, out);
  return out;
}

void check_structure(const SetPartition& p) {
  std::vector<int> seen(p.m() + 1, 0);
  int prev_min = 0;
  for (const auto& b : p.blocks()) {
    REQUIRE_FALSE(b.empty());
    REQUIRE(std::is_sorted(b.begin(), b.end()));
    REQUIRE(b.front() > prev_min);
    prev_min = b.front();
    for (int e : b) {
      REQUIRE(e >= 1);
      REQUIRE(e <= p.m());
      REQUIRE(seen[e] == 0);
      seen[e] = 1;
    }
  }
  REQUIRE(std::count(seen.begin() + 1, seen.end(), 1) == p.m());
}

} // namespace

TEST_CASE("small enumerations") {
  auto one = all_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].blocks() == Blocks{{1}});

  CHECK(brute_partitions(3).size() == 5);
  CHECK(brute_partitions(4).size() == 15);
  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(4).size() == 15);

  auto singles = all_partitions_q(3, 3);
  REQUIRE(singles.size() == 1);
  CHECK(singles[0].blocks() == Blocks{{1}, {2}, {3}});
  auto whole = all_partitions_q(3, 1);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].blocks() == Blocks{{1, 2, 3}});
  CHECK(all_partitions_q(4, 2).size() == 7);
}

TEST_CASE("enumeration matches independent insertion enumeration") {
  for (int m = 1; m <= 6; ++m) {
    std::set<Blocks> produced;
    std::size_t count = 0;
    enumerate_partitions(m, [&](const SetPartition& p) {
      check_structure(p);
      produced.insert(p.blocks());
      ++count;
    });
    CHECK(count == produced.size());
    CHECK(produced == brute_partitions(m));
  }
}

TEST_CASE("restricted growth string order") {
  for (int m = 1; m <= 7; ++m) {
    auto all = all_partitions(m);
    for (std::size_t i = 1; i < all.size(); ++i)
      REQUIRE(all[i - 1].rgs() < all[i].rgs());
  }
}

TEST_CASE("stirling and bell numbers") {
  CHECK(stirling2(4, 2) == static_cast<long>(all_partitions_q(4, 2).size()));
  CHECK(bell(3) == static_cast<long>(all_partitions(3).size()));
  for (int m = 0; m <= 30; ++m)
    CHECK(stirling2(m, m) == 1);
  CHECK(stirling2(0, 0) == 1);
  CHECK(bell(0) == 1);
  CHECK(bell(10) == 115975);
  for (int m = 1; m <= 8; ++m) {
    CHECK(bell(m) == static_cast<long>(all_partitions(m).size()));
    for (int q = 1; q <= m; ++q)
      CHECK(stirling2(m, q) == static_cast<long>(all_partitions_q(m, q).size()));
  }
  CHECK_THROWS_AS(stirling2(31, 2), input_error);
  CHECK_THROWS_AS(stirling2(3, 4), input_error);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(enumerate_partitions(13, [](const SetPartition&) {}), capacity_error);
  CHECK_THROWS_AS(enumerate_partitions(0, [](const SetPartition&) {}), input_error);
  CHECK_THROWS_AS(enumerate_partitions_q(3, 4, [](const SetPartition&) {}), input_error);
  CHECK_THROWS_AS(enumerate_partitions_q(3, 0, [](const SetPartition&) {}), input_error);
}

TEST_CASE("canonical construction and text form") {
  auto p = SetPartition::from_blocks(5, {{5, 4}, {3, 1}, {2}});
  CHECK(p.to_string() == "{1,3|2|4,5}");
  CHECK(p.rgs() == std::vector<int>{0, 1, 0, 2, 2});
  CHECK(SetPartition::parse("{1,3|2|4,5}") == p);
  CHECK(p.block_of(4) == 2);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}}), input_error);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}, {2, 3}}), input_error);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2, 3}, {}}), input_error);
  CHECK_THROWS_AS(SetPartition::from_rgs({0, 2}), input_error);
  for (const auto& q : all_partitions(5))
    CHECK(SetPartition::parse(q.to_string()) == q);
}

TEST_CASE("keys are unique per partition") {
  std::set<PartitionKey> keys;
  for (int m = 1; m <= 6; ++m)
    for (const auto& p : all_partitions(m))
      keys.insert(p.key());
  long total = 0;
  for (int m = 1; m <= 6; ++m)
    total += bell(m).get_si();
  CHECK(static_cast<long>(keys.size()) == total);
}
