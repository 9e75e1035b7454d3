#include <doctest.h>

#include <algorithm>

#include "brauer/geometry.hpp"

using namespace brauer;

TEST_CASE("embedding") {
  for (int d = -5; d <= 5; ++d) {
    auto rho = embed(Partition(), d);
    for (int i = 1; i <= 6; ++i) CHECK(rho.entry2(i) == -d - 2 * (i - 1));
  }
  auto x = embed(Partition{1}, 2);
  CHECK(x.entry2(1) == 0);
  CHECK(x.entry2(2) == -4);
  CHECK(x.entry2(3) == -6);
  auto y = embed(Partition{1, 1}, 0);
  CHECK(y.entry2(1) == 4);
  CHECK(y.entry2(2) == -2);
  CHECK(y.entry2(3) == -4);
}

TEST_CASE("embedded points decrease strictly with the parity of delta") {
  for (int d = -5; d <= 5; ++d)
    for (int k = 0; k <= 6; ++k)
      for (auto& p : partitions_of(k)) {
        auto x = embed(p, d);
        for (int i = 1; i <= p.length() + p.row(1) + 4; ++i) {
          CHECK(x.entry2(i) > x.entry2(i + 1));
          CHECK(((x.entry2(i) - d) % 2 + 2) % 2 == 0);
        }
      }
}

TEST_CASE("degree of singularity") {
  CHECK(degree(Partition(), 4) == 0);
  CHECK(degree(Partition(), -4) == 2);
  CHECK(degree(Partition{1, 1}, 0) == 1);
  for (int d = -6; d <= 6; ++d) CHECK(rho_degree(d) == degree(Partition(), d));
}

TEST_CASE("regularity and A_delta") {
  for (int d = -4; d <= 4; ++d) CHECK(is_delta_regular(Partition(), d));
  CHECK_FALSE(is_delta_regular(Partition{1, 1}, 0));
  CHECK(is_delta_regular(Partition{1}, 2));
  CHECK(in_A_delta(Partition{1, 1}, 2));
  CHECK(in_A_delta(Partition{2, 2}, -4));
  CHECK_FALSE(in_A_delta(Partition{3, 3}, -3));
}

TEST_CASE("restricted neighbours") {
  CHECK(restricted_neighbors(Partition(), 2) == std::vector<Partition>{Partition{1}});
  // (1,1) and (2) both have transpose rows summing to 2 > 1
  CHECK(restricted_neighbors(Partition{1}, 1) == std::vector<Partition>{Partition()});
  CHECK(restricted_neighbors(Partition{1}, -2) == std::vector<Partition>{Partition{1, 1}, Partition()});
  CHECK(restricted_neighbors(Partition(), 0).empty());
}

TEST_CASE("every partition in A_delta is regular") {
  for (int d = -6; d <= 6; ++d)
    for (auto& p : A_delta_bfs(d, 8)) CHECK(is_delta_regular(p, d));
}

TEST_CASE("box moves are unit steps of the embedding") {
  for (int d : {-3, 0, 2})
    for (int k = 0; k <= 6; ++k)
      for (auto& p : partitions_of(k)) {
        auto x = embed(p, d);
        int len = p.row(1) + 3;
        for (int k2 = std::max(0, k - 1); k2 <= k + 1; ++k2)
          for (auto& q : partitions_of(k2)) {
            auto y = embed(q, d);
            int diffs = 0, total = 0;
            for (int i = 1; i <= std::max(len, q.row(1) + 3); ++i) {
              long dd = y.entry2(i) - x.entry2(i);
              if (dd != 0) ++diffs;
              total += static_cast<int>(std::labs(dd));
            }
            auto mv = moves(p);
            bool neighbour = std::find(mv.begin(), mv.end(), q) != mv.end();
            CHECK(neighbour == (diffs == 1 && total == 2));
          }
      }
}

TEST_CASE("walk counts") {
  CHECK(count_walks(Partition(), 2) == 1);
  CHECK(count_walks(Partition(), 4) == 3);
  CHECK(count_walks(Partition{1}, 3, 1) == 1);
  CHECK(count_walks(Partition{1}, 3, -2) == 2);
  CHECK(count_walks(Partition{1}, 3, 2) == 3);
  CHECK(count_walks(Partition{1}, 3) == 3);
  long dfact = 1;
  for (int k = 1; k <= 5; ++k) {
    dfact *= 2 * k - 1;
    CHECK(count_walks(Partition(), 2 * k) == static_cast<std::uint64_t>(dfact));
  }
  CHECK_THROWS(count_walks(Partition{1}, 2));
}

TEST_CASE("enumeration matches counting") {
  for (int n = 0; n <= 6; ++n)
    for (int k = n; k >= 0; k -= 2)
      for (auto& p : partitions_of(k)) {
        CHECK(enumerate_walks(p, n).size() == count_walks(p, n));
        for (int d : {-2, 1, 3})
          if (in_A_delta(p, d)) CHECK(enumerate_walks(p, n, d).size() == count_walks(p, n, d));
      }
  auto w = enumerate_walks(Partition(), 4);
  REQUIRE(w.size() == 3);
  // additions before removals, then by row
  CHECK(w[0][2] == Partition{2});
  CHECK(w[1][2] == Partition{1, 1});
  CHECK(w[2][2] == Partition());
}

TEST_CASE("steps") {
  auto s = step_between(Partition{2, 1}, Partition{2, 2});
  CHECK(s.sign == 1);
  CHECK(s.row == 2);
  CHECK(s.column == 2);
  auto r = step_between(Partition{2, 1}, Partition{1, 1});
  CHECK(r.sign == -1);
  CHECK(r.row == 1);
  CHECK(r.column == 2);
  CHECK_THROWS(step_between(Partition{2}, Partition{1, 1}));
  CHECK_THROWS(step_between(Partition{2}, Partition{2}));
}
