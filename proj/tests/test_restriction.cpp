#include <doctest.h>

#include <algorithm>
#include <set>

#include "brauer/geometry.hpp"
#include "brauer/restriction.hpp"

using namespace brauer;

TEST_CASE("restriction of standard modules") {
  auto a = restrict_standard(Partition{1}, 1, 2);
  REQUIRE(a.size() == 1);
  CHECK(a[0].partition == Partition());
  CHECK(a[0].n == 0);
  auto b = restrict_standard(Partition(), 2, 2);
  REQUIRE(b.size() == 1);
  CHECK(b[0].partition == Partition{1});
  CHECK(b[0].str() == "D_1(1)");
  CHECK_THROWS(restrict_standard(Partition{2}, 3, 1));
}

TEST_CASE("standard restriction adds up dimensions") {
  for (int n = 1; n <= 8; ++n)
    for (auto& p : lambda_set(n)) {
      std::uint64_t sum = 0;
      for (auto& m : restrict_standard(p, n, 1)) sum += count_walks(m.partition, m.n);
      CHECK(sum == count_walks(p, n));
    }
  CHECK(induce_standard(Partition{1}, 1, 1).size() == 3);
}

TEST_CASE("lambda plus and minus") {
  int seen = 0;
  for (int d = -5; d <= 5; ++d)
    for (int k = 0; k <= 7; ++k)
      for (auto& lp : partitions_of(k))
        for (auto& pm : lambda_pm_all(lp, d)) {
          ++seen;
          auto x = weight_diagram(pm.plus, d), y = weight_diagram(pm.minus, d);
          CHECK(x.at(pm.vertex - 1) == Label::Down);
          CHECK(x.at(pm.vertex) == Label::Up);
          CHECK(y.at(pm.vertex) == Label::Down);
          CHECK(degree(pm.plus, d) == degree(lp, d) - 1);
          CHECK(degree(pm.minus, d) == degree(lp, d) - 1);
          CHECK(pm.plus.size() == lp.size() + 1);
          CHECK(pm.minus.size() == lp.size() - 1);
        }
  CHECK(seen > 100);
  CHECK_THROWS(lambda_pm(Partition(), 2));
}

TEST_CASE("relabelled partitions stay in the block of lambda plus") {
  for (int d = -4; d <= 4; ++d)
    for (int k = 0; k <= 8; ++k)
      for (auto& lp : partitions_of(k))
        for (auto& pm : lambda_pm_all(lp, d))
          for (auto& j : I_set(lp, pm.plus, d)) {
            CHECK((j.rule >= 10 && j.rule <= 12));
            auto q = lambda_prime_j(lp, pm.vertex, j, d);
            CHECK(same_block(q, pm.plus, d));
            CHECK(std::abs(q.size() - lp.size()) % 2 == 1);
          }
}

TEST_CASE("restriction of simples needs delta != 0") {
  CHECK_THROWS_AS(restrict_simple(Partition{1, 1}, 2, 0), std::invalid_argument);
}

TEST_CASE("top layer case") {
  // lambda' = (1) at delta = 1 has o x at vertices 0,1 after a box is added,
  // and restricting L_n(lambda') with |lambda'| = n gives L(lambda-).
  for (int d = -3; d <= 3; ++d) {
    if (d == 0) continue;
    for (int n = 1; n <= 6; ++n)
      for (auto& lp : partitions_of(n))
        for (auto& pm : lambda_pm_all(lp, d)) {
          auto res = restrict_simple(lp, n, d);
          bool found = false;
          for (auto& [key, s] : res)
            for (auto& f : s.factors()) found = found || f.partition == pm.minus;
          CHECK(found);
        }
  }
}

TEST_CASE("restricting a restricted partition lists its restricted neighbours once") {
  for (int d : {-3, -2, -1, 1, 2, 3})
    for (int n = 1; n <= 7; ++n)
      for (auto& p : lambda_set(n)) {
        if (!in_A_delta(p, d)) continue;
        std::multiset<Partition> got, want;
        for (auto& [key, s] : restrict_simple(p, n, d)) {
          CHECK(s.middle.empty());
          for (auto& f : s.factors()) got.insert(f.partition);
        }
        for (auto& mu : moves(p))
          if (in_lambda(mu, n - 1) && in_A_delta(mu, d)) want.insert(mu);
        CHECK(got == want);
      }
}

TEST_CASE("semisimple regime") {
  // for large delta every neighbour is a case I move
  auto res = restrict_simple(Partition{2, 1}, 3, 40);
  std::set<Partition> got;
  for (auto& [key, s] : res)
    for (auto& f : s.factors()) got.insert(f.partition);
  CHECK(got == std::set<Partition>{Partition{2}, Partition{1, 1}});
}

TEST_CASE("head equals socle") {
  for (int d : {-2, -1, 1, 2, 3})
    for (int n = 1; n <= 6; ++n)
      for (auto& p : lambda_set(n))
        for (auto& [key, s] : restrict_simple(p, n, d))
          if (!s.socle.empty()) CHECK(s.head == s.socle);
}

TEST_CASE("block keys") {
  for (int d : {-2, 1, 3})
    for (int m = 0; m <= 5; ++m)
      for (auto& p : lambda_set(m)) {
        auto k = block_key(p, m, d);
        CHECK(same_block(k, p, d));
        CHECK_FALSE(size_lex_less(p, k));
      }
}
