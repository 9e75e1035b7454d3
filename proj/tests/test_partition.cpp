#include <doctest.h>

#include "brauer/partition.hpp"

using namespace brauer;

TEST_CASE("parse and print") {
  CHECK(Partition::parse("-").empty());
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("3,1,1") == Partition{3, 1, 1});
  CHECK(Partition{2, 1, 0}.str() == "2,1");
  CHECK(Partition().str() == "-");
  CHECK_THROWS(Partition::parse("1,2"));
  CHECK_THROWS(Partition::parse("2,x"));
}

TEST_CASE("transpose") {
  CHECK(Partition{2}.transpose() == Partition{1, 1});
  CHECK(Partition().transpose() == Partition());
  Partition big{10, 10, 9, 9, 8, 5, 3, 3};
  CHECK(big.transpose() == Partition{8, 8, 8, 6, 6, 5, 5, 5, 4, 2});
  CHECK(big.transpose().transpose() == big);
  for (int k = 0; k <= 8; ++k)
    for (auto& p : partitions_of(k)) CHECK(p.transpose().transpose() == p);
}

TEST_CASE("box neighbours") {
  auto e = box_neighbors(Partition());
  CHECK(e.addable == std::vector<Partition>{Partition{1}});
  CHECK(e.removable.empty());

  auto one = box_neighbors(Partition{1});
  CHECK(one.addable == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(one.removable == std::vector<Partition>{Partition()});

  auto hook = box_neighbors(Partition{2, 1});
  CHECK(hook.addable == std::vector<Partition>{Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1}});
  CHECK(hook.removable == std::vector<Partition>{Partition{1, 1}, Partition{2}});
}

TEST_CASE("addable and removable are mutually inverse") {
  for (int k = 0; k <= 7; ++k)
    for (auto& p : partitions_of(k)) {
      for (auto& q : box_neighbors(p).addable) {
        auto back = box_neighbors(q).removable;
        CHECK(std::find(back.begin(), back.end(), p) != back.end());
      }
      for (auto& q : box_neighbors(p).removable) {
        auto back = box_neighbors(q).addable;
        CHECK(std::find(back.begin(), back.end(), p) != back.end());
      }
    }
}

TEST_CASE("partition counts") {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int k = 0; k <= 10; ++k) CHECK(partitions_of(k).size() == static_cast<std::size_t>(counts[k]));
  CHECK(partitions_of(3).front() == Partition{3});
  CHECK(lambda_set(4).size() == 5 + 2 + 1);
}

TEST_CASE("d values") {
  CHECK(d_value(Partition{1}, 1, 1) == 1);
  // The formula gives 0 for both of these boxes; the roots 1 - d = 1 are the
  // factors (u - 1) and u of the polynomials below.
  CHECK(d_value(Partition{2}, 1, 2) == 0);
  CHECK(d_value(Partition{1, 1}, 2, 1) == 0);
  CHECK_THROWS_AS(d_value(Partition{1}, 1, 2), std::out_of_range);
}

TEST_CASE("hook lengths agree with the transpose") {
  for (int k = 1; k <= 7; ++k)
    for (auto& p : partitions_of(k)) {
      auto t = p.transpose();
      for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.row(i); ++j) {
          int h = hook_length(p, i, j);
          CHECK(h >= 1);
          CHECK(h == p.row(i) - j + t.row(j) - i + 1);
          CHECK(h == hook_length(t, j, i));
        }
    }
}

namespace {
mpq_class expanded(std::initializer_list<int> roots, int den, const mpq_class& u) {
  mpq_class v = 1;
  for (int r : roots) v *= u - r;
  return v / den;
}
}  // namespace

TEST_CASE("King polynomials") {
  CHECK(king_polynomial(Partition()).roots.empty());
  CHECK(king_polynomial(Partition()).denominator == 1);
  for (int u = -5; u <= 5; ++u) {
    mpq_class q(u);
    CHECK(king_polynomial(Partition{1}).eval(q) == q);
    CHECK(king_polynomial(Partition{2}).eval(q) == expanded({-2, 1}, 2, q));
    CHECK(king_polynomial(Partition{1, 1}).eval(q) == expanded({0, 1}, 2, q));
    CHECK(king_polynomial(Partition{2, 1}).eval(q) == expanded({-2, 0, 2}, 3, q));
  }
  CHECK(king_polynomial(Partition{2, 1}).eval(2.5) == doctest::Approx(4.5 * 2.5 * 0.5 / 3));
  for (int k = 0; k <= 6; ++k)
    for (auto& p : partitions_of(k)) CHECK(king_polynomial(p).roots.size() == static_cast<std::size_t>(k));
}

TEST_CASE("King root multiplicity") {
  for (int d = -4; d <= 4; ++d) CHECK(king_root_multiplicity(Partition(), d) == 0);
  CHECK(king_root_multiplicity(Partition{2}, 1) == 1);
  CHECK(king_root_multiplicity(Partition{2, 1}, -2) == 1);
  CHECK(king_root_multiplicity(Partition{2, 1}, 3) == 0);
}
