#include <doctest.h>

#include <algorithm>
#include <map>

#include "brauer/geometry.hpp"
#include "brauer/weight.hpp"

using namespace brauer;

namespace {
std::string repeat(char c, int k) {
  std::string s;
  for (int i = 0; i < k; ++i) s += std::string(i ? " " : "") + c;
  return s;
}

// Same W-orbit for the type D Weyl group acting on the first N entries:
// equal multisets of |x_i|, and equal sign parity unless some entry is 0.
bool same_orbit(const Partition& a, const Partition& b, int d) {
  int N = std::max(a.length() + a.row(1), b.length() + b.row(1)) + std::abs(d) + 4;
  auto xa = embed(a, d), xb = embed(b, d);
  std::vector<long> ma, mb;
  int na = 0, nb = 0;
  bool zero = false;
  for (int i = 1; i <= N; ++i) {
    ma.push_back(std::labs(xa.entry2(i)));
    mb.push_back(std::labs(xb.entry2(i)));
    na += xa.entry2(i) < 0;
    nb += xb.entry2(i) < 0;
    zero = zero || xa.entry2(i) == 0;
  }
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  return ma == mb && (zero || (na - nb) % 2 == 0);
}
}  // namespace

TEST_CASE("weight diagram of the empty partition") {
  CHECK(weight_diagram(Partition(), 10).str(8) == repeat('o', 5) + " v v v");
  CHECK(weight_diagram(Partition(), -9).str(8) == repeat('x', 5) + " v v v");
  CHECK(weight_diagram(Partition(), -10).str(8) == "v " + repeat('x', 5) + " v v");
  CHECK(weight_diagram(Partition(), 2).str(3) == "o v v");
  CHECK(partition_from_weight(weight_diagram(Partition(), 4)) == Partition());
}

TEST_CASE("round trip and the counting lemma") {
  for (int d = -6; d <= 6; ++d)
    for (int k = 0; k <= 9; ++k)
      for (auto& p : partitions_of(k)) {
        auto x = weight_diagram(p, d);
        CHECK(reading_columns(x) == p);
        CHECK(reading_rows(x) == p);
        CHECK(x.count(Label::Circ) - x.count(Label::Times) == x.m());
      }
}

TEST_CASE("worked example reads back") {
  Partition big{10, 10, 9, 9, 8, 5, 3, 3};
  for (int d = -8; d <= 8; ++d) CHECK(partition_from_weight(weight_diagram(big, d)) == big);
}

TEST_CASE("parsing weight diagrams") {
  auto x = WeightDiagram::parse(3, "o x v ^");
  CHECK(x.at(0) == Label::Circ);
  CHECK(x.at(3) == Label::Up);
  CHECK(x.at(7) == Label::Down);
  CHECK(WeightDiagram::parse(2, "^ o") == WeightDiagram::parse(2, "v o"));
}

TEST_CASE("box move cases") {
  auto a = classify_box_move(Partition(), Partition{1}, 2);
  CHECK(a.tag == BoxMoveCase::III);
  CHECK(a.degree_change == 0);
  auto b = classify_box_move(Partition(), Partition{1}, 0);
  CHECK(b.degree_change == 1);
  CHECK(classify_box_move(Partition{1}, Partition{1, 1}, 0).degree_change == 0);
  CHECK(roman(BoxMoveCase::VI) == "vi");

  bool found_v = false;
  for (int k = 0; k <= 4; ++k)
    for (auto& p : partitions_of(k))
      for (auto& q : box_neighbors(p).addable) {
        auto mv = classify_box_move(p, q, 1);
        if (mv.tag == BoxMoveCase::V) {
          found_v = true;
          CHECK(weight_diagram(p, 1).at(0) == Label::Down);
          CHECK(weight_diagram(q, 1).at(0) == Label::Up);
        }
      }
  CHECK(found_v);
}

TEST_CASE("every box move is classified consistently") {
  std::map<BoxMoveCase, int> seen;
  for (int d = -5; d <= 5; ++d)
    for (int k = 0; k <= 6; ++k)
      for (auto& p : partitions_of(k))
        for (auto& q : box_neighbors(p).addable) {
          auto mv = classify_box_move(p, q, d);
          CHECK(mv.degree_change == degree(q, d) - degree(p, d));
          ++seen[mv.tag];
        }
  CHECK(seen.size() == 9);
}

TEST_CASE("witness pairs") {
  for (auto& w : times_pairs(Partition(), -2)) CHECK_FALSE(w.in_diagram);
  CHECK_FALSE(times_pairs(Partition(), -2).empty());
  int inside = 0;
  for (auto& w : times_pairs(Partition{2}, 1)) inside += w.in_diagram;
  for (auto& w : circ_pairs(Partition{2}, 1)) inside += w.in_diagram;
  CHECK(inside == 1);
}

TEST_CASE("blocks are the type D orbits") {
  CHECK(same_block(Partition{2, 1}, Partition{2, 1}, 3));
  CHECK_FALSE(same_block(Partition(), Partition{1}, 2));
  for (int d = -4; d <= 4; ++d) {
    std::vector<Partition> all;
    for (int k = 0; k <= 6; ++k)
      for (auto& p : partitions_of(k)) all.push_back(p);
    for (auto& a : all)
      for (auto& b : all) {
        if ((a.size() - b.size()) % 2 != 0) continue;
        CHECK(same_block(a, b, d) == same_orbit(a, b, d));
      }
  }
}

TEST_CASE("the order is reflexive, antisymmetric and grows with size") {
  for (int d : {-3, -2, 1, 2}) {
    std::vector<Partition> all;
    for (int k = 0; k <= 5; ++k)
      for (auto& p : partitions_of(k)) all.push_back(p);
    for (auto& a : all) {
      CHECK(order_leq(a, a, d));
      for (auto& b : all) {
        if (a == b || !same_block(a, b, d)) continue;
        bool ab = order_leq(a, b, d), ba = order_leq(b, a, d);
        CHECK_FALSE((ab && ba));
        if (ab) CHECK(a.size() <= b.size());
      }
    }
  }
  CHECK_THROWS(order_leq(Partition(), Partition{1}, 2));
}
