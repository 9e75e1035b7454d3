#include <doctest.h>

#include <set>

#include "brauer/geometry.hpp"
#include "brauer/oracle.hpp"

using namespace brauer;

TEST_CASE("diagram relations") {
  for (int n = 2; n <= 5; ++n) {
    auto id = BrauerDiagram::identity(n);
    for (int i = 0; i + 1 < n; ++i) {
      auto e = BrauerDiagram::e(i, n), s = BrauerDiagram::sigma(i, n);
      auto [ee, loops] = multiply(e, e);
      CHECK(ee == e);
      CHECK(loops == 1);
      CHECK(multiply(s, s).first == id);
      CHECK(multiply(e, s).first == e);
      if (i + 2 < n) {
        auto s2 = BrauerDiagram::sigma(i + 1, n);
        auto [ese, l2] = multiply(multiply(e, s2).first, e);
        CHECK(ese == e);
        CHECK(l2 == 0);
      }
    }
  }
}

TEST_CASE("number of diagrams") {
  long f = 1;
  for (int n = 1; n <= 5; ++n) {
    f *= 2 * n - 1;
    CHECK(static_cast<long>(all_diagrams(n).size()) == f);
  }
}

TEST_CASE("Specht modules") {
  SpechtModule triv(Partition{3});
  CHECK(triv.dim() == 1);
  CHECK(triv.act_perm({2, 1, 3}).is_scalar(nullptr));
  SpechtModule sign(Partition{1, 1});
  mpq_class c;
  REQUIRE(sign.act_perm({2, 1}).is_scalar(&c));
  CHECK(c == -1);
  SpechtModule s21(Partition{2, 1});
  CHECK(s21.dim() == 2);
  auto a = s21.act_perm({2, 1, 3}), b = s21.act_perm({1, 3, 2});
  auto id = QMatrix::identity(2);
  CHECK(a * a == id);
  CHECK(a * b * a == b * a * b);
  CHECK(standard_tableaux(Partition{3, 2}).size() == 5);
}

TEST_CASE("cell modules") {
  CellModule d2(Partition(), 2, 5);
  CHECK(d2.dim() == 1);
  auto g = d2.gram();
  CHECK(g(0, 0) == 5);
  CHECK(cell_dimension(Partition(), 4) == 3);
  CHECK(half_diagrams(4, 1).size() == 6);
  for (int n = 1; n <= 5; ++n)
    for (int k = n; k >= 0; k -= 2)
      for (auto& p : partitions_of(k)) {
        CHECK(cell_dimension(p, n) == static_cast<int>(count_walks(p, n)));
        CHECK(gram_rank(p, n, mpq_class(1000000, 7)) == cell_dimension(p, n));
      }
}

TEST_CASE("the action respects products") {
  mpq_class delta(3);
  for (auto& p : std::vector<Partition>{Partition(), Partition{1}, Partition{2, 1}}) {
    int n = p.size() + 2;
    CellModule m(p, n, delta);
    auto e = BrauerDiagram::e(0, n), s = BrauerDiagram::sigma(n - 2, n);
    auto [es, loops] = multiply(e, s);
        CHECK(m.act(e) * m.act(s) == m.act(es));
    CHECK(m.act(e) * m.act(e) == m.act(e).scaled(delta));
  }
}

TEST_CASE("central characters separate standard modules in the semisimple case") {
  CenterOracle z(3, 100);
  auto& ch = z.characters();
  CHECK(ch.size() == lambda_set(3).size());
  std::set<mpq_class> vals;
  for (auto& [p, c] : ch) vals.insert(c);
  CHECK(vals.size() == ch.size());
}
