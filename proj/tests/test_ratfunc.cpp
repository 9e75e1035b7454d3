#include <doctest.h>

#include "brauer/ratfunc.hpp"

using namespace brauer;

namespace {
Poly lin(const mpq_class& a, const mpq_class& b) { return Poly::linear(a, b); }
}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly p = lin(1, -1) * lin(1, 2);  // u^2 + u - 2
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == -2);
  CHECK(p.coeff(1) == 1);
  CHECK(p.eval(3) == 10);
  CHECK((p - p).is_zero());
  auto [q, r] = p.divmod(lin(1, -1));
  CHECK(q == lin(1, 2));
  CHECK(r.is_zero());
  auto [q2, r2] = p.divmod(lin(2, 0));
  CHECK(q2 * lin(2, 0) + r2 == p);
  CHECK(p.str() == "u^2 + u - 2");
  CHECK(Poly(mpq_class(-3, 2)).str() == "-3/2");
}

TEST_CASE("roots and gcd") {
  Poly p = lin(1, -1) * lin(1, -1) * lin(1, 3);
  auto [k, rest] = p.strip_root(1);
  CHECK(k == 2);
  CHECK(rest == lin(1, 3));
  CHECK(gcd(p, lin(1, -1) * lin(1, 5)) == lin(1, -1));
  CHECK(gcd(lin(2, 4), lin(3, 6)) == lin(1, 2));
  CHECK(gcd(lin(1, 1), lin(1, 2)) == Poly(1));
}

TEST_CASE("rational functions reduce") {
  RationalFunction f(lin(1, -1) * lin(1, 2), lin(2, -2));
  CHECK(f.num() == lin(mpq_class(1, 2), 1));
  CHECK(f.den() == Poly(1));
  RationalFunction g(Poly(1), lin(1, 0));
  CHECK((g * RationalFunction(lin(1, 0))) == RationalFunction(1));
  CHECK((g + g).eval(4) == mpq_class(1, 2));
  CHECK((g - g).is_zero());
  CHECK((g / g) == RationalFunction(1));
  CHECK_THROWS(RationalFunction(Poly(1), Poly()));
}

TEST_CASE("poles and expansions") {
  RationalFunction f(lin(1, -2), lin(1, 0) * lin(1, 0));  // (u-2)/u^2
  CHECK(f.has_pole(0));
  CHECK_FALSE(f.has_pole(2));
  CHECK_THROWS_AS(f.eval(0), std::domain_error);
  auto [order, lead] = f.expand_at(0);
  CHECK(order == -2);
  CHECK(lead == -2);
  auto [o2, l2] = f.expand_at(2);
  CHECK(o2 == 1);
  CHECK(l2 == mpq_class(1, 4));
  auto [o3, l3] = f.expand_at(1);
  CHECK(o3 == 0);
  CHECK(l3 == -1);
}

TEST_CASE("cancellation removes removable singularities") {
  // (1 - u/(u-1)) * (u-1) = -1 everywhere, including u = 1
  RationalFunction a = RationalFunction(1) - RationalFunction(lin(1, 0), lin(1, -1));
  RationalFunction b = a * RationalFunction(lin(1, -1));
  CHECK_FALSE(b.has_pole(1));
  CHECK(b.eval(1) == -1);
}
