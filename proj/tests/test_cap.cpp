#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brauer/cap.hpp"
#include "brauer/geometry.hpp"

using namespace brauer;

namespace {
// Caps found by repeatedly joining a random v ^ pair with nothing but o, x or
// already capped vertices between them.
std::vector<Arc> caps_in_random_order(const WeightDiagram& x, int window, std::mt19937& rng) {
  std::vector<bool> used(window, false);
  std::vector<Arc> caps;
  while (true) {
    std::vector<Arc> cand;
    for (int a = 0; a < window; ++a) {
      if (used[a] || x.at(a) != Label::Down) continue;
      for (int b = a + 1; b < window; ++b) {
        if (used[b]) continue;
        Label l = x.at(b);
        if (l == Label::Up) cand.push_back({a, b});
        if (l == Label::Up || l == Label::Down) break;
      }
    }
    if (cand.empty()) break;
    auto pick = cand[std::uniform_int_distribution<std::size_t>(0, cand.size() - 1)(rng)];
    used[pick.first] = used[pick.second] = true;
    caps.push_back(pick);
  }
  std::sort(caps.begin(), caps.end());
  return caps;
}
}  // namespace

TEST_CASE("cap diagram without up labels") {
  auto c = cap_diagram(Partition(), 2);
  CHECK(c.caps.empty());
  CHECK(c.curls.empty());
  CHECK_FALSE(c.up_ray);
  CHECK(std::find(c.rays.begin(), c.rays.end(), 1) != c.rays.end());
}

TEST_CASE("an adjacent v ^ pair is one cap") {
  auto c = cap_diagram(WeightDiagram::parse(3, "o v ^ x"));
  REQUIRE(c.caps.size() == 1);
  CHECK(c.caps[0] == Arc{1, 2});
  CHECK(c.partner(1) == 2);
  CHECK_FALSE(c.on_arc(0));
}

TEST_CASE("leftover up labels pair into curls") {
  auto c = cap_diagram(WeightDiagram::parse(1, "^ o ^ ^ v ^"));
  CHECK(c.caps == std::vector<Arc>{{4, 5}});
  CHECK(c.curls == std::vector<Arc>{{0, 2}});
  CHECK(c.up_ray == 3);
}

TEST_CASE("caps do not depend on the pairing order") {
  std::mt19937 rng(11);
  for (int d = -5; d <= 5; ++d)
    for (int k = 0; k <= 8; ++k)
      for (auto& p : partitions_of(k)) {
        auto c = cap_diagram(p, d);
        for (int t = 0; t < 3; ++t) CHECK(caps_in_random_order(c.base, c.window, rng) == c.caps);
      }
}

TEST_CASE("arcs never cross") {
  for (int d = -5; d <= 5; ++d)
    for (int k = 0; k <= 8; ++k)
      for (auto& p : partitions_of(k)) {
        auto c = cap_diagram(p, d);
        auto arcs = c.caps;
        for (auto [a, b] : arcs)
          for (auto [e, f] : arcs) CHECK_FALSE((a < e && e < b && b < f));
        // a curl folds to an arc from -a to b
        for (auto [a, b] : c.curls) {
          for (auto [e, f] : c.caps) CHECK_FALSE((e < b && b < f));
          for (auto [e, f] : c.curls) CHECK_FALSE(((e < a && a < b && b < f) && !(e == a && f == b)));
        }
      }
}

TEST_CASE("chambers") {
  auto open = cap_diagram(WeightDiagram::parse(4, "o o x v v"));
  CHECK(chamber_of(open, 0) == chamber_of(open, 1));
  CHECK(chamber_of(open, 1) == chamber_of(open, 2));
  CHECK(chamber_of(open, 0).kind == Chamber::Outer);

  auto one = cap_diagram(WeightDiagram::parse(3, "o v x o ^"));
  CHECK(chamber_of(one, 2) == Chamber{Chamber::Cap, 1, 4});
  CHECK(chamber_of(one, 3) == Chamber{Chamber::Cap, 1, 4});
  CHECK(chamber_of(one, 0).kind == Chamber::Outer);
  CHECK(belongs_to_chamber(one, 1, chamber_of(one, 2)));
  CHECK(belongs_to_chamber(one, 4, chamber_of(one, 2)));

  auto curl = cap_diagram(WeightDiagram::parse(3, "x ^ o ^"));
  CHECK(chamber_of(curl, 0) == Chamber{Chamber::Curl, 1, 3});
  CHECK(chamber_of(curl, 2).kind == Chamber::Outer);
}

TEST_CASE("decomposition numbers") {
  for (int d = -4; d <= 4; ++d)
    for (int k = 0; k <= 6; ++k)
      for (auto& p : partitions_of(k)) CHECK(d_poly(p, p, d) == 0);
  for (auto& mu : lambda_set(4))
    if (mu != Partition()) CHECK(decomposition_number(Partition(), mu, 2) == 0);
}

TEST_CASE("nonzero decomposition numbers respect blocks and the order") {
  for (int d : {-3, -2, -1, 1, 2, 3})
    for (int n = 0; n <= 6; ++n) {
      auto lam = lambda_set(n);
      for (auto& l : lam)
        for (auto& mu : lam) {
          if (!decomposition_number(l, mu, d)) continue;
          REQUIRE(same_block(l, mu, d));
          CHECK(order_leq(mu, l, d));
        }
    }
}
