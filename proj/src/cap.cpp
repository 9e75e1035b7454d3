#include "brauer/cap.hpp"

#include <algorithm>
#include <set>

namespace brauer {

std::optional<int> CapDiagram::partner(int v) const {
  for (auto [a, b] : caps) {
    if (a == v) return b;
    if (b == v) return a;
  }
  for (auto [a, b] : curls) {
    if (a == v) return b;
    if (b == v) return a;
  }
  return std::nullopt;
}

CapDiagram cap_diagram(const WeightDiagram& x) {
  CapDiagram c{x, {}, {}, {}, std::nullopt, x.prefix() + 2};
  std::vector<int> stack, free_up;
  for (int k = 0; k < c.window; ++k) {
    Label l = x.at(k);
    if (l == Label::Down) {
      stack.push_back(k);
    } else if (l == Label::Up) {
      if (!stack.empty()) {
        c.caps.emplace_back(stack.back(), k);
        stack.pop_back();
      } else {
        free_up.push_back(k);
      }
    }
  }
  for (std::size_t t = 0; t + 1 < free_up.size(); t += 2) c.curls.emplace_back(free_up[t], free_up[t + 1]);
  if (free_up.size() % 2) c.up_ray = free_up.back();
  c.rays = stack;
  std::sort(c.caps.begin(), c.caps.end());
  return c;
}

CapDiagram cap_diagram(const Partition& p, int delta) { return cap_diagram(weight_diagram(p, delta)); }

Chamber chamber_of_gap(const CapDiagram& c, int gap) {
  std::optional<Chamber> best;
  int best_width = 0;
  auto consider = [&](Chamber ch, int lo, int hi) {
    if (gap < lo || gap > hi) return;
    if (!best || hi - lo < best_width) {
      best = ch;
      best_width = hi - lo;
    }
  };
  for (auto [a, b] : c.caps) consider({Chamber::Cap, a, b}, a + 1, b);
  for (auto [a, b] : c.curls) consider({Chamber::Curl, a, b}, 0, a);
  if (best) return *best;
  int rays_left = static_cast<int>(std::count_if(c.rays.begin(), c.rays.end(), [&](int r) { return r < gap; }));
  if (c.up_ray && *c.up_ray < gap) ++rays_left;
  if (gap > c.window) rays_left += gap - c.window;
  return {Chamber::Outer, rays_left, 0};
}

Chamber chamber_of(const CapDiagram& c, int v) { return chamber_of_gap(c, v); }

bool belongs_to_chamber(const CapDiagram& c, int v, const Chamber& ch) {
  Label l = c.base.at(v);
  if (l == Label::Circ || l == Label::Times) return chamber_of_gap(c, v) == ch;
  return chamber_of_gap(c, v) == ch || chamber_of_gap(c, v + 1) == ch;
}

std::optional<int> d_poly(const Partition& lambda, const Partition& mu, int delta) {
  auto xl = weight_diagram(lambda, delta);
  auto xm = weight_diagram(mu, delta);
  auto c = cap_diagram(xl);
  auto eq = [&](int k, Label s, Label t) {
    if (xl.wildcard(k) && (s == Label::Down || s == Label::Up)) return t == Label::Down || t == Label::Up;
    return s == t;
  };
  auto flip = [](Label l) { return l == Label::Down ? Label::Up : Label::Down; };
  std::set<int> arc_slots;
  for (auto [a, b] : c.caps) arc_slots.insert({a, b});
  for (auto [a, b] : c.curls) arc_slots.insert({a, b});
  int width = std::max(xl.prefix(), xm.prefix()) + 1;
  for (int k = 0; k < width; ++k)
    if (!arc_slots.count(k) && !eq(k, xl.at(k), xm.at(k))) return std::nullopt;
  int flips = 0;
  auto check_arc = [&](int a, int b) {
    if (eq(a, xl.at(a), xm.at(a)) && xl.at(b) == xm.at(b)) return true;
    if (eq(a, flip(xl.at(a)), xm.at(a)) && flip(xl.at(b)) == xm.at(b)) {
      ++flips;
      return true;
    }
    return false;
  };
  for (auto [a, b] : c.caps)
    if (!check_arc(a, b)) return std::nullopt;
  for (auto [a, b] : c.curls)
    if (!check_arc(a, b)) return std::nullopt;
  return flips;
}

int decomposition_number(const Partition& lambda, const Partition& mu, int delta) {
  return d_poly(lambda, mu, delta) ? 1 : 0;
}

}  // namespace brauer
