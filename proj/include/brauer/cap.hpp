#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "brauer/weight.hpp"

namespace brauer {

using Arc = std::pair<int, int>;

struct CapDiagram {
  WeightDiagram base;
  std::vector<Arc> caps;       // (v, ^) pairs, a < b
  std::vector<Arc> curls;      // pairs of leftover ^'s joined through the wall
  std::vector<int> rays;       // free v's inside the drawn window
  std::optional<int> up_ray;   // the unpaired leftover ^, if any
  int window = 0;              // slots drawn explicitly; rays continue past it

  std::optional<int> partner(int v) const;
  bool on_arc(int v) const { return partner(v).has_value(); }
};

CapDiagram cap_diagram(const WeightDiagram& x);
CapDiagram cap_diagram(const Partition& p, int delta);

// Faces of the arc arrangement. Gap g is the open interval between slot
// g-1 and slot g (gap 0 touches the wall). A cap (a,b) covers gaps a+1..b.
// Folding the half-line through the wall turns a curl (a,b) into an arc
// that covers gaps 0..a. Gaps not covered by any arc fall into outer faces
// separated by the rays.
struct Chamber {
  enum Kind { Cap, Curl, Outer } kind;
  int a, b;  // arc endpoints; for Outer, a = number of rays to the left
  bool operator==(const Chamber&) const = default;
};

Chamber chamber_of_gap(const CapDiagram& c, int gap);
// For an o or x slot.
Chamber chamber_of(const CapDiagram& c, int v);
// A v or ^ slot lies on the boundary of the faces left and right of it.
bool belongs_to_chamber(const CapDiagram& c, int v, const Chamber& ch);

// Exponent k with d_{lambda mu}(q) = q^k, or nothing if zero.
std::optional<int> d_poly(const Partition& lambda, const Partition& mu, int delta);
int decomposition_number(const Partition& lambda, const Partition& mu, int delta);

}  // namespace brauer
