#include "brauer/weight.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>
#include <stdexcept>

#include "brauer/geometry.hpp"

namespace brauer {

WeightDiagram::WeightDiagram(int delta, std::vector<Label> labels) : delta_(delta), labels_(std::move(labels)) {
  normalise();
}

void WeightDiagram::normalise() {
  if (!odd() && !labels_.empty() && labels_[0] == Label::Up) labels_[0] = Label::Down;
  while (!labels_.empty() && labels_.back() == Label::Down) labels_.pop_back();
}

WeightDiagram WeightDiagram::parse(int delta, const std::string& text) {
  std::vector<Label> labels;
  for (char c : text) {
    switch (c) {
      case 'o': labels.push_back(Label::Circ); break;
      case 'x': labels.push_back(Label::Times); break;
      case 'v': labels.push_back(Label::Down); break;
      case '^': labels.push_back(Label::Up); break;
      case ' ': case '.': break;
      default: throw std::invalid_argument(std::string("bad weight label '") + c + "'");
    }
  }
  return WeightDiagram(delta, std::move(labels));
}

int WeightDiagram::m() const {
  // floor(delta / 2)
  return delta_ >= 0 ? delta_ / 2 : -((1 - delta_) / 2);
}

Label WeightDiagram::at(int k) const {
  return (k >= 0 && k < prefix()) ? labels_[k] : Label::Down;
}

WeightDiagram WeightDiagram::with(int k, Label l) const {
  auto labels = labels_;
  if (k >= static_cast<int>(labels.size())) labels.resize(k + 1, Label::Down);
  labels[k] = l;
  return WeightDiagram(delta_, std::move(labels));
}

int WeightDiagram::count(Label l) const {
  return static_cast<int>(std::count(labels_.begin(), labels_.end(), l));
}

std::string WeightDiagram::str(int min_width) const {
  std::string out;
  int w = std::max(prefix(), min_width);
  for (int k = 0; k < w; ++k) {
    if (k) out += ' ';
    out += static_cast<char>(at(k));
  }
  return out;
}

WeightDiagram weight_diagram(const Partition& p, int delta) {
  auto x = embed(p, delta);
  long maxabs = 0;
  for (long v : x.doubled) maxabs = std::max(maxabs, std::labs(v));
  int slots = static_cast<int>(maxabs / 2) + 4;
  bool odd = delta % 2 != 0;
  std::vector<Label> labels;
  for (int k = 0; k < slots; ++k) {
    long v = 2L * k + (odd ? 1 : 0);
    if (!odd && k == 0) {
      labels.push_back(x.contains2(0) ? Label::Down : Label::Circ);
      continue;
    }
    bool up = x.contains2(v), down = x.contains2(-v);
    labels.push_back(up && down ? Label::Times : up ? Label::Up : down ? Label::Down : Label::Circ);
  }
  return WeightDiagram(delta, std::move(labels));
}

namespace {

// Doubled values present in the embedded sequence, restricted to a window
// outside of which everything below is present and everything above absent.
struct PointSet {
  long lo, hi;
  std::set<long> present;
  bool has(long v) const { return v < lo || present.count(v) > 0; }
};

PointSet points(const WeightDiagram& x) {
  PointSet ps;
  int span = x.prefix() + 3;
  long parity = x.odd() ? 1 : 0;
  ps.lo = -2L * (span - 1) - parity;
  ps.hi = 2L * (span - 1) + parity;
  for (int k = 0; k < span; ++k) {
    Label c = x.at(k);
    long v = x.doubled_value(k);
    if (x.wildcard(k)) {
      if (c == Label::Times) throw std::invalid_argument("vertex 0 cannot carry x");
      if (c != Label::Circ) ps.present.insert(0);
      continue;
    }
    if (c == Label::Times || c == Label::Up) ps.present.insert(v);
    if (c == Label::Times || c == Label::Down) ps.present.insert(-v);
  }
  return ps;
}

std::vector<long> grid(const PointSet& ps) {
  std::vector<long> g;
  for (long v = ps.lo; v <= ps.hi; v += 2) g.push_back(v);
  return g;
}

}  // namespace

// Occupied points read downwards give the columns: the i-th one sits
// lambda^T_i steps above the i-th entry of rho_delta.
Partition reading_columns(const WeightDiagram& x) {
  auto ps = points(x);
  std::vector<long> present;
  for (long g : grid(ps))
    if (ps.has(g)) present.push_back(g);
  std::sort(present.rbegin(), present.rend());
  std::vector<int> cols;
  for (std::size_t i = 0; i < present.size(); ++i) {
    long base = -x.delta() - 2L * static_cast<long>(i);
    long c = (present[i] - base) / 2;
    if (c < 0) throw std::invalid_argument("malformed weight diagram: below rho");
    if (c == 0) break;
    cols.push_back(static_cast<int>(c));
  }
  return Partition(cols).transpose();
}

// Empty points read upwards give the rows: the j-th one sits lambda_j steps
// below the j-th empty point of rho_delta.
Partition reading_rows(const WeightDiagram& x) {
  auto ps = points(x);
  std::vector<long> absent;
  for (long g : grid(ps))
    if (!ps.has(g)) absent.push_back(g);
  std::vector<int> rows;
  for (std::size_t j = 0; j < absent.size(); ++j) {
    long base = -x.delta() + 2L * static_cast<long>(j + 1);
    long r = (base - absent[j]) / 2;
    if (r < 0) throw std::invalid_argument("malformed weight diagram: above rho");
    if (r == 0) break;
    rows.push_back(static_cast<int>(r));
  }
  return Partition(rows);
}

Partition partition_from_weight(const WeightDiagram& x) {
  if (x.count(Label::Circ) - x.count(Label::Times) != x.m())
    throw std::invalid_argument("malformed weight diagram: #o - #x != m");
  Partition a = reading_columns(x);
  Partition b = reading_rows(x);
  if (a != b) throw std::invalid_argument("malformed weight diagram: readings disagree");
  if (weight_diagram(a, x.delta()) != x) throw std::invalid_argument("malformed weight diagram: no partition has it");
  return a;
}

std::string roman(BoxMoveCase c) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
  return names[static_cast<int>(c) - 1];
}

BoxMove classify_box_move(const Partition& lambda, const Partition& mu, int delta) {
  auto add = box_neighbors(lambda).addable;
  if (std::find(add.begin(), add.end(), mu) == add.end())
    throw std::invalid_argument(mu.str() + " is not " + lambda.str() + " plus a box");
  auto xl = weight_diagram(lambda, delta);
  auto xm = weight_diagram(mu, delta);
  int width = std::max(xl.prefix(), xm.prefix()) + 1;
  std::vector<int> diff;
  for (int k = 0; k < width; ++k)
    if (xl.at(k) != xm.at(k)) diff.push_back(k);
  if (diff.empty() || diff.back() - diff.front() > 1) throw std::logic_error("box move changes non-adjacent vertices");
  int dchange = degree(mu, delta) - degree(lambda, delta);

  using L = Label;
  struct Pattern {
    BoxMoveCase tag;
    L a0, a1, b0, b1;
  };
  static const Pattern table[] = {
      {BoxMoveCase::I, L::Times, L::Down, L::Down, L::Times},
      {BoxMoveCase::II, L::Up, L::Times, L::Times, L::Up},
      {BoxMoveCase::III, L::Circ, L::Down, L::Down, L::Circ},
      {BoxMoveCase::IV, L::Up, L::Circ, L::Circ, L::Up},
      {BoxMoveCase::VI, L::Up, L::Down, L::Circ, L::Times},
      {BoxMoveCase::VII, L::Up, L::Down, L::Times, L::Circ},
      {BoxMoveCase::VIII, L::Circ, L::Times, L::Down, L::Up},
      {BoxMoveCase::IX, L::Times, L::Circ, L::Down, L::Up},
  };
  auto eq = [&](int k, L have, L want) {
    if (xl.wildcard(k) && (have == L::Down || have == L::Up)) return want == L::Down || want == L::Up;
    return have == want;
  };
  std::optional<BoxMove> hit;
  if (xl.odd() && diff.size() == 1 && diff[0] == 0 && xl.at(0) == L::Down && xm.at(0) == L::Up)
    hit = BoxMove{BoxMoveCase::V, 0, dchange};
  for (int k = std::max(0, diff.back() - 1); !hit && k <= diff.front(); ++k)
    for (auto& p : table)
      if (eq(k, xl.at(k), p.a0) && eq(k + 1, xl.at(k + 1), p.a1) && eq(k, xm.at(k), p.b0) &&
          eq(k + 1, xm.at(k + 1), p.b1)) {
        hit = BoxMove{p.tag, k, dchange};
        break;
      }
  if (!hit) throw std::logic_error("unclassified box move " + lambda.str() + " -> " + mu.str());
  int expect = hit->tag <= BoxMoveCase::V ? 0 : hit->tag <= BoxMoveCase::VII ? 1 : -1;
  if (expect != dchange) throw std::logic_error("box move case disagrees with degree change");
  return *hit;
}

namespace {
int left_balance(const WeightDiagram& x, int k) {
  // #x left of k minus #o left of k
  int b = 0;
  for (int t = 0; t < k; ++t) {
    if (x.at(t) == Label::Times) ++b;
    if (x.at(t) == Label::Circ) --b;
  }
  return b;
}
}  // namespace

std::vector<PairWitness> times_pairs(const Partition& p, int delta) {
  auto x = weight_diagram(p, delta);
  auto e = embed(p, delta);
  int bound = x.odd() ? x.m() : x.m() - 1;
  std::vector<PairWitness> out;
  for (int k = 0; k < x.prefix(); ++k) {
    if (x.at(k) != Label::Times) continue;
    long v = x.doubled_value(k);
    int a = 0, b = 0;
    for (int t = 1; a == 0 || b == 0; ++t) {
      if (e.entry2(t) == v) a = t;
      if (e.entry2(t) == -v) b = t;
      if (e.entry2(t) < -v) break;
    }
    if (a == 0 || b == 0) throw std::logic_error("x vertex without its pair of entries");
    // pair (i > j) with col_i + col_j - i - j + 2 = delta
    int i = b, j = a;
    out.push_back({k, i, j, p.contains(i, j), left_balance(x, k) < bound});
  }
  return out;
}

std::vector<PairWitness> circ_pairs(const Partition& p, int delta) {
  auto x = weight_diagram(p, delta);
  int bound = x.odd() ? x.m() : x.m() - 1;
  std::vector<PairWitness> out;
  // 2*(lambda_i - i) + delta is strictly decreasing in i.
  auto row_value = [&](int i) { return 2L * (p.row(i) - i) + delta; };
  int limit = p.length() + 2 * x.prefix() + std::abs(delta) + 4;
  for (int k = 0; k < x.prefix(); ++k) {
    if (x.at(k) != Label::Circ) continue;
    long v = x.doubled_value(k);
    int i = 0, j = 0;
    for (int t = 1; t <= limit; ++t) {
      if (row_value(t) == v) i = t;
      if (row_value(t) == -v) j = t;
    }
    if (i == 0 || j == 0) throw std::logic_error("o vertex without its pair of rows");
    out.push_back({k, i, j, p.contains(i, j), left_balance(x, k) > bound});
  }
  return out;
}

bool same_block(const Partition& a, const Partition& b, int delta) {
  auto xa = weight_diagram(a, delta), xb = weight_diagram(b, delta);
  int w = std::max(xa.prefix(), xb.prefix());
  for (int k = 0; k < w; ++k) {
    bool sa = xa.at(k) == Label::Circ || xa.at(k) == Label::Times;
    bool sb = xb.at(k) == Label::Circ || xb.at(k) == Label::Times;
    if ((sa || sb) && xa.at(k) != xb.at(k)) return false;
  }
  if (xa.zero_flag()) return true;
  return (xa.count(Label::Up) - xb.count(Label::Up)) % 2 == 0;
}

bool order_leq(const Partition& a, const Partition& b, int delta) {
  if (!same_block(a, b, delta)) throw std::invalid_argument("order_leq needs partitions in one block");
  auto start = weight_diagram(a, delta), target = weight_diagram(b, delta);
  int maxsize = b.size();
  std::set<std::vector<Label>> seen{start.labels()};
  std::queue<WeightDiagram> todo;
  todo.push(start);
  while (!todo.empty()) {
    auto x = todo.front();
    todo.pop();
    if (x == target) return true;
    int width = x.prefix() + 2 * maxsize + 4;
    std::vector<WeightDiagram> next;
    for (int q = 1; q < width; ++q) {
      if (x.at(q) != Label::Down) continue;
      if (x.zero_flag()) next.push_back(x.with(q, Label::Up));
      for (int p = 0; p < q; ++p) {
        if (x.wildcard(p)) continue;
        if (x.at(p) == Label::Up) next.push_back(x.with(p, Label::Down).with(q, Label::Up));
        if (x.at(p) == Label::Down) next.push_back(x.with(p, Label::Up).with(q, Label::Up));
      }
    }
    for (auto& y : next) {
      if (seen.count(y.labels())) continue;
      seen.insert(y.labels());
      if (reading_rows(y).size() > maxsize) continue;
      todo.push(y);
    }
  }
  return false;
}

}  // namespace brauer
