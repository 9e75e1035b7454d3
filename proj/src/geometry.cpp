#include "brauer/geometry.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace brauer {

long EmbeddedPoint::entry2(int i) const {
  if (i >= 1 && i <= static_cast<int>(doubled.size())) return doubled[i - 1];
  return -static_cast<long>(delta) - 2L * (i - 1);
}

bool EmbeddedPoint::contains2(long w) const {
  for (int i = 1; i < tail_start; ++i)
    if (entry2(i) == w) return true;
  long t = -static_cast<long>(delta) - w;
  if (t % 2 != 0) return false;
  long i = t / 2 + 1;
  return i >= tail_start;
}

EmbeddedPoint embed(const Partition& p, int delta) {
  EmbeddedPoint x;
  x.delta = delta;
  x.tail_start = p.row(1) + 1;
  int len = p.row(1) + p.length() + std::abs(delta) + 4;
  for (int i = 1; i <= len; ++i) x.doubled.push_back(2L * p.col(i) - delta - 2L * (i - 1));
  return x;
}

int degree_of_singularity(const EmbeddedPoint& x) {
  // Only non-negative entries can pair with a negative one, and the
  // sequence is strictly decreasing, so the scan below is finite.
  int deg = 0;
  for (int i = 1;; ++i) {
    long v = x.entry2(i);
    if (v <= 0) break;
    if (x.contains2(-v)) ++deg;
  }
  return deg;
}

int degree(const Partition& p, int delta) { return degree_of_singularity(embed(p, delta)); }

int rho_degree(int delta) {
  if (delta >= 0) return 0;
  if (delta % 2 == 0) return -delta / 2;
  return (1 - delta) / 2;
}

bool is_delta_regular(const Partition& p, int delta) { return degree(p, delta) == rho_degree(delta); }

bool in_A_delta(const Partition& p, int delta) {
  if (delta >= 0) return p.col(1) + p.col(2) <= delta;
  if (delta % 2 == 0) return p.row(1) <= -delta / 2;
  int m = (1 - delta) / 2;
  return p.row(1) + p.row(2) <= 2 * m + 1;
}

std::vector<Partition> restricted_neighbors(const Partition& p, int delta) {
  if (!in_A_delta(p, delta)) throw std::invalid_argument("partition " + p.str() + " is not delta-restricted");
  std::vector<Partition> out;
  for (auto& q : moves(p))
    if (in_A_delta(q, delta)) out.push_back(q);
  return out;
}

std::set<Partition> A_delta_bfs(int delta, int max_size) {
  std::set<Partition> seen{Partition()};
  std::vector<Partition> stack{Partition()};
  while (!stack.empty()) {
    Partition p = stack.back();
    stack.pop_back();
    for (auto& q : moves(p)) {
      if (q.size() > max_size + 1 || seen.count(q) || !is_delta_regular(q, delta)) continue;
      seen.insert(q);
      stack.push_back(q);
    }
  }
  std::set<Partition> out;
  for (auto& p : seen)
    if (p.size() <= max_size) out.insert(p);
  return out;
}

std::vector<Partition> moves(const Partition& p) {
  auto nb = box_neighbors(p);
  auto out = std::move(nb.addable);
  out.insert(out.end(), nb.removable.begin(), nb.removable.end());
  return out;
}

namespace {
void check_parity(const Partition& p, int n) {
  if (n < p.size() || (n - p.size()) % 2 != 0)
    throw std::invalid_argument("walk length " + std::to_string(n) + " does not match partition " + p.str());
}

void walk_rec(const Partition& target, int n, const std::optional<int>& d, Walk& cur, std::vector<Walk>& out) {
  int k = static_cast<int>(cur.size()) - 1;
  if (k == n) {
    if (cur.back() == target) out.push_back(cur);
    return;
  }
  for (auto& q : moves(cur.back())) {
    if (std::abs(q.size() - target.size()) > n - k - 1) continue;
    if (d && !in_A_delta(q, *d)) continue;
    cur.push_back(q);
    walk_rec(target, n, d, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::uint64_t count_walks(const Partition& p, int n, std::optional<int> d) {
  check_parity(p, n);
  if (d && !in_A_delta(p, *d)) throw std::invalid_argument("partition " + p.str() + " is not delta-restricted");
  std::map<Partition, std::uint64_t> layer{{Partition(), 1}};
  for (int k = 0; k < n; ++k) {
    std::map<Partition, std::uint64_t> next;
    for (auto& [q, c] : layer)
      for (auto& r : moves(q)) {
        if (std::abs(r.size() - p.size()) > n - k - 1) continue;
        if (d && !in_A_delta(r, *d)) continue;
        next[r] += c;
      }
    layer = std::move(next);
  }
  auto it = layer.find(p);
  return it == layer.end() ? 0 : it->second;
}

std::vector<Walk> enumerate_walks(const Partition& p, int n, std::optional<int> d) {
  check_parity(p, n);
  if (d && !in_A_delta(p, *d)) throw std::invalid_argument("partition " + p.str() + " is not delta-restricted");
  std::vector<Walk> out;
  Walk cur{Partition()};
  walk_rec(p, n, d, cur, out);
  return out;
}

Step step_between(const Partition& a, const Partition& b) {
  int len = std::max(a.length(), b.length());
  std::optional<Step> found;
  for (int r = 1; r <= len; ++r) {
    int diff = b.row(r) - a.row(r);
    if (diff == 0) continue;
    if (found || std::abs(diff) != 1) {
      found.reset();
      break;
    }
    found = diff == 1 ? Step{1, r, b.row(r)} : Step{-1, r, a.row(r)};
  }
  if (!found) throw std::invalid_argument("partitions " + a.str() + " and " + b.str() + " do not differ by one box");
  return *found;
}

}  // namespace brauer
