#include "brauer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace brauer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '(')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == ')')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "-" || text == "0") return Partition();
  std::vector<int> parts;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse partition: " + std::string(text));
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::col(int j) const {
  if (j < 1) return 0;
  int c = 0;
  for (int r : parts_) {
    if (r < j) break;
    ++c;
  }
  return c;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  for (int j = 1; j <= row(1); ++j) t.push_back(col(j));
  return Partition(std::move(t));
}

bool size_lex_less(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

Neighbors box_neighbors(const Partition& p) {
  Neighbors out;
  const auto& v = p.parts();
  for (int r = 0; r <= p.length(); ++r) {
    int cur = r < p.length() ? v[r] : 0;
    if (r == 0 || v[r - 1] > cur) {
      auto q = v;
      if (r == p.length()) q.push_back(0);
      ++q[r];
      out.addable.emplace_back(std::move(q));
    }
  }
  for (int r = 0; r < p.length(); ++r) {
    if (r == p.length() - 1 || v[r] > v[r + 1]) {
      auto q = v;
      --q[r];
      out.removable.emplace_back(std::move(q));
    }
  }
  return out;
}

namespace {
void partitions_rec(int k, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (k == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int a = std::min(k, maxpart); a >= 1; --a) {
    cur.push_back(a);
    partitions_rec(k - a, a, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> partitions_of(int k) {
  std::vector<Partition> out;
  if (k < 0) return out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::vector<Partition> lambda_set(int n) {
  std::vector<Partition> out;
  for (int k = n; k >= 0; k -= 2) {
    auto ps = partitions_of(k);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

int d_value(const Partition& p, int i, int j) {
  if (!p.contains(i, j)) throw std::out_of_range("box outside the Young diagram");
  if (i <= j) return p.row(i) + p.row(j) - i - j + 1;
  return -p.col(i) - p.col(j) + i + j - 1;
}

int hook_length(const Partition& p, int i, int j) {
  if (!p.contains(i, j)) throw std::out_of_range("box outside the Young diagram");
  return p.row(i) - j + p.col(j) - i + 1;
}

KingPolynomial king_polynomial(const Partition& p) {
  KingPolynomial k;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j) {
      k.roots.push_back(1 - d_value(p, i, j));
      k.denominator *= hook_length(p, i, j);
    }
  return k;
}

mpq_class KingPolynomial::eval(const mpq_class& u) const {
  mpq_class v = 1;
  for (int r : roots) v *= u - r;
  v /= mpq_class(denominator);
  v.canonicalize();
  return v;
}

double KingPolynomial::eval(double u) const {
  double v = 1.0;
  for (int r : roots) v *= u - r;
  return v / denominator.get_d();
}

int king_root_multiplicity(const Partition& p, int delta) {
  int c = 0;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.row(i); ++j)
      if (d_value(p, i, j) == 1 - delta) ++c;
  return c;
}

}  // namespace brauer
