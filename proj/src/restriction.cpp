#include "brauer/restriction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "brauer/geometry.hpp"

namespace brauer {

std::string ModuleLabel::str() const {
  const char* k = kind == ModuleKind::Simple ? "L" : kind == ModuleKind::Standard ? "D" : "P";
  return std::string(k) + "_" + std::to_string(n) + "(" + partition.str() + ")";
}

std::vector<ModuleLabel> LoewyStructure::factors() const {
  auto out = head;
  out.insert(out.end(), middle.begin(), middle.end());
  out.insert(out.end(), socle.begin(), socle.end());
  return out;
}

bool in_lambda(const Partition& p, int n) { return p.size() <= n && (n - p.size()) % 2 == 0; }

static void require_lambda(const Partition& p, int n) {
  if (n < 0 || !in_lambda(p, n)) throw std::invalid_argument(p.str() + " is not in Lambda_" + std::to_string(n));
}

std::vector<ModuleLabel> restrict_standard(const Partition& p, int n, int delta) {
  require_lambda(p, n);
  std::vector<ModuleLabel> out;
  if (n == 0) return out;
  for (auto& q : moves(p))
    if (in_lambda(q, n - 1)) out.push_back({ModuleKind::Standard, q, n - 1, delta});
  return out;
}

std::vector<ModuleLabel> induce_standard(const Partition& p, int n, int delta) {
  require_lambda(p, n);
  std::vector<ModuleLabel> out;
  for (auto& q : moves(p)) out.push_back({ModuleKind::Standard, q, n + 1, delta});
  return out;
}

std::vector<LambdaPM> lambda_pm_all(const Partition& lp, int delta) {
  auto x = weight_diagram(lp, delta);
  std::vector<LambdaPM> out;
  for (int i = 1; i <= x.prefix(); ++i) {
    Label a = x.at(i - 1), b = x.at(i);
    bool hit = (a == Label::Circ && b == Label::Times) || (a == Label::Times && b == Label::Circ);
    if (!hit) continue;
    auto plus = partition_from_weight(x.with(i - 1, Label::Down).with(i, Label::Up));
    auto minus = partition_from_weight(x.with(i - 1, Label::Up).with(i, Label::Down));
    out.push_back({plus, minus, i});
  }
  return out;
}

LambdaPM lambda_pm(const Partition& lp, int delta) {
  auto all = lambda_pm_all(lp, delta);
  if (all.empty()) throw std::invalid_argument(lp.str() + " has no adjacent o x / x o pair");
  return all.front();
}

namespace {

std::vector<ISetEntry> I_set_at(const WeightDiagram& x, int i) {
  auto c = cap_diagram(x);
  Chamber ci = chamber_of(c, i);
  std::set<int> rays(c.rays.begin(), c.rays.end());
  std::vector<ISetEntry> out;
  for (int j = 0; j < x.prefix() + 2; ++j) {
    if (j == i || j == i - 1) continue;
    if (!belongs_to_chamber(c, j, ci)) continue;
    Label l = x.at(j);
    if (j > i && l == Label::Down) {
      out.push_back({j, 10});
    } else if (j < i && l == Label::Up) {
      out.push_back({j, 11});
    } else if (j < i && l == Label::Down) {
      auto p = c.partner(j);
      if (rays.count(j) || (p && *p > i)) out.push_back({j, 12});
    }
  }
  return out;
}

}  // namespace

std::vector<ISetEntry> I_set(const Partition& lp, const Partition& lplus, int delta) {
  for (auto& pm : lambda_pm_all(lp, delta))
    if (pm.plus == lplus) return I_set_at(weight_diagram(lp, delta), pm.vertex);
  throw std::invalid_argument(lplus.str() + " is not a lambda+ of " + lp.str());
}

Partition lambda_prime_j(const Partition& lp, int i, const ISetEntry& j, int delta) {
  auto x = weight_diagram(lp, delta);
  switch (j.rule) {
    case 10: x = x.with(j.vertex, Label::Up).with(i - 1, Label::Down).with(i, Label::Down); break;
    case 11: x = x.with(j.vertex, Label::Down).with(i - 1, Label::Up).with(i, Label::Up); break;
    case 12: x = x.with(j.vertex, Label::Up).with(i - 1, Label::Up).with(i, Label::Up); break;
    default: throw std::invalid_argument("unknown relabelling rule");
  }
  return partition_from_weight(x);
}

Partition block_key(const Partition& p, int m, int delta) {
  auto all = lambda_set(m);
  std::sort(all.begin(), all.end(), size_lex_less);
  for (auto& q : all)
    if (same_block(q, p, delta)) return q;
  return p;
}

std::map<Partition, LoewyStructure> restrict_simple(const Partition& p, int n, int delta) {
  if (delta == 0) throw std::invalid_argument("restriction of simple modules needs delta != 0");
  require_lambda(p, n);
  std::map<Partition, LoewyStructure> out;
  if (n == 0) return out;
  auto simple = [&](const Partition& q) { return ModuleLabel{ModuleKind::Simple, q, n - 1, delta}; };
  auto add = [&](LoewyStructure s, const Partition& anchor) {
    auto& slot = out[block_key(anchor, n - 1, delta)];
    slot.head.insert(slot.head.end(), s.head.begin(), s.head.end());
    slot.middle.insert(slot.middle.end(), s.middle.begin(), s.middle.end());
    slot.socle.insert(slot.socle.end(), s.socle.begin(), s.socle.end());
  };
  int dl = degree(p, delta);
  std::set<int> seen_iii;
  for (auto& mu : moves(p)) {
    if (!in_lambda(mu, n - 1)) continue;
    int dm = degree(mu, delta);
    if (dm == dl) {
      add({{simple(mu)}, {}, {}}, mu);
    } else if (dm == dl + 1) {
      // mu plays lambda', p is lambda+ or lambda-
      std::optional<bool> plus;
      for (auto& pm : lambda_pm_all(mu, delta)) {
        if (pm.plus == p) plus = true;
        else if (pm.minus == p) plus = false;
      }
      if (!plus) throw std::logic_error("degree rises but no lambda+- matches");
      if (*plus) add({{simple(mu)}, {}, {}}, mu);
    } else if (dm == dl - 1) {
      std::optional<LambdaPM> hit;
      for (auto& pm : lambda_pm_all(p, delta))
        if (pm.plus == mu || pm.minus == mu) hit = pm;
      if (!hit) throw std::logic_error("degree drops but no lambda+- matches");
      if (!seen_iii.insert(hit->vertex).second) continue;
      if (p.size() == n) {
        add({{simple(hit->minus)}, {}, {}}, hit->minus);
        continue;
      }
      LoewyStructure s;
      s.head = {simple(hit->plus)};
      s.socle = {simple(hit->plus)};
      s.middle = {simple(hit->minus)};
      auto x = weight_diagram(p, delta);
      for (auto& j : I_set_at(x, hit->vertex)) {
        auto q = lambda_prime_j(p, hit->vertex, j, delta);
        if (in_lambda(q, n - 1)) s.middle.push_back(simple(q));
      }
      add(s, hit->plus);
    } else {
      throw std::logic_error("degree changes by more than one under a box move");
    }
  }
  return out;
}

}  // namespace brauer
