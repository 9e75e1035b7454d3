#include "brauer/leduc_ram.hpp"

#include <cmath>
#include <deque>
#include <limits>

namespace brauer {

namespace {

RationalFunction king_function(const Partition& p) {
  auto k = king_polynomial(p);
  Poly num(1);
  for (int r : k.roots) num = num * Poly::linear(1, -r);
  return RationalFunction(num * Poly(mpq_class(1, 1) / mpq_class(k.denominator)));
}

void add_roots(Radicand& r, const Partition& p, int power) {
  for (int root : king_polynomial(p).roots) r.roots[mpq_class(root)] += power;
}

void drop_zero_exponents(Radicand& r) {
  for (auto it = r.roots.begin(); it != r.roots.end();)
    it = it->second == 0 ? r.roots.erase(it) : std::next(it);
}

// sqrt((D^2 - 1) / D^2) for the off-diagonal entry when s(m-1) != s(m+1).
std::optional<LREntry> first_branch_radical(const DiamondValue& d) {
  Radicand r;
  if (d.u_coeff == 0) {
    mpq_class c = d.constant;
    r.constant = (c * c - 1) / (c * c);
    if (r.constant == 0) return std::nullopt;
    if (r.constant < 0) throw std::logic_error("diamond constant below one in absolute value");
  } else {
    // D = s (u - rho) with s = +-1
    mpq_class rho = -d.u_coeff * d.constant;
    r.roots[rho + 1] += 1;
    r.roots[rho - 1] += 1;
    r.roots[rho] -= 2;
  }
  return LREntry{RationalFunction(1), r};
}

Radicand second_branch_radicand(const Partition& s, const Partition& t, const Partition& x) {
  Radicand r;
  auto ks = king_polynomial(s), kt = king_polynomial(t), kx = king_polynomial(x);
  r.constant = mpq_class(kx.denominator * kx.denominator) / mpq_class(ks.denominator * kt.denominator);
  r.constant.canonicalize();
  add_roots(r, s, 1);
  add_roots(r, t, 1);
  add_roots(r, x, -2);
  drop_zero_exponents(r);
  return r;
}

mpq_class power(const mpq_class& b, int k) {
  mpq_class v = 1;
  for (int i = 0; i < std::abs(k); ++i) v *= b;
  return k < 0 ? mpq_class(1 / v) : v;
}

}  // namespace

RationalFunction Radicand::as_function() const {
  RationalFunction f{Poly(constant)};
  for (auto& [r, k] : roots) {
    RationalFunction lin{Poly::linear(1, -r)};
    for (int i = 0; i < std::abs(k); ++i) f = k > 0 ? f * lin : f / lin;
  }
  return f;
}

Radicand Radicand::operator*(const Radicand& o) const {
  Radicand r = *this;
  r.constant *= o.constant;
  for (auto& [root, k] : o.roots) r.roots[root] += k;
  drop_zero_exponents(r);
  return r;
}

RationalFunction LREntry::square() const {
  auto c2 = coeff * coeff;
  return radicand ? c2 * radicand->as_function() : c2;
}

DiamondValue diamond(const Walk& S, const Walk& T, int m) {
  if (m < 1 || m + 1 >= static_cast<int>(S.size()) || S.size() != T.size())
    throw std::invalid_argument("diamond position out of range");
  for (std::size_t q = 0; q < S.size(); ++q)
    if (static_cast<int>(q) != m && S[q] != T[q]) throw std::invalid_argument("walks differ away from position m");
  auto first = step_between(S[m - 1], T[m]);
  auto second = step_between(S[m], S[m + 1]);
  const Partition& t = T[m];
  const Partition& s1 = S[m + 1];
  int k = second.row, l = first.row;
  if (first.sign == second.sign) return {0, second.sign * (s1.row(k) - k - t.row(l) + l)};
  return {second.sign, second.sign * (t.row(l) - l + s1.row(k) - k)};
}

GeometricDiamond geometric_diamond(const Walk& S, const Walk& T, int m, int delta) {
  diamond(S, T, m);  // validates the pair
  auto x = embed(S[m - 1], delta);
  auto xi = [&](int c) {
    mpq_class v(x.entry2(c), 2);
    v.canonicalize();
    return v;
  };
  auto a = step_between(S[m - 1], S[m]);
  auto b = step_between(S[m], S[m + 1]);
  if (S[m - 1] == S[m + 1]) {
    auto t = step_between(S[m - 1], T[m]);
    return {"3", a.sign * xi(a.column) + t.sign * xi(t.column) + 1};
  }
  if (a.sign == b.sign) {
    if (S != T) return {"1", 0};
    if (a.column == b.column) return {"1", -1};
    return {"1", a.sign * (xi(a.column) - xi(b.column))};
  }
  if (S != T) return {"2", 0};
  return {"2", a.sign * (xi(a.column) + xi(b.column))};
}

GenericMatrices generic_matrices(const Partition& lambda, int n) {
  return generic_matrices(lambda, n, enumerate_walks(lambda, n));
}

GenericMatrices generic_matrices(const Partition& lambda, int n, std::vector<Walk> basis) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  GenericMatrices g{lambda, n, std::move(basis), {}, {}};
  int N = static_cast<int>(g.basis.size());
  for (int m = 1; m < n; ++m) {
    EntryMap sig, e;
    for (int j = 0; j < N; ++j) {
      const Walk& T = g.basis[j];
      for (int i = 0; i < N; ++i) {
        const Walk& S = g.basis[i];
        bool pair = true;
        for (int q = 0; q <= n && pair; ++q)
          if (q != m && S[q] != T[q]) pair = false;
        if (!pair) continue;
        if (S[m - 1] != S[m + 1]) {
          auto dss = diamond(S, S, m);
          if (i == j) {
            sig[{i, j}] = {RationalFunction(1) / dss.as_function(), std::nullopt};
          } else if (auto r = first_branch_radical(dss)) {
            sig[{i, j}] = *r;
          }
          continue;
        }
        const Partition& x = S[m - 1];
        auto ratio = king_function(S[m]) / king_function(x);
        if (i == j) {
          auto dss = diamond(S, S, m).as_function();
          sig[{i, j}] = {(RationalFunction(1) - ratio) / dss, std::nullopt};
          e[{i, j}] = {ratio, std::nullopt};
        } else {
          auto rad = second_branch_radicand(S[m], T[m], x);
          e[{i, j}] = {RationalFunction(1), rad};
          sig[{i, j}] = {-(RationalFunction(1) / diamond(S, T, m).as_function()), rad};
        }
      }
    }
    g.sigma.push_back(std::move(sig));
    g.e.push_back(std::move(e));
  }
  return g;
}

EntryValue evaluate_entry(const LREntry& x, const mpq_class& u0, Branch branch) {
  if (x.coeff.is_zero()) return {};
  auto [a, lead] = x.coeff.expand_at(u0);
  if (!x.radicand) {
    if (a < 0) throw PoleError("pole at u = " + u0.get_str());
    return {a > 0 ? 0.0 : lead.get_d(), 0};
  }
  int b = 0, negatives = 0;
  mpq_class rest = x.radicand->constant;
  for (auto& [r, k] : x.radicand->roots) {
    if (r == u0) {
      b = k;
      continue;
    }
    mpq_class d = u0 - r;
    if (d < 0) negatives += k;
    rest *= power(abs(d), k);
  }
  int order = 2 * a + b;
  if (order > 0) return {};
  if (order < 0) throw PoleError("pole at u = " + u0.get_str());
  double mag = lead.get_d() * std::sqrt(rest.get_d());
  if (branch == Branch::Unitary) {
    if (negatives % 2 != 0) throw NegativeRadicandError("negative value under a radical at u = " + u0.get_str());
    return {mag, 0};
  }
  return {mag, ((negatives % 4) + 4) % 4};
}

NumericMatrices evaluate_at(const GenericMatrices& g, const mpq_class& u0, Branch branch) {
  int N = static_cast<int>(g.basis.size());
  struct Cell {
    int i, j;
    EntryValue v;
  };
  auto eval_all = [&](const std::vector<EntryMap>& mats) {
    std::vector<std::vector<Cell>> out;
    for (auto& mm : mats) {
      std::vector<Cell> cells;
      for (auto& [ij, x] : mm) {
        auto v = evaluate_entry(x, u0, branch);
        if (v.magnitude != 0) cells.push_back({ij.first, ij.second, v});
      }
      out.push_back(std::move(cells));
    }
    return out;
  };
  auto sig = eval_all(g.sigma), e = eval_all(g.e);

  // Pick i-power rescalings so that every entry becomes real.
  std::vector<std::vector<std::pair<int, int>>> adj(N);
  for (auto* group : {&sig, &e})
    for (auto& cells : *group)
      for (auto& c : cells)
        if (c.i != c.j) {
          adj[c.i].push_back({c.j, c.v.phase & 1});
          adj[c.j].push_back({c.i, c.v.phase & 1});
        }
  std::vector<int> par(N, -1);
  for (int s = 0; s < N; ++s) {
    if (par[s] >= 0) continue;
    par[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (auto [b, bit] : adj[a]) {
        int want = par[a] ^ bit;
        if (par[b] < 0) {
          par[b] = want;
          q.push_back(b);
        } else if (par[b] != want) {
          throw GaugeError("no diagonal i-power gauge makes the matrices real");
        }
      }
    }
  }
  auto realise = [&](const std::vector<std::vector<Cell>>& group) {
    std::vector<Eigen::MatrixXd> out;
    for (auto& cells : group) {
      Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
      for (auto& c : cells) {
        int phase = ((c.v.phase + par[c.j] - par[c.i]) % 4 + 4) % 4;
        if (phase % 2 != 0) throw GaugeError("entry stays imaginary after gauging");
        M(c.i, c.j) = phase == 0 ? c.v.magnitude : -c.v.magnitude;
      }
      out.push_back(std::move(M));
    }
    return out;
  };
  return {g.basis, realise(sig), realise(e), par};
}

NumericMatrices simple_matrices(const Partition& lambda, int n, int delta) {
  auto basis = enumerate_walks(lambda, n, delta);
  if (n == 0) return {basis, {}, {}, std::vector<int>(basis.size(), 0)};
  return evaluate_at(generic_matrices(lambda, n, std::move(basis)), mpq_class(delta), Branch::Continued);
}

double decoupling_residual(const GenericMatrices& g, int delta) {
  std::vector<bool> restricted;
  for (auto& w : g.basis) {
    bool ok = true;
    for (auto& p : w) ok = ok && in_A_delta(p, delta);
    restricted.push_back(ok);
  }
  double worst = 0;
  for (auto* group : {&g.sigma, &g.e})
    for (auto& mm : *group)
      for (auto& [ij, x] : mm) {
        if (restricted[ij.first] == restricted[ij.second]) continue;
        try {
          worst = std::max(worst, std::abs(evaluate_entry(x, mpq_class(delta), Branch::Continued).magnitude));
        } catch (const PoleError&) {
          return std::numeric_limits<double>::infinity();
        }
      }
  return worst;
}

double RelationReport::max() const {
  double m = 0;
  for (auto& [name, v] : residuals) m = std::max(m, v);
  return m;
}

RelationReport check_relations(const NumericMatrices& mats, double delta, double tol) {
  std::vector<std::pair<std::string, double>> res{{"ss", 0}, {"ee", 0}, {"es", 0}, {"se", 0},
                                                  {"braid", 0}, {"ese", 0}, {"eee", 0}, {"comm", 0}};
  auto bump = [&](int slot, const Eigen::MatrixXd& r) {
    if (r.size() == 0) return;
    res[slot].second = std::max(res[slot].second, r.cwiseAbs().maxCoeff());
  };
  int k = static_cast<int>(mats.sigma.size());
  int N = static_cast<int>(mats.basis.size());
  Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N, N);
  for (int i = 0; i < k; ++i) {
    auto& s = mats.sigma[i];
    auto& E = mats.e[i];
    bump(0, s * s - I);
    bump(1, E * E - delta * E);
    bump(2, E * s - E);
    bump(3, s * E - E);
    for (int j = 0; j < k; ++j) {
      auto& s2 = mats.sigma[j];
      auto& E2 = mats.e[j];
      if (std::abs(i - j) == 1) {
        bump(4, s * s2 * s - s2 * s * s2);
        bump(5, E * s2 * E - E);
        bump(6, E * E2 * E - E);
      } else if (std::abs(i - j) >= 2) {
        bump(7, s * s2 - s2 * s);
        bump(7, s * E2 - E2 * s);
        bump(7, E * E2 - E2 * E);
      }
    }
  }
  return {res, tol};
}

}  // namespace brauer
