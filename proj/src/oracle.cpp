#include "brauer/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>

#include "brauer/geometry.hpp"

namespace brauer {

BrauerDiagram BrauerDiagram::identity(int n) {
  BrauerDiagram d{n, std::vector<int>(2 * n)};
  for (int i = 0; i < n; ++i) {
    d.partner[i] = n + i;
    d.partner[n + i] = i;
  }
  return d;
}

BrauerDiagram BrauerDiagram::sigma(int i, int n) {
  if (i < 0 || i + 1 >= n) throw std::out_of_range("generator index out of range");
  auto d = identity(n);
  d.partner[i] = n + i + 1;
  d.partner[n + i + 1] = i;
  d.partner[i + 1] = n + i;
  d.partner[n + i] = i + 1;
  return d;
}

BrauerDiagram BrauerDiagram::e(int i, int n) {
  if (i < 0 || i + 1 >= n) throw std::out_of_range("generator index out of range");
  auto d = identity(n);
  d.partner[i] = i + 1;
  d.partner[i + 1] = i;
  d.partner[n + i] = n + i + 1;
  d.partner[n + i + 1] = n + i;
  return d;
}

BrauerDiagram BrauerDiagram::embed() const {
  int m = n + 1;
  BrauerDiagram d{m, std::vector<int>(2 * m)};
  auto lift = [&](int x) { return x < n ? x : x - n + m; };
  for (int x = 0; x < 2 * n; ++x) d.partner[lift(x)] = lift(partner[x]);
  d.partner[n] = m + n;
  d.partner[m + n] = n;
  return d;
}

std::pair<BrauerDiagram, int> multiply(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.n != b.n) throw std::invalid_argument("diagrams of different rank");
  int n = a.n;
  // Nodes: top of a = 0..n-1, glued middle = n..2n-1, bottom of b = 2n..3n-1.
  std::vector<int> ea(3 * n, -1), eb(3 * n, -1);
  for (int x = 0; x < 2 * n; ++x) {
    ea[x] = a.partner[x];
    eb[n + x] = n + b.partner[x];
  }
  auto outer = [&](int v) { return v < n || v >= 2 * n; };
  std::vector<bool> seen(3 * n, false);
  BrauerDiagram r{n, std::vector<int>(2 * n)};
  for (int s = 0; s < 3 * n; ++s) {
    if (!outer(s) || seen[s]) continue;
    int cur = s;
    bool useA = s < n;
    seen[s] = true;
    while (true) {
      int nxt = useA ? ea[cur] : eb[cur];
      seen[nxt] = true;
      if (outer(nxt)) {
        int from = s < n ? s : s - n, to = nxt < n ? nxt : nxt - n;
        r.partner[from] = to;
        r.partner[to] = from;
        break;
      }
      cur = nxt;
      useA = !useA;
    }
  }
  int loops = 0;
  for (int s = n; s < 2 * n; ++s) {
    if (seen[s]) continue;
    ++loops;
    int cur = s;
    bool useA = true;
    do {
      seen[cur] = true;
      cur = useA ? ea[cur] : eb[cur];
      useA = !useA;
    } while (cur != s);
  }
  return {r, loops};
}

std::vector<BrauerDiagram> all_diagrams(int n) {
  std::vector<BrauerDiagram> out;
  std::vector<int> cur(2 * n, -1);
  std::function<void()> rec = [&]() {
    int x = -1;
    for (int i = 0; i < 2 * n; ++i)
      if (cur[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      out.push_back({n, cur});
      return;
    }
    for (int y = x + 1; y < 2 * n; ++y) {
      if (cur[y] >= 0) continue;
      cur[x] = y;
      cur[y] = x;
      rec();
      cur[x] = cur[y] = -1;
    }
  };
  rec();
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& p) {
  int n = p.size();
  std::vector<Tableau> out;
  Tableau T(p.length());
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(T);
      return;
    }
    for (int r = 0; r < p.length(); ++r) {
      int c = static_cast<int>(T[r].size());
      if (c < p.row(r + 1) && (r == 0 || static_cast<int>(T[r - 1].size()) > c)) {
        T[r].push_back(k);
        rec(k + 1);
        T[r].pop_back();
      }
    }
  };
  rec(1);
  return out;
}

namespace {

int inversions(const std::vector<int>& v) {
  int c = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] > v[b]) ++c;
  return c;
}

std::map<std::vector<int>, mpq_class> polytabloid(const Tableau& T, int n) {
  std::vector<std::vector<int>> cols;
  for (std::size_t c = 0; c < T[0].size(); ++c) {
    std::vector<int> col;
    for (auto& r : T)
      if (c < r.size()) col.push_back(r[c]);
    cols.push_back(col);
  }
  std::map<std::vector<int>, mpq_class> vec;
  std::vector<int> rowof(n);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int sign) {
    if (c == cols.size()) {
      vec[rowof] += sign;
      return;
    }
    std::vector<int> pr(cols[c].size());
    for (std::size_t i = 0; i < pr.size(); ++i) pr[i] = static_cast<int>(i);
    do {
      for (std::size_t r = 0; r < pr.size(); ++r) rowof[cols[c][pr[r]] - 1] = static_cast<int>(r);
      rec(c + 1, inversions(pr) % 2 ? -sign : sign);
    } while (std::next_permutation(pr.begin(), pr.end()));
  };
  rec(0, 1);
  std::erase_if(vec, [](auto& kv) { return kv.second == 0; });
  return vec;
}

}  // namespace

SpechtModule::SpechtModule(const Partition& p) : size_(p.size()) {
  if (p.empty()) {
    vecs_.push_back({{Tabloid{}, mpq_class(1)}});
    lead_[Tabloid{}] = 0;
    return;
  }
  for (auto& T : standard_tableaux(p)) {
    Tabloid t(size_);
    for (std::size_t r = 0; r < T.size(); ++r)
      for (int x : T[r]) t[x - 1] = static_cast<int>(r);
    lead_[t] = static_cast<int>(vecs_.size());
    vecs_.push_back(polytabloid(T, size_));
  }
}

std::vector<mpq_class> SpechtModule::coords(std::map<Tabloid, mpq_class> vec) const {
  std::vector<mpq_class> c(dim());
  // The standard polytabloid e_T has {T} as its largest tabloid when
  // tabloids are compared by the rows of n, n-1, ..., 1.
  auto score_less = [](const Tabloid& a, const Tabloid& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  };
  while (!vec.empty()) {
    auto best = vec.begin();
    for (auto it = vec.begin(); it != vec.end(); ++it)
      if (score_less(best->first, it->first)) best = it;
    auto lead = lead_.find(best->first);
    if (lead == lead_.end()) throw std::logic_error("straightening found no standard leading tabloid");
    mpq_class coef = best->second;
    c[lead->second] += coef;
    for (auto& [k, v] : vecs_[lead->second]) {
      mpq_class nv = vec[k] - coef * v;
      if (nv == 0) vec.erase(k);
      else vec[k] = nv;
    }
  }
  return c;
}

const QMatrix& SpechtModule::act_perm(const std::vector<int>& perm) {
  auto it = cache_.find(perm);
  if (it != cache_.end()) return it->second;
  QMatrix M(dim(), dim());
  for (int j = 0; j < dim(); ++j) {
    std::map<Tabloid, mpq_class> w;
    for (auto& [k, c] : vecs_[j]) {
      Tabloid nk(k.size());
      for (std::size_t e = 0; e < k.size(); ++e) nk[perm[e] - 1] = k[e];
      w[nk] += c;
    }
    std::erase_if(w, [](auto& kv) { return kv.second == 0; });
    auto col = coords(std::move(w));
    for (int i = 0; i < dim(); ++i) M(i, j) = col[i];
  }
  return cache_.emplace(perm, std::move(M)).first->second;
}

QMatrix SpechtModule::form() const {
  QMatrix G(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j)
      for (auto& [k, c] : vecs_[i]) {
        auto f = vecs_[j].find(k);
        if (f != vecs_[j].end()) G(i, j) += c * f->second;
      }
  return G;
}

std::vector<HalfDiagram> half_diagrams(int n, int arcs) {
  std::vector<HalfDiagram> out;
  HalfDiagram cur;
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> rem, int need) {
    if (rem.empty()) {
      if (need == 0) out.push_back(cur);
      return;
    }
    int x = rem[0];
    std::vector<int> rest(rem.begin() + 1, rem.end());
    cur.free.push_back(x);
    rec(rest, need);
    cur.free.pop_back();
    if (need == 0) return;
    for (int y : rest) {
      std::vector<int> left;
      for (int z : rest)
        if (z != y) left.push_back(z);
      cur.arcs.push_back({x, y});
      rec(left, need - 1);
      cur.arcs.pop_back();
    }
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  rec(all, arcs);
  return out;
}

namespace {
std::vector<int> partners(const HalfDiagram& h, int n) {
  std::vector<int> p(n, -1);
  for (auto [a, b] : h.arcs) {
    p[a] = b;
    p[b] = a;
  }
  return p;
}

std::map<int, int> free_positions(const HalfDiagram& h) {
  std::map<int, int> pos;
  for (std::size_t q = 0; q < h.free.size(); ++q) pos[h.free[q]] = static_cast<int>(q);
  return pos;
}

mpq_class qpow(const mpq_class& b, int k) {
  mpq_class v = 1;
  for (int i = 0; i < k; ++i) v *= b;
  return v;
}
}  // namespace

CellModule::CellModule(const Partition& lambda, int n, const mpq_class& delta)
    : lambda_(lambda), n_(n), r_(lambda.size()), delta_(delta), specht_(lambda) {
  if (n < r_ || (n - r_) % 2 != 0) throw std::invalid_argument(lambda.str() + " is not in Lambda_" + std::to_string(n));
  H_ = half_diagrams(n, (n - r_) / 2);
  for (std::size_t i = 0; i < H_.size(); ++i) index_[H_[i]] = static_cast<int>(i);
  dim_ = static_cast<int>(H_.size()) * specht_.dim();
}

QMatrix CellModule::act(const BrauerDiagram& D) {
  if (D.n != n_) throw std::invalid_argument("diagram rank does not match the module");
  int n = n_, sd = specht_.dim();
  QMatrix M(dim_, dim_);
  for (std::size_t hi = 0; hi < H_.size(); ++hi) {
    const auto& h = H_[hi];
    auto hp = partners(h, n);
    auto fpos = free_positions(h);
    std::vector<int> newp(n, -1);
    std::map<int, int> newfree;  // top point -> free label
    std::vector<bool> used(n, false);
    for (int t = 0; t < n; ++t) {
      int y = D.partner[t];
      if (y < n) {
        newp[t] = y;
        continue;
      }
      int mid = y - n;
      while (true) {
        used[mid] = true;
        if (hp[mid] < 0) {
          newfree[t] = fpos[mid];
          break;
        }
        int mid2 = hp[mid];
        used[mid2] = true;
        y = D.partner[n + mid2];
        if (y < n) {
          newp[t] = y;
          break;
        }
        mid = y - n;
      }
    }
    // Two free strands joined below kill the element.
    bool ok = true;
    for (int f : h.free)
      if (!used[f]) ok = false;
    if (!ok) continue;
    int loops = 0;
    for (int s = 0; s < n; ++s) {
      if (used[s]) continue;
      ++loops;
      int mid = s;
      while (true) {
        used[mid] = true;
        int m2 = hp[mid];
        used[m2] = true;
        mid = D.partner[n + m2] - n;
        if (mid == s) break;
      }
    }
    HalfDiagram h2;
    for (int t = 0; t < n; ++t)
      if (newp[t] > t) h2.arcs.push_back({t, newp[t]});
    std::sort(h2.arcs.begin(), h2.arcs.end());
    std::vector<int> perm(r_);
    int q = 0;
    for (auto& [t, label] : newfree) {
      h2.free.push_back(t);
      perm[label] = ++q;
    }
    QMatrix one = QMatrix::identity(1);
    const QMatrix& R = r_ > 0 ? specht_.act_perm(perm) : one;
    mpq_class sc = qpow(delta_, loops);
    int h2i = index_.at(h2);
    for (int a = 0; a < sd; ++a)
      for (int b = 0; b < sd; ++b)
        if (R(a, b) != 0) M(h2i * sd + a, static_cast<int>(hi) * sd + b) += sc * R(a, b);
  }
  return M;
}

QMatrix CellModule::gram() {
  int n = n_, sd = specht_.dim();
  QMatrix SF = specht_.form();
  QMatrix G(dim_, dim_);
  for (std::size_t i = 0; i < H_.size(); ++i) {
    const auto& h = H_[i];
    auto hp = partners(h, n);
    auto fpos_h = free_positions(h);
    for (std::size_t j = 0; j < H_.size(); ++j) {
      const auto& g = H_[j];
      auto gp = partners(g, n);
      auto fpos_g = free_positions(g);
      std::vector<bool> used(n, false);
      std::vector<int> perm(r_);
      bool ok = true;
      for (int f : g.free) {
        int mid = f;
        bool on_h = true;
        while (true) {
          used[mid] = true;
          if (on_h) {
            if (hp[mid] < 0) {
              perm[fpos_g[f]] = fpos_h[mid] + 1;
              break;
            }
            mid = hp[mid];
          } else {
            if (gp[mid] < 0) {
              ok = false;
              break;
            }
            mid = gp[mid];
          }
          on_h = !on_h;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      int loops = 0;
      for (int s = 0; s < n; ++s) {
        if (used[s]) continue;
        ++loops;
        int mid = s;
        while (true) {
          used[mid] = true;
          int m2 = hp[mid];
          used[m2] = true;
          mid = gp[m2];
          if (mid == s) break;
        }
      }
      QMatrix one = QMatrix::identity(1);
      QMatrix B = SF * (r_ > 0 ? specht_.act_perm(perm) : one);
      mpq_class sc = qpow(delta_, loops);
      for (int a = 0; a < sd; ++a)
        for (int b = 0; b < sd; ++b) G(static_cast<int>(i) * sd + a, static_cast<int>(j) * sd + b) = sc * B(a, b);
    }
  }
  return G;
}

int cell_dimension(const Partition& lambda, int n) {
  int r = lambda.size();
  if (n < r || (n - r) % 2 != 0) throw std::invalid_argument(lambda.str() + " is not in Lambda_" + std::to_string(n));
  std::size_t tableaux = lambda.empty() ? 1 : standard_tableaux(lambda).size();
  return static_cast<int>(half_diagrams(n, (n - r) / 2).size() * tableaux);
}

int gram_rank(const Partition& lambda, int n, const mpq_class& delta) {
  CellModule c(lambda, n, delta);
  return rank(c.gram());
}

CenterOracle::CenterOracle(int m, const mpq_class& delta, unsigned seed) : diagrams_(all_diagrams(m)) {
  int N = static_cast<int>(diagrams_.size());
  std::map<BrauerDiagram, int> idx;
  for (int i = 0; i < N; ++i) idx[diagrams_[i]] = i;
  std::vector<BrauerDiagram> gens;
  for (int i = 0; i + 1 < m; ++i) {
    gens.push_back(BrauerDiagram::sigma(i, m));
    gens.push_back(BrauerDiagram::e(i, m));
  }
  QMatrix rows(static_cast<int>(gens.size()) * N, N);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int j = 0; j < N; ++j) {
      auto [a, l1] = multiply(diagrams_[j], gens[g]);
      auto [b, l2] = multiply(gens[g], diagrams_[j]);
      rows(static_cast<int>(g) * N + idx[a], j) += qpow(delta, l1);
      rows(static_cast<int>(g) * N + idx[b], j) -= qpow(delta, l2);
    }
  auto basis = nullspace(rows);
  center_dim_ = static_cast<int>(basis.size());
  // Scalar of every basis element on every cell module, then a random
  // combination that keeps distinct central characters apart.
  std::map<Partition, std::vector<mpq_class>> full;
  for (auto& mu : lambda_set(m)) {
    CellModule C(mu, m, delta);
    for (auto& v : basis) {
      QMatrix Z(C.dim(), C.dim());
      for (int i = 0; i < N; ++i)
        if (v[i] != 0) Z = Z + C.act(diagrams_[i]).scaled(v[i]);
      mpq_class c;
      if (!Z.is_scalar(&c)) throw std::logic_error("central element is not scalar on a cell module");
      full[mu].push_back(c);
    }
  }
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int attempt = 0;; ++attempt) {
    if (attempt == 100) throw std::logic_error("no separating central element found");
    std::vector<int> cs;
    for (std::size_t k = 0; k < basis.size(); ++k) cs.push_back(coeff(rng));
    chars_.clear();
    std::map<mpq_class, std::vector<mpq_class>> seen;
    bool separates = true;
    for (auto& [mu, vals] : full) {
      mpq_class c = 0;
      for (std::size_t k = 0; k < vals.size(); ++k) c += cs[k] * vals[k];
      auto [it, fresh] = seen.emplace(c, vals);
      separates = separates && (fresh || it->second == vals);
      chars_[mu] = c;
    }
    if (!separates) continue;
    z_.assign(N, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (int i = 0; i < N; ++i) z_[i] += cs[k] * basis[k][i];
    break;
  }
}

RestrictionDims oracle_restriction_dims(const Partition& lambda, int n, const mpq_class& delta,
                                        const CenterOracle& center) {
  if (n < 1) throw std::invalid_argument("restriction needs n >= 1");
  CellModule C(lambda, n, delta);
  QMatrix Z(C.dim(), C.dim());
  const auto& D = center.diagrams();
  const auto& z = center.element();
  if (!D.empty() && D.front().n != n - 1) throw std::invalid_argument("center oracle has the wrong rank");
  for (std::size_t i = 0; i < D.size(); ++i)
    if (z[i] != 0) Z = Z + C.act(D[i].embed()).scaled(z[i]);
  auto rad = nullspace(C.gram());
  std::optional<QMatrix> onrad;
  if (!rad.empty()) {
    QMatrix R = from_columns(rad, C.dim());
    onrad = solve(R, Z * R);
  }
  RestrictionDims out;
  out.characters = center.characters();
  std::set<mpq_class> values;
  for (auto& [mu, c] : out.characters) values.insert(c);
  for (auto& c : values) {
    int d = generalised_eigenspace_dim(Z, c) - (onrad ? generalised_eigenspace_dim(*onrad, c) : 0);
    if (d != 0) out.by_character[c] = d;
  }
  return out;
}

}  // namespace brauer
