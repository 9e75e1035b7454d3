#include "brauer/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "brauer/cap.hpp"
#include "brauer/geometry.hpp"
#include "brauer/leduc_ram.hpp"
#include "brauer/oracle.hpp"
#include "brauer/partition.hpp"
#include "brauer/restriction.hpp"
#include "brauer/weight.hpp"

namespace brauer {

namespace {

// Collects a failure count and the first few failure messages.
struct Tally {
  long checked = 0, failed = 0;
  std::vector<std::string> first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (first.size() < 3) first.push_back(what());
  }
  std::string detail() const {
    std::string s = std::to_string(checked) + " cases";
    if (failed) {
      s += ", " + std::to_string(failed) + " failed";
      for (auto& f : first) s += "; " + f;
    }
    return s;
  }
};

CheckResult run(int id, std::string name, const std::function<void(Tally&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r{id, std::move(name), false, "", 0};
  Tally t;
  try {
    body(t);
    r.pass = t.failed == 0;
    r.detail = t.detail();
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = t.detail() + "; exception: " + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

std::string dstr(int d) { return "delta=" + std::to_string(d); }

int cached_gram_rank(const Partition& p, int n, int delta) {
  static std::map<std::tuple<Partition, int, int>, int> cache;
  auto key = std::make_tuple(p, n, delta);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int r = gram_rank(p, n, mpq_class(delta));
  cache.emplace(key, r);
  return r;
}

long double_factorial(int k) {
  long v = 1;
  for (int t = 2 * k - 1; t > 1; t -= 2) v *= t;
  return v;
}

}  // namespace

CheckResult check_round_trip(int max_size, const std::vector<int>& deltas) {
  return run(1, "weight diagram round trip", [&](Tally& t) {
    auto all = partitions_up_to(max_size);
    all.push_back(Partition{10, 10, 9, 9, 8, 5, 3, 3});
    for (int d : deltas)
      for (auto& p : all) {
        auto x = weight_diagram(p, d);
        t.expect(reading_columns(x) == p && reading_rows(x) == p && partition_from_weight(x) == p,
                 [&] { return p.str() + " " + dstr(d); });
      }
  });
}

CheckResult check_key_lemma(int max_size, const std::vector<int>& deltas) {
  return run(2, "#o - #x = m", [&](Tally& t) {
    for (int d : deltas)
      for (auto& p : partitions_up_to(max_size)) {
        auto x = weight_diagram(p, d);
        t.expect(x.count(Label::Circ) - x.count(Label::Times) == x.m(), [&] { return p.str() + " " + dstr(d); });
      }
  });
}

CheckResult check_king_multiplicity(int max_size, const std::vector<int>& deltas) {
  return run(3, "King root multiplicity", [&](Tally& t) {
    for (int d : deltas) {
      int base = degree(Partition(), d);
      for (auto& p : partitions_up_to(max_size)) {
        int mult = king_root_multiplicity(p, d);
        t.expect(mult == degree(p, d) - base, [&] { return "degree " + p.str() + " " + dstr(d); });
        int inside = 0;
        bool agree = true;
        for (auto* pairs : {&times_pairs, &circ_pairs})
          for (auto& w : (*pairs)(p, d)) {
            inside += w.in_diagram;
            agree = agree && w.in_diagram == w.condition;
          }
        t.expect(inside == mult, [&] { return "witness count " + p.str() + " " + dstr(d); });
        t.expect(agree, [&] { return "witness condition " + p.str() + " " + dstr(d); });
      }
    }
  });
}

CheckResult check_A_delta(int max_size, const std::vector<int>& deltas) {
  return run(4, "A_delta closed form vs BFS", [&](Tally& t) {
    for (int d : deltas) {
      auto reach = A_delta_bfs(d, max_size);
      for (auto& p : partitions_up_to(max_size))
        t.expect(in_A_delta(p, d) == (reach.count(p) > 0), [&] { return p.str() + " " + dstr(d); });
    }
  });
}

CheckResult check_dimensions(int max_n) {
  return run(5, "walk count = cell basis dimension", [&](Tally& t) {
    for (int n = 0; n <= max_n; ++n)
      for (auto& p : lambda_set(n)) {
        auto walks = count_walks(p, n);
        t.expect(walks == static_cast<std::uint64_t>(cell_dimension(p, n)),
                 [&] { return p.str() + " n=" + std::to_string(n); });
      }
    for (int k = 0; k <= std::max(5, max_n / 2); ++k)
      t.expect(count_walks(Partition(), 2 * k) == static_cast<std::uint64_t>(double_factorial(k)),
               [&] { return "(2k-1)!! at k=" + std::to_string(k); });
  });
}

CheckResult check_decomposition(int max_n, const std::vector<int>& deltas) {
  return run(6, "dim Delta = sum D * dim L", [&](Tally& t) {
    for (int d : deltas) {
      if (d == 0) continue;
      for (int n = 0; n <= max_n; ++n) {
        auto lam = lambda_set(n);
        for (auto& mu : lam) {
          long sum = 0;
          for (auto& l : lam)
            if (decomposition_number(l, mu, d)) sum += cached_gram_rank(l, n, d);
          t.expect(sum == static_cast<long>(count_walks(mu, n)),
                   [&] { return mu.str() + " n=" + std::to_string(n) + " " + dstr(d); });
        }
      }
    }
  });
}

CheckResult check_restriction(int max_n, const std::vector<int>& deltas) {
  return run(7, "restriction of simples", [&](Tally& t) {
    for (int d : deltas) {
      if (d == 0) continue;
      for (int n = 1; n <= max_n; ++n) {
        CenterOracle center(n - 1, mpq_class(d));
        const auto& chars = center.characters();
        for (auto& p : lambda_set(n)) {
          auto where = [&] { return p.str() + " n=" + std::to_string(n) + " " + dstr(d); };
          auto predicted = restrict_simple(p, n, d);
          std::map<mpq_class, int> want;
          for (auto& [key, s] : predicted) {
            for (auto& f : s.factors()) want[chars.at(key)] += cached_gram_rank(f.partition, n - 1, d);
            if (s.socle.empty()) continue;
            t.expect(s.head == s.socle && s.head.size() == 1, [&] { return "head/socle " + where(); });
            bool plus = false;
            for (auto& pm : lambda_pm_all(p, d)) plus = plus || (!s.head.empty() && s.head[0].partition == pm.plus);
            t.expect(plus, [&] { return "head is not lambda+ " + where(); });
          }
          std::erase_if(want, [](auto& kv) { return kv.second == 0; });
          auto got = oracle_restriction_dims(p, n, mpq_class(d), center);
          t.expect(got.by_character == want, [&] { return "dims " + where(); });
        }
      }
    }
  });
}

CheckResult check_generic_relations(int max_n, int samples, unsigned seed) {
  return run(8, "generic relations", [&](Tally& t) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> den(2, 9), sgn(0, 1);
    for (int n = 1; n <= max_n; ++n) {
      std::vector<mpq_class> us;
      while (static_cast<int>(us.size()) < samples) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(17 * q, 97 * q);
        mpq_class u(num(rng) * (sgn(rng) ? -1 : 1), q);
        u.canonicalize();
        if (u.get_den() != 1) us.push_back(u);
      }
      for (auto& p : lambda_set(n)) {
        auto g = generic_matrices(p, n);
        for (auto& u : us) {
          auto r = check_relations(evaluate_at(g, u, Branch::Continued), u.get_d(), 1e-9);
          t.expect(r.pass(), [&] {
            return p.str() + " n=" + std::to_string(n) + " u=" + u.get_str() + " residual " + std::to_string(r.max());
          });
        }
      }
    }
  });
}

CheckResult check_specialization(int max_n, const std::vector<int>& deltas) {
  return run(9, "specialization and decoupling", [&](Tally& t) {
    for (int d : deltas) {
      if (d == 0) continue;
      for (int n = 1; n <= max_n; ++n)
        for (auto& p : lambda_set(n)) {
          if (!in_A_delta(p, d)) continue;
          auto where = [&] { return p.str() + " n=" + std::to_string(n) + " " + dstr(d); };
          double dec = decoupling_residual(generic_matrices(p, n), d);
          t.expect(dec <= 1e-9, [&] { return "decoupling " + where(); });
          auto m = simple_matrices(p, n, d);
          auto r = check_relations(m, d, 1e-9);
          t.expect(r.pass(), [&] { return "relations " + where() + " residual " + std::to_string(r.max()); });
          t.expect(static_cast<int>(m.basis.size()) == cached_gram_rank(p, n, d), [&] { return "dimension " + where(); });
        }
    }
  });
}

CheckResult check_diamonds(int max_size, const std::vector<int>& deltas) {
  return run(10, "combinatorial = geometric diamond", [&](Tally& t) {
    std::map<std::string, long> per_case;
    for (int d : deltas)
      for (auto& p0 : partitions_up_to(max_size + 1))
        for (auto& p1 : moves(p0)) {
          if (p1.size() > max_size) continue;
          for (auto& p2 : moves(p1))
            for (auto& q1 : moves(p0)) {
              if (q1.size() > max_size) continue;
              auto qm = moves(q1);
              if (std::find(qm.begin(), qm.end(), p2) == qm.end()) continue;
              Walk S{p0, p1, p2}, T{p0, q1, p2};
              auto geo = geometric_diamond(S, T, 1, d);
              auto comb = diamond(S, T, 1).at(mpq_class(d));
              ++per_case[geo.kind];
              t.expect(comb == geo.value, [&] {
                return "case " + geo.kind + " " + p0.str() + "->" + p1.str() + "/" + q1.str() + "->" + p2.str() + " " +
                       dstr(d);
              });
            }
        }
    for (std::string k : {"1", "2", "3"})
      t.expect(per_case[k] > 0, [&] { return "no instance of case " + k; });
  });
}

CheckResult check_oracle(int max_n_relations, int max_n_assoc, int random_n) {
  return run(11, "diagram algebra self-consistency", [&](Tally& t) {
    using D = BrauerDiagram;
    auto same = [](const std::pair<D, int>& a, const D& b, int loops) { return a.first == b && a.second == loops; };
    for (int n = 1; n <= max_n_relations; ++n) {
      auto id = D::identity(n);
      auto where = [&](const char* rel, int i) { return std::string(rel) + " n=" + std::to_string(n) + " i=" + std::to_string(i); };
      for (int i = 0; i + 1 < n; ++i) {
        auto s = D::sigma(i, n), e = D::e(i, n);
        t.expect(same(multiply(s, s), id, 0), [&] { return where("ss", i); });
        t.expect(same(multiply(e, e), e, 1), [&] { return where("ee", i); });
        t.expect(same(multiply(e, s), e, 0), [&] { return where("es", i); });
        t.expect(same(multiply(s, e), e, 0), [&] { return where("se", i); });
        for (int j = 0; j + 1 < n; ++j) {
          auto s2 = D::sigma(j, n), e2 = D::e(j, n);
          if (std::abs(i - j) == 1) {
            auto l = multiply(multiply(s, s2).first, s).first;
            auto r = multiply(multiply(s2, s).first, s2).first;
            t.expect(l == r, [&] { return where("braid", i); });
            auto [ese, l1] = multiply(multiply(e, s2).first, e);
            t.expect(ese == e && l1 == 0, [&] { return where("ese", i); });
            auto a = multiply(e, e2);
            auto b = multiply(a.first, e);
            t.expect(b.first == e && a.second + b.second == 0, [&] { return where("eee", i); });
          } else if (std::abs(i - j) >= 2) {
            for (auto& [x, y] : {std::pair{s, s2}, std::pair{s, e2}, std::pair{e, s2}, std::pair{e, e2}}) {
              auto xy = multiply(x, y), yx = multiply(y, x);
              t.expect(xy == yx, [&] { return where("comm", i); });
            }
          }
        }
      }
    }
    auto assoc = [&](const D& a, const D& b, const D& c) {
      auto ab = multiply(a, b), bc = multiply(b, c);
      auto l = multiply(ab.first, c), r = multiply(a, bc.first);
      t.expect(l.first == r.first && ab.second + l.second == bc.second + r.second, [] { return std::string("associativity"); });
    };
    for (int n = 0; n <= max_n_assoc; ++n) {
      auto all = all_diagrams(n);
      for (auto& a : all)
        for (auto& b : all)
          for (auto& c : all) assoc(a, b, c);
    }
    if (random_n > 0) {
      auto all = all_diagrams(random_n);
      std::mt19937 rng(3);
      std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
      for (int k = 0; k < 2000; ++k) assoc(all[pick(rng)], all[pick(rng)], all[pick(rng)]);
    }
  });
}

std::vector<CheckResult> run_acceptance() {
  auto range = [](int lo, int hi) {
    std::vector<int> v;
    for (int d = lo; d <= hi; ++d) v.push_back(d);
    return v;
  };
  std::vector<int> six{-3, -2, -1, 1, 2, 3, 4};
  std::vector<int> nine{-4, -3, -2, -1, 1, 2, 3, 4};
  return {
      check_round_trip(10, range(-8, 8)),
      check_key_lemma(10, range(-8, 8)),
      check_king_multiplicity(8, range(-6, 6)),
      check_A_delta(8, range(-6, 6)),
      check_dimensions(8),
      check_decomposition(5, six),
      check_restriction(5, six),
      check_generic_relations(5, 5),
      check_specialization(5, nine),
      check_diamonds(6, range(-6, 6)),
      check_oracle(5, 3, 4),
  };
}

std::vector<CheckResult> run_scoped(int n, int delta) {
  std::vector<int> d{delta};
  return {
      check_round_trip(n, d),
      check_key_lemma(n, d),
      check_king_multiplicity(n, d),
      check_A_delta(n, d),
      check_dimensions(n),
      check_decomposition(n, d),
      check_restriction(n, d),
      check_generic_relations(n, 2),
      check_specialization(n, d),
      check_diamonds(n, d),
      check_oracle(n, std::min(n, 3)),
  };
}

std::string format_result(const CheckResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  return "criterion " + std::to_string(r.id) + ": " + (r.pass ? "PASS" : "FAIL") + "  " + r.name + " (" + r.detail +
         ") [" + buf + "]";
}

}  // namespace brauer
