#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "brauer/cap.hpp"
#include "brauer/geometry.hpp"
#include "brauer/leduc_ram.hpp"
#include "brauer/oracle.hpp"
#include "brauer/render.hpp"
#include "brauer/restriction.hpp"
#include "brauer/verify.hpp"
#include "brauer/weight.hpp"

using json = nlohmann::ordered_json;
using namespace brauer;

namespace {

struct Options {
  std::string partition = "-";
  int n = -1;
  std::optional<int> delta;
  std::string format;
  double tol = 1e-9;
  std::string u;
  bool simple = false;
  bool continued = false;
  int width = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int need_delta(const Options& o) {
  if (!o.delta) throw UsageError("--delta is required");
  return *o.delta;
}

int need_n(const Options& o) {
  if (o.n < 0) throw UsageError("-n is required");
  return o.n;
}

std::string fmt(const Options& o, const std::string& fallback) { return o.format.empty() ? fallback : o.format; }

std::string half(long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

std::string csv_field(const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; }

json poly_json(const Poly& p) {
  json a = json::array();
  for (auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

json entry_json(int i, int j, const LREntry& x) {
  json e{{"row", i}, {"col", j}, {"coeff", {{"num", poly_json(x.coeff.num())}, {"den", poly_json(x.coeff.den())}}}};
  if (x.radicand) {
    json roots = json::array();
    for (auto& [r, k] : x.radicand->roots) roots.push_back({{"root", r.get_str()}, {"power", k}});
    e["radicand"] = {{"constant", x.radicand->constant.get_str()}, {"roots", roots}};
  }
  return e;
}

json basis_json(const std::vector<Walk>& basis) {
  json b = json::array();
  for (auto& w : basis) {
    json steps = json::array();
    for (auto& p : w) steps.push_back(p.str());
    b.push_back(steps);
  }
  return b;
}

json dense_json(const Eigen::MatrixXd& M) {
  json rows = json::array();
  for (int i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < M.cols(); ++j) {
      std::ostringstream os;
      os << std::setprecision(17) << (M(i, j) == 0 ? 0.0 : M(i, j));
      r.push_back(os.str());
    }
    rows.push_back(r);
  }
  return rows;
}

json numeric_json(const NumericMatrices& m) {
  json out{{"basis", basis_json(m.basis)}, {"gauge", m.gauge}};
  json s = json::array(), e = json::array();
  for (auto& M : m.sigma) s.push_back(dense_json(M));
  for (auto& M : m.e) e.push_back(dense_json(M));
  out["sigma"] = s;
  out["e"] = e;
  return out;
}

json labels_json(const std::vector<ModuleLabel>& v) {
  json a = json::array();
  for (auto& l : v) a.push_back(l.str());
  return a;
}

int cmd_embed(const Options& o) {
  auto p = Partition::parse(o.partition);
  int d = need_delta(o);
  auto x = embed(p, d);
  int len = std::max<int>(x.tail_start + 2, o.width);
  std::vector<std::string> entries;
  for (int i = 1; i <= len; ++i) entries.push_back(half(x.entry2(i)));
  if (fmt(o, "json") == "text") {
    std::cout << "(";
    for (auto& e : entries) std::cout << e << ", ";
    std::cout << "...)\n";
  } else {
    json j{{"partition", p.str()}, {"delta", d}, {"entries", entries}, {"tail_start", x.tail_start},
           {"degree", degree(p, d)}, {"regular", is_delta_regular(p, d)}, {"restricted", in_A_delta(p, d)}};
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_weight(const Options& o) {
  auto p = Partition::parse(o.partition);
  auto x = weight_diagram(p, need_delta(o));
  auto f = fmt(o, "text");
  if (f == "json") {
    std::cout << json{{"partition", p.str()}, {"delta", x.delta()}, {"labels", x.str()}, {"m", x.m()}}.dump(2) << "\n";
  } else if (f == "svg") {
    std::cout << cap_svg(cap_diagram(x));
  } else {
    std::cout << weight_text(x, std::max(o.width, 6)) << "\n";
  }
  return 0;
}

int cmd_cap(const Options& o) {
  auto p = Partition::parse(o.partition);
  auto c = cap_diagram(p, need_delta(o));
  auto f = fmt(o, "text");
  if (f == "json") {
    json j{{"partition", p.str()}, {"delta", c.base.delta()}, {"labels", c.base.str()}};
    j["caps"] = c.caps;
    j["curls"] = c.curls;
    j["rays"] = c.rays;
    j["up_ray"] = c.up_ray ? json(*c.up_ray) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else if (f == "svg") {
    std::cout << cap_svg(c);
  } else {
    std::cout << cap_text(c);
  }
  return 0;
}

std::vector<std::vector<Partition>> blocks_of(int n, int d) {
  std::vector<std::vector<Partition>> blocks;
  auto all = lambda_set(n);
  std::sort(all.begin(), all.end(), size_lex_less);
  for (auto& p : all) {
    bool placed = false;
    for (auto& b : blocks)
      if (same_block(b.front(), p, d)) {
        b.push_back(p);
        placed = true;
        break;
      }
    if (!placed) blocks.push_back({p});
  }
  return blocks;
}

int cmd_blocks(const Options& o) {
  int n = need_n(o), d = need_delta(o);
  auto blocks = blocks_of(n, d);
  if (fmt(o, "json") == "text") {
    for (auto& b : blocks) {
      for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? "  " : "") << "(" << b[i].str() << ")";
      std::cout << "\n";
    }
  } else {
    json a = json::array();
    for (auto& b : blocks) {
      json m = json::array();
      for (auto& p : b) m.push_back(p.str());
      a.push_back({{"key", b.front().str()}, {"members", m}});
    }
    std::cout << json{{"n", n}, {"delta", d}, {"blocks", a}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_decomp(const Options& o) {
  int n = need_n(o), d = need_delta(o);
  auto p = Partition::parse(o.partition);
  if (!in_lambda(p, n)) throw UsageError(p.str() + " is not in Lambda_" + std::to_string(n));
  std::vector<Partition> block;
  for (auto& b : blocks_of(n, d))
    if (std::find(b.begin(), b.end(), p) != b.end()) block = b;
  auto f = fmt(o, "json");
  if (f == "csv" || f == "text") {
    std::string sep = f == "csv" ? "," : " ";
    std::cout << "lambda\\mu";
    for (auto& mu : block) std::cout << sep << (f == "csv" ? csv_field(mu.str()) : "(" + mu.str() + ")");
    std::cout << "\n";
    for (auto& l : block) {
      std::cout << (f == "csv" ? csv_field(l.str()) : "(" + l.str() + ")");
      for (auto& mu : block) std::cout << sep << decomposition_number(l, mu, d);
      std::cout << "\n";
    }
  } else {
    json names = json::array(), rows = json::array();
    for (auto& l : block) {
      names.push_back(l.str());
      json r = json::array();
      for (auto& mu : block) r.push_back(decomposition_number(l, mu, d));
      rows.push_back(r);
    }
    std::cout << json{{"n", n}, {"delta", d}, {"block", names}, {"D", rows}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_restrict(const Options& o) {
  int n = need_n(o), d = need_delta(o);
  auto p = Partition::parse(o.partition);
  auto res = restrict_simple(p, n, d);
  json comps = json::array();
  for (auto& [key, s] : res)
    comps.push_back({{"block", key.str()},
                     {"head", labels_json(s.head)},
                     {"middle", labels_json(s.middle)},
                     {"socle", labels_json(s.socle)}});
  if (fmt(o, "json") == "text") {
    for (auto& c : comps) {
      std::cout << "block (" << c["block"].get<std::string>() << "): head " << c["head"].dump();
      if (!c["middle"].empty()) std::cout << " middle " << c["middle"].dump() << " socle " << c["socle"].dump();
      std::cout << "\n";
    }
  } else {
    std::cout << json{{"module", ModuleLabel{ModuleKind::Simple, p, n, d}.str()}, {"components", comps}}.dump(2)
              << "\n";
  }
  return 0;
}

int cmd_dims(const Options& o) {
  int n = need_n(o), d = need_delta(o);
  auto f = fmt(o, "text");
  json rows = json::array();
  if (f == "csv") std::cout << "partition,dim_delta,dim_L\n";
  if (f == "text") std::cout << std::left << std::setw(16) << "partition" << std::setw(12) << "dim Delta" << "dim L\n";
  for (auto& p : lambda_set(n)) {
    auto dd = count_walks(p, n);
    int dl = gram_rank(p, n, mpq_class(d));
    if (f == "csv") std::cout << csv_field(p.str()) << "," << dd << "," << dl << "\n";
    else if (f == "text") std::cout << std::setw(16) << "(" + p.str() + ")" << std::setw(12) << dd << dl << "\n";
    else rows.push_back({{"partition", p.str()}, {"dim_delta", dd}, {"dim_L", dl}});
  }
  if (f == "json") std::cout << json{{"n", n}, {"delta", d}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_matrices(const Options& o) {
  int n = need_n(o);
  auto p = Partition::parse(o.partition);
  if (o.simple) {
    int d = need_delta(o);
    auto m = simple_matrices(p, n, d);
    auto j = numeric_json(m);
    auto r = check_relations(m, d, o.tol);
    j["relations_pass"] = r.pass();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  auto g = generic_matrices(p, n);
  if (!o.u.empty()) {
    mpq_class u(o.u);
    u.canonicalize();
    auto m = evaluate_at(g, u, o.continued ? Branch::Continued : Branch::Unitary);
    auto j = numeric_json(m);
    j["u"] = u.get_str();
    j["relations_pass"] = check_relations(m, u.get_d(), o.tol).pass();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  json j{{"basis", basis_json(g.basis)}};
  json s = json::array(), e = json::array();
  for (auto& mm : g.sigma) {
    json a = json::array();
    for (auto& [ij, x] : mm) a.push_back(entry_json(ij.first, ij.second, x));
    s.push_back(a);
  }
  for (auto& mm : g.e) {
    json a = json::array();
    for (auto& [ij, x] : mm) a.push_back(entry_json(ij.first, ij.second, x));
    e.push_back(a);
  }
  j["sigma"] = s;
  j["e"] = e;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<CheckResult> results;
  if (o.n < 0 && !o.delta) results = run_acceptance();
  else results = run_scoped(need_n(o), need_delta(o));
  bool ok = true;
  if (fmt(o, "text") == "json") {
    json a = json::array();
    for (auto& r : results) {
      a.push_back({{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
      ok = ok && r.pass;
    }
    std::cout << json{{"pass", ok}, {"checks", a}}.dump(2) << "\n";
  } else {
    for (auto& r : results) {
      std::cout << format_result(r) << "\n";
      ok = ok && r.pass;
    }
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_render(const Options& o) {
  auto p = Partition::parse(o.partition);
  auto c = cap_diagram(p, need_delta(o));
  std::cout << (fmt(o, "svg") == "text" ? cap_text(c) : cap_svg(c));
  return 0;
}

void error_json(const std::string& kind, const std::string& msg) {
  std::cerr << json{{"error", kind}, {"message", msg}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brauer algebra toolkit: weight and cap diagrams, restriction, Leduc-Ram matrices"};
  app.require_subcommand(1);
  Options o;

  auto add = [&](const std::string& name, const std::string& help, bool part, bool n, bool delta) {
    auto* sc = app.add_subcommand(name, help);
    if (part) sc->add_option("-p,--partition", o.partition, "partition, e.g. 3,1 or - for empty");
    if (n) sc->add_option("-n", o.n, "number of strands");
    if (delta) sc->add_option("-d,--delta", o.delta, "parameter delta (use --delta=-3 for negatives)");
    sc->add_option("--format", o.format, "json, text, svg or csv")
        ->check(CLI::IsMember({"json", "text", "svg", "csv"}));
    sc->add_option("--tol", o.tol, "relation tolerance")->check(CLI::PositiveNumber);
    return sc;
  };

  auto* embed_cmd = add("embed", "e_delta(lambda)", true, false, true);
  embed_cmd->add_option("--width", o.width, "number of entries to print");
  auto* weight_cmd = add("weight", "weight diagram", true, false, true);
  weight_cmd->add_option("--width", o.width, "minimum number of vertices");
  auto* cap_cmd = add("cap", "cap diagram", true, false, true);
  auto* blocks_cmd = add("blocks", "blocks of Lambda_n", false, true, true);
  auto* decomp_cmd = add("decomp", "decomposition matrix of a block", true, true, true);
  auto* restrict_cmd = add("restrict", "restriction of a simple module", true, true, true);
  auto* dims_cmd = add("dims", "dim Delta and dim L for Lambda_n", false, true, true);
  auto* mat_cmd = add("matrices", "Leduc-Ram matrices", true, true, true);
  mat_cmd->add_option("-u,--u", o.u, "evaluate at a rational u, e.g. 47/2");
  mat_cmd->add_flag("--simple", o.simple, "matrices of L_n(lambda) at u = delta");
  mat_cmd->add_flag("--continued", o.continued, "continue radicals from large u");
  auto* verify_cmd = add("verify", "acceptance checks", false, true, true);
  auto* render_cmd = add("render", "SVG figure of the cap diagram", true, false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    error_json("usage", e.what());
    return 2;
  }

  try {
    if (*embed_cmd) return cmd_embed(o);
    if (*weight_cmd) return cmd_weight(o);
    if (*cap_cmd) return cmd_cap(o);
    if (*blocks_cmd) return cmd_blocks(o);
    if (*decomp_cmd) return cmd_decomp(o);
    if (*restrict_cmd) return cmd_restrict(o);
    if (*dims_cmd) return cmd_dims(o);
    if (*mat_cmd) return cmd_matrices(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*render_cmd) return cmd_render(o);
  } catch (const UsageError& e) {
    error_json("usage", e.what());
    return 2;
  } catch (const std::exception& e) {
    error_json("precondition", e.what());
    return 2;
  }
  return 2;
}
