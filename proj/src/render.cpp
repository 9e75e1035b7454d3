#include "brauer/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace brauer {

namespace {

struct Drawn {
  int a, b;
  bool curl;
  int level;
};

// Nesting level of each arc. Reflecting through the wall turns a curl (a, b)
// into an ordinary arc from -a to b, so nesting is interval containment.
std::vector<Drawn> levels(const CapDiagram& c) {
  std::vector<Drawn> arcs;
  for (auto [a, b] : c.caps) arcs.push_back({a, b, false, 0});
  for (auto [a, b] : c.curls) arcs.push_back({a, b, true, 0});
  auto span = [&](const Drawn& x) {
    long lo = c.base.doubled_value(x.a), hi = c.base.doubled_value(x.b);
    return std::pair<long, long>{x.curl ? -lo : lo, hi};
  };
  std::sort(arcs.begin(), arcs.end(), [&](const Drawn& x, const Drawn& y) {
    auto [xl, xh] = span(x);
    auto [yl, yh] = span(y);
    return xh - xl < yh - yl;
  });
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    auto [ol, oh] = span(arcs[i]);
    int lv = 1;
    for (std::size_t j = 0; j < i; ++j) {
      auto [il, ih] = span(arcs[j]);
      if (ol < il && ih < oh) lv = std::max(lv, arcs[j].level + 1);
    }
    arcs[i].level = lv;
  }
  return arcs;
}

int width_of(const CapDiagram& c) {
  int w = std::max(c.window, c.base.prefix());
  for (auto [a, b] : c.caps) w = std::max(w, b + 1);
  for (auto [a, b] : c.curls) w = std::max(w, b + 1);
  return w;
}

}  // namespace

std::string weight_text(const WeightDiagram& x, int width) { return x.str(width) + " ..."; }

std::string cap_text(const CapDiagram& c) {
  int w = width_of(c);
  auto col = [](int k) { return 2 + 3 * k; };
  int cols = col(w) + 1;
  std::ostringstream os;
  std::string top(cols, ' ');
  top[0] = '|';
  for (int k = 0; k < w; ++k) top[col(k)] = static_cast<char>(c.base.at(k));
  os << top << " ...\n";
  auto arcs = levels(c);
  int depth = 0;
  for (auto& x : arcs) depth = std::max(depth, x.level);
  std::vector<std::string> lines(std::max(depth, 1), std::string(cols, ' '));
  for (auto& line : lines) line[0] = '|';
  for (int r : c.rays)
    for (auto& line : lines) line[col(r)] = '|';
  if (c.up_ray)
    for (auto& line : lines) line[col(*c.up_ray)] = '|';
  for (auto& x : arcs) {
    for (int lv = 0; lv < x.level - 1; ++lv) {
      lines[lv][col(x.b)] = '|';
      lines[lv][col(x.a)] = '|';
    }
    auto& line = lines[x.level - 1];
    int from = x.curl ? 1 : col(x.a) + 1;
    for (int t = from; t < col(x.b); ++t) line[t] = '_';
    line[col(x.b)] = '/';
    line[col(x.a)] = x.curl ? '/' : '\\';
  }
  for (auto& line : lines) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string cap_svg(const CapDiagram& c) {
  int w = width_of(c);
  const double step = 40, base = 40, unit = 18;
  double shift = c.base.odd() ? 0.5 : 0.0;
  auto xpos = [&](int k) { return step * (k + shift) + (c.base.odd() ? 0 : step / 2); };
  auto arcs = levels(c);
  int depth = 1;
  for (auto& x : arcs) depth = std::max(depth, x.level);
  double height = base + unit * (depth + 2) + 20;
  double width = xpos(w) + step;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"-10 0 " << width + 10 << ' ' << height << "\">\n";
  os << "  <line x1=\"0\" y1=\"10\" x2=\"0\" y2=\"" << height - 10 << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "  <line x1=\"0\" y1=\"" << base << "\" x2=\"" << width << "\" y2=\"" << base
     << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  for (int k = 0; k < w; ++k)
    os << "  <text x=\"" << xpos(k) << "\" y=\"" << base - 8 << "\" text-anchor=\"middle\" font-family=\"monospace\">"
       << static_cast<char>(c.base.at(k)) << "</text>\n";
  for (auto& x : arcs) {
    double xa = xpos(x.a), xb = xpos(x.b), dip = base + 2 * unit * x.level;
    if (!x.curl) {
      os << "  <path d=\"M " << xa << ' ' << base << " Q " << (xa + xb) / 2 << ' ' << dip << ' ' << xb << ' ' << base
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    } else {
      double meet = base + unit * x.level;
      os << "  <path d=\"M " << xa << ' ' << base << " Q " << xa << ' ' << meet << " 0 " << meet << " M " << xb << ' '
         << base << " Q " << xb << ' ' << dip << " 0 " << meet << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  std::vector<int> rays = c.rays;
  if (c.up_ray) rays.push_back(*c.up_ray);
  for (int r : rays)
    os << "  <line x1=\"" << xpos(r) << "\" y1=\"" << base << "\" x2=\"" << xpos(r) << "\" y2=\"" << height - 10
       << "\" stroke=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace brauer
