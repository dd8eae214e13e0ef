#include "polyheap/render.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace polyheap {

namespace {

constexpr int kUnit = 20;

std::string svg_open(int w, int h) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
    << w << ' ' << h << "\">\n";
  return s.str();
}

std::string svg_path(const CatPath& p) {
  validate(p.tokens, PathMode::Cat);
  const std::vector<int> alt = altitude_profile(p.tokens);
  const int top = *std::max_element(alt.begin(), alt.end());
  const int w = (static_cast<int>(p.size()) + 2) * kUnit, h = (top + 2) * kUnit;
  auto x = [](std::size_t k) { return static_cast<int>(k + 1) * kUnit; };
  auto y = [&](int a) { return (top + 1 - a) * kUnit; };
  std::ostringstream s;
  s << svg_open(w, h);
  s << "  <polyline class=\"path\" fill=\"none\" stroke=\"black\" points=\"";
  for (std::size_t k = 0; k < alt.size(); ++k) s << (k ? " " : "") << x(k) << ',' << y(alt[k]);
  s << "\"/>\n";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.tokens[k] != 'C') continue;
    s << "  <line class=\"catastrophe\" stroke=\"red\" x1=\"" << x(k) << "\" y1=\"" << y(alt[k]) << "\" x2=\""
      << x(k + 1) << "\" y2=\"" << y(0) << "\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string svg_heap(const Heap& heap) {
  const Heap h = heap.canonical();
  int top = 0;
  for (const Dimer& d : h.dimers()) top = std::max(top, d.level);
  const int w = (h.max_pos() + 2) * kUnit, ht = (top + 1) * kUnit;
  std::ostringstream s;
  s << svg_open(w, ht);
  for (const Dimer& d : h.dimers()) {
    s << "  <rect class=\"dimer\" x=\"" << d.pos * kUnit << "\" y=\"" << (top - d.level) * kUnit << "\" width=\""
      << 2 * kUnit << "\" height=\"" << kUnit << "\" fill=\"lightgray\" stroke=\"black\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string svg_animal(const Animal& a) {
  int mi = 0, mj = 0;
  for (const Cell& c : a.cells()) {
    mi = std::max(mi, c.i);
    mj = std::max(mj, c.j);
  }
  std::ostringstream s;
  s << svg_open((mi + 1) * kUnit, (mj + 1) * kUnit);
  for (const Cell& c : a.cells()) {
    s << "  <rect class=\"cell\" x=\"" << c.i * kUnit << "\" y=\"" << (mj - c.j) * kUnit << "\" width=\"" << kUnit
      << "\" height=\"" << kUnit << "\" fill=\"lightgray\" stroke=\"black\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string join_rows(const std::vector<std::string>& rows) {
  std::string out;
  for (const std::string& r : rows) {
    std::string t = r;
    while (!t.empty() && t.back() == ' ') t.pop_back();
    out += t + '\n';
  }
  return out;
}

// Steps drawn as / \ _ and C, one column each, highest altitude on top.
std::string ascii_path(const CatPath& p) {
  validate(p.tokens, PathMode::Cat);
  const std::vector<int> alt = altitude_profile(p.tokens);
  const int top = *std::max_element(alt.begin(), alt.end());
  std::vector<std::string> rows(static_cast<std::size_t>(top) + 1, std::string(p.size(), ' '));
  for (std::size_t k = 0; k < p.size(); ++k) {
    int row = alt[k];
    char c = '_';
    switch (p.tokens[k]) {
      case 'U': c = '/'; break;
      case 'D': c = '\\'; row = alt[k] - 1; break;
      case 'C': c = 'C'; break;
      default: break;
    }
    rows[static_cast<std::size_t>(top - row)][k] = c;
  }
  if (p.size() == 0) return "(empty path)\n";
  return join_rows(rows);
}

std::string ascii_heap(const Heap& heap) {
  const Heap h = heap.canonical();
  int top = 0;
  for (const Dimer& d : h.dimers()) top = std::max(top, d.level);
  std::vector<std::string> rows(static_cast<std::size_t>(top) + 1,
                                std::string(static_cast<std::size_t>(h.max_pos() + 2), ' '));
  for (const Dimer& d : h.dimers()) {
    auto& row = rows[static_cast<std::size_t>(top - d.level)];
    row[static_cast<std::size_t>(d.pos)] = '[';
    row[static_cast<std::size_t>(d.pos) + 1] = ']';
  }
  return join_rows(rows);
}

std::string ascii_animal(const Animal& a) {
  int mi = 0, mj = 0;
  for (const Cell& c : a.cells()) {
    mi = std::max(mi, c.i);
    mj = std::max(mj, c.j);
  }
  std::vector<std::string> rows(static_cast<std::size_t>(mj) + 1, std::string(static_cast<std::size_t>(mi) + 1, '.'));
  for (const Cell& c : a.cells()) rows[static_cast<std::size_t>(mj - c.j)][static_cast<std::size_t>(c.i)] = '#';
  return join_rows(rows);
}

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

}  // namespace

std::string render_svg(const Object& o) {
  return std::visit(Overloaded{[](const CatPath& p) { return svg_path(p); },
                               [](const Heap& h) { return svg_heap(h); },
                               [](const Animal& a) { return svg_animal(a); }},
                    o);
}

std::string render_ascii(const Object& o) {
  return std::visit(Overloaded{[](const CatPath& p) { return ascii_path(p); },
                               [](const Heap& h) { return ascii_heap(h); },
                               [](const Animal& a) { return ascii_animal(a); }},
                    o);
}

}  // namespace polyheap
