#include "bargain/svg_render.hpp"

#include <stdexcept>

namespace bargain {

namespace {

constexpr int kView = 640;
constexpr int kMargin = 40;
constexpr int kSpan = kView - 2 * kMargin;  // drawable span per axis

std::string_view marker_letter(Rule r) {
  switch (r) {
    case Rule::nash: return "N";
    case Rule::ks: return "K";
    case Rule::equal_area: return "E";
  }
  throw std::logic_error("bad rule");
}

std::string_view marker_color(Rule r) {
  switch (r) {
    case Rule::nash: return "#c0392b";
    case Rule::ks: return "#2980b9";
    case Rule::equal_area: return "#27ae60";
  }
  throw std::logic_error("bad rule");
}

}  // namespace

std::string render_svg(const Frontier& f, const std::vector<Solution>& solutions,
                       bool shade_equal_area) {
  if (f.degenerate()) throw std::domain_error("nothing to draw for a degenerate frontier");

  // Exact affine viewport map, rendered in decimal only at the end.
  auto px = [&](const Rat& x) { return (Rat(kMargin) + Rat(kSpan) * x / f.u1()).to_decimal(); };
  auto py = [&](const Rat& y) { return (Rat(kView - kMargin) - Rat(kSpan) * y / f.u2()).to_decimal(); };
  auto pair = [&](const Point& q) { return px(q.x) + "," + py(q.y); };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 640\" width=\"640\" height=\"640\">\n";
  out += "<!-- px = 40 + 560*x/u1, py = 600 - 560*y/u2 -->\n";
  out += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"640\" fill=\"white\"/>\n";

  if (shade_equal_area) {
    for (const Solution& s : solutions) {
      if (s.rule != Rule::equal_area) continue;
      const Rat& a = s.point.x;
      const Rat& ga = s.point.y;
      // Between the chain and the horizontal through the solution,
      // left of it...
      std::string lhs = pair(Point{Rat(0), ga});
      for (const Point& n : f.nodes()) {
        if (n.x < a) lhs += " " + pair(n);
      }
      lhs += " " + pair(s.point);
      // ...and everything under the chain right of it.
      std::string rhs = pair(s.point);
      for (const Point& n : f.nodes()) {
        if (n.x > a) rhs += " " + pair(n);
      }
      rhs += " " + pair(Point{a, Rat(0)});
      for (const std::string& poly : {lhs, rhs}) {
        out += "<polygon points=\"" + poly +
               "\" fill=\"#27ae60\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
      }
    }
  }

  out += "<line x1=\"40\" y1=\"600\" x2=\"600\" y2=\"600\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<line x1=\"40\" y1=\"40\" x2=\"40\" y2=\"600\" stroke=\"black\" stroke-width=\"1\"/>\n";
  out += "<text x=\"35\" y=\"615\" text-anchor=\"end\" font-size=\"12\">0</text>\n";
  out += "<text x=\"600\" y=\"615\" text-anchor=\"middle\" font-size=\"12\">u1=" +
         f.u1().to_decimal() + "</text>\n";
  out += "<text x=\"35\" y=\"44\" text-anchor=\"end\" font-size=\"12\">u2=" +
         f.u2().to_decimal() + "</text>\n";

  out += "<polyline points=\"";
  const auto& nodes = f.nodes();
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += " ";
    out += pair(nodes[k]);
  }
  out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  int stagger = 0;
  for (const Solution& s : solutions) {
    std::string cx = px(s.point.x);
    std::string cy = py(s.point.y);
    std::string color(marker_color(s.rule));
    out += "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"4\" fill=\"" + color + "\"/>\n";
    // Labels fan out downward so coincident markers stay legible.
    out += "<text x=\"" + cx + "\" y=\"" + cy + "\" dx=\"8\" dy=\"" +
           std::to_string(-6 + 16 * stagger) + "\" fill=\"" + color + "\" font-size=\"14\">" +
           std::string(marker_letter(s.rule)) + "</text>\n";
    ++stagger;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bargain
