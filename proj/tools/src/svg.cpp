#include "svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sgenus {

using stablegenus::Rational;
using stablegenus::to_string;

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kMargin = 50;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

std::string num(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

void header(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<style>.axis{stroke:#000;stroke-width:1}.graph{stroke:#1f4e9c;stroke-width:2;fill:none}"
        ".jump{stroke:#bbb;stroke-dasharray:3 3}.outer{fill:#dde6f3;stroke:#1f4e9c}"
        ".smooth{fill:#a9bcd9;stroke:#1f4e9c}.inner{fill:#6d8fc4;stroke:#000}"
        "text{font-family:sans-serif;font-size:11px}</style>\n";
  os << "<title>" << escape(title) << "</title>\n";
}

}  // namespace

std::string signature_svg(const stablegenus::KnotExpr& expr, const std::string& title, unsigned cap_bits) {
  const auto segs = stablegenus::segments(expr, cap_bits);
  Rational top = 1;
  for (const auto& s : segs) top = std::max(top, Rational(stablegenus::abs(s.value) / 2));
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](const Rational& t) { return kMargin + Rational(t * 2).get_d() * plot_w; };
  auto py = [&](const Rational& v) { return kHeight - kMargin - Rational(v / top).get_d() * plot_h; };

  std::ostringstream os;
  header(os, title);
  os << "<line class=\"axis\" x1=\"" << num(kMargin) << "\" y1=\"" << num(kHeight - kMargin) << "\" x2=\""
     << num(kWidth - kMargin) << "\" y2=\"" << num(kHeight - kMargin) << "\"/>\n";
  os << "<line class=\"axis\" x1=\"" << num(kMargin) << "\" y1=\"" << num(kMargin) << "\" x2=\"" << num(kMargin)
     << "\" y2=\"" << num(kHeight - kMargin) << "\"/>\n";
  os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(kHeight - kMargin + 16) << "\">0</text>\n";
  os << "<text x=\"" << num(kWidth - kMargin) << "\" y=\"" << num(kHeight - kMargin + 16) << "\">1/2</text>\n";
  os << "<text x=\"" << num(kWidth / 2) << "\" y=\"" << num(kHeight - 8) << "\">t</text>\n";
  for (Rational v = 0; v <= top; v += 1)
    os << "<text x=\"" << num(kMargin - 20) << "\" y=\"" << num(py(v) + 4) << "\">" << to_string(v) << "</text>\n";
  os << "<text x=\"8\" y=\"" << num(kMargin - 16) << "\">(1/2)|sigma_t|</text>\n";

  // Jump markers with exact abscissas, then the step graph.
  int label_row = 0;
  for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
    const auto& loc = *segs[i].hi;
    const double x = px(loc.representative());
    os << "<line class=\"jump\" data-t=\"" << escape(loc.to_string()) << "\" x1=\"" << num(x) << "\" y1=\""
       << num(kMargin) << "\" x2=\"" << num(x) << "\" y2=\"" << num(kHeight - kMargin) << "\"/>\n";
    if (loc.is_exact()) {
      os << "<text x=\"" << num(x - 10) << "\" y=\"" << num(kHeight - kMargin + 28 + 12 * (label_row % 2)) << "\">"
         << to_string(loc.exact()) << "</text>\n";
      ++label_row;
    }
  }
  os << "<path class=\"graph\" d=\"";
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Rational lo = segs[i].lo ? segs[i].lo->representative() : Rational(0);
    const Rational hi = segs[i].hi ? segs[i].hi->representative() : Rational(1, 2);
    const Rational v = stablegenus::abs(segs[i].value) / 2;
    os << (i == 0 ? "M" : " L") << num(px(lo)) << ',' << num(py(v)) << " L" << num(px(hi)) << ',' << num(py(v));
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::vector<RationalVector> angular_sort(std::vector<RationalVector> pts) {
  auto half = [](const RationalVector& p) { return (p[1] > 0 || (p[1] == 0 && p[0] > 0)) ? 0 : 1; };
  std::sort(pts.begin(), pts.end(), [&](const RationalVector& a, const RationalVector& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return a[0] * b[1] - a[1] * b[0] > 0;
  });
  return pts;
}

std::string polygon_svg(const std::vector<PolygonLayer>& layers, const std::string& x_label, const std::string& y_label,
                        const std::string& title) {
  Rational extent = 0;
  for (const auto& l : layers)
    for (const auto& p : l.points) extent = std::max({extent, stablegenus::abs(p[0]), stablegenus::abs(p[1])});
  if (extent == 0) extent = 1;
  const double cx = kWidth / 2;
  const double cy = kHeight / 2;
  const double scale = (kHeight / 2 - kMargin) / extent.get_d();
  auto px = [&](const Rational& x) { return cx + x.get_d() * scale; };
  auto py = [&](const Rational& y) { return cy - y.get_d() * scale; };

  std::ostringstream os;
  header(os, title);
  os << "<line class=\"axis\" x1=\"" << num(kMargin) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(kWidth - kMargin)
     << "\" y2=\"" << num(cy) << "\"/>\n";
  os << "<line class=\"axis\" x1=\"" << num(cx) << "\" y1=\"" << num(kMargin / 2) << "\" x2=\"" << num(cx) << "\" y2=\""
     << num(kHeight - kMargin / 2) << "\"/>\n";
  os << "<text x=\"" << num(kWidth - kMargin + 4) << "\" y=\"" << num(cy + 4) << "\">" << escape(x_label) << "</text>\n";
  os << "<text x=\"" << num(cx + 4) << "\" y=\"" << num(kMargin / 2 + 10) << "\">" << escape(y_label) << "</text>\n";
  std::set<RationalVector> labelled;
  for (const auto& l : layers) {
    const auto pts = angular_sort(l.points);
    if (pts.empty()) continue;
    os << "<polygon class=\"" << l.css_class << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << num(px(pts[i][0])) << ',' << num(py(pts[i][1]));
    os << "\"/>\n";
    for (const auto& p : pts) {
      if (!labelled.insert(p).second) continue;
      os << "<text class=\"vertex\" data-x=\"" << to_string(p[0]) << "\" data-y=\"" << to_string(p[1]) << "\" x=\""
         << num(px(p[0]) + 3) << "\" y=\"" << num(py(p[1]) - 3) << "\">(" << to_string(p[0]) << ", " << to_string(p[1])
         << ")</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sgenus
