#include "normvol/svg.hpp"

#include "normvol/error.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

namespace normvol::svg {
namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 40.0;
constexpr const char* kPalette[] = {"#1f4e79", "#c0392b", "#27ae60", "#8e44ad", "#d68910"};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;

  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin); }
  double py(double y) const { return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin); }
};

std::string header() {
  const std::string s = fmt(kSize);
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s +
         " " + s + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

}  // namespace

std::string polygons(const std::vector<Polytope>& layers) {
  if (layers.empty()) fail(ErrorCode::kInvalidArgument, "svg: nothing to draw");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& p : layers) {
    if (p.dim() != 2) fail(ErrorCode::kUnsupported, "svg: only planar polygons can be plotted");
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo = std::min({lo, p.vertex(i)[0], p.vertex(i)[1]});
      hi = std::max({hi, p.vertex(i)[0], p.vertex(i)[1]});
    }
  }
  // Square frame so the aspect ratio is preserved.
  const double pad = 0.05 * (hi - lo);
  const Frame f{lo - pad, hi + pad, lo - pad, hi + pad};
  std::string out = header();
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const auto& p = layers[k];
    std::string d;
    for (std::size_t i = 0; i < p.size(); ++i)
      d += (i == 0 ? "M " : " L ") + fmt(f.px(p.vertex(i)[0])) + " " + fmt(f.py(p.vertex(i)[1]));
    d += " Z";
    const char* colour = kPalette[k % std::size(kPalette)];
    out += "<path d=\"" + d + "\" fill=\"" + (k == 0 ? std::string("#eaf1f8") : std::string("none")) +
           "\" stroke=\"" + colour + "\" stroke-width=\"" + (k == 0 ? "2" : "1.5") + "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string profile(const std::vector<double>& xs, const std::vector<double>& ys, const std::string& x_label,
                    const std::string& y_label) {
  if (xs.size() != ys.size() || xs.size() < 2) fail(ErrorCode::kInvalidArgument, "svg: profile needs >= 2 matching samples");
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  Frame f{*xmin, *xmax, *ymin, *ymax};
  if (f.x1 == f.x0) f.x1 = f.x0 + 1.0;
  if (f.y1 - f.y0 <= 1e-12 * std::max(1.0, std::abs(f.y0))) {
    const double h = std::max(1.0, std::abs(f.y0)) * 0.5;
    f.y0 -= h;
    f.y1 += h;
  }
  std::string out = header();
  const std::string left = fmt(kMargin), right = fmt(kSize - kMargin), top = fmt(kMargin),
                    bottom = fmt(kSize - kMargin);
  out += "<line x1=\"" + left + "\" y1=\"" + bottom + "\" x2=\"" + right + "\" y2=\"" + bottom +
         "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + left + "\" y1=\"" + bottom + "\" x2=\"" + left + "\" y2=\"" + top + "\" stroke=\"black\"/>\n";
  char buf[64];
  auto text = [&](double x, double y, const std::string& s, const char* anchor) {
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"" +
           anchor + "\">" + escape(s) + "</text>\n";
  };
  std::snprintf(buf, sizeof buf, "%.6g", *xmin);
  text(kMargin, kSize - kMargin + 14, buf, "start");
  std::snprintf(buf, sizeof buf, "%.6g", *xmax);
  text(kSize - kMargin, kSize - kMargin + 14, buf, "end");
  std::snprintf(buf, sizeof buf, "%.6g", *ymin);
  text(kMargin - 4, f.py(*ymin), buf, "end");
  std::snprintf(buf, sizeof buf, "%.6g", *ymax);
  text(kMargin - 4, f.py(*ymax) + 10, buf, "end");
  text(kSize / 2, kSize - 8, x_label, "middle");
  text(kSize / 2, 20, y_label, "middle");
  std::string pts;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) pts += " ";
    pts += fmt(f.px(xs[i])) + "," + fmt(f.py(ys[i]));
  }
  out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + kPalette[0] + "\" stroke-width=\"1.5\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace normvol::svg
