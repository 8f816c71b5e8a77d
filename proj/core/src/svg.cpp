#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <string>

#include "bezout/error.hpp"
#include "bezout/regions.hpp"

namespace bezout {
namespace {

constexpr double kWidth = 800.0;
constexpr double kMargin = 20.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);
  return buf;
}

struct Frame {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
  double unit = 1.0;
  double height = kWidth;

  double x(double re) const { return kMargin + (re - xmin) * unit; }
  double y(double im) const { return kMargin + (ymax - im) * unit; }
};

Frame fit(const std::vector<ContourSystem>& contours, const std::vector<Complex>& markers) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  auto grow = [&](Complex z, double r) {
    xmin = std::min(xmin, z.real() - r);
    xmax = std::max(xmax, z.real() + r);
    ymin = std::min(ymin, z.imag() - r);
    ymax = std::max(ymax, z.imag() + r);
  };
  for (const auto& c : contours)
    for (const auto& a : c.arcs) grow(a.circle.center, a.circle.radius);
  for (Complex m : markers) grow(m, 0.0);
  Frame f;
  if (xmin > xmax) return f;
  const double pad = 0.05 * std::max({xmax - xmin, ymax - ymin, 1e-6});
  f.xmin = xmin - pad;
  f.xmax = xmax + pad;
  f.ymin = ymin - pad;
  f.ymax = ymax + pad;
  f.unit = (kWidth - 2 * kMargin) / (f.xmax - f.xmin);
  f.height = 2 * kMargin + (f.ymax - f.ymin) * f.unit;
  return f;
}

void arc_command(std::string& d, const Frame& f, const Arc& a, double t0, double t1) {
  const Complex e = a.point(t1);
  const double r = a.circle.radius * f.unit;
  // y is flipped, so counterclockwise in the plane is sweep-flag 0 on screen.
  d += " A " + fmt(r) + " " + fmt(r) + " 0 " + (std::abs(t1 - t0) > std::numbers::pi ? "1" : "0") + " " +
       (a.ccw ? "0" : "1") + " " + fmt(f.x(e.real())) + " " + fmt(f.y(e.imag()));
}

}  // namespace

std::string render_svg(const std::vector<ContourSystem>& contours, const std::vector<Complex>& markers) {
  const Frame f = fit(contours, markers);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(f.height) +
         "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(f.height) + "\">\n";
  static const char* palette[] = {"#1f3b73", "#a23b2a", "#2f7d32", "#6d3f8f", "#8a6d1f"};
  for (std::size_t ci = 0; ci < contours.size(); ++ci) {
    const auto& c = contours[ci];
    for (int l = 0; l < c.loop_count; ++l) {
      const auto arcs = c.loop(l);
      if (arcs.empty()) continue;
      std::string d = "M " + fmt(f.x(arcs.front().start().real())) + " " + fmt(f.y(arcs.front().start().imag()));
      for (const Arc& a : arcs) {
        if (std::abs(a.sweep()) > 2 * std::numbers::pi - 1e-9) {
          const double mid = 0.5 * (a.start_angle + a.end_angle);
          arc_command(d, f, a, a.start_angle, mid);
          arc_command(d, f, a, mid, a.end_angle);
        } else {
          arc_command(d, f, a, a.start_angle, a.end_angle);
        }
      }
      d += " Z";
      out += "  <path d=\"" + d + "\" fill=\"none\" stroke=\"" + palette[ci % 5] +
             "\" stroke-width=\"1.5\" data-contour=\"" + std::to_string(ci) + "\" data-loop=\"" +
             std::to_string(l) + "\"/>\n";
    }
  }
  for (Complex m : markers)
    out += "  <circle cx=\"" + fmt(f.x(m.real())) + "\" cy=\"" + fmt(f.y(m.imag())) + "\" r=\"3\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

void emit_svg(const std::vector<ContourSystem>& contours, const std::vector<Complex>& markers,
              const std::filesystem::path& path) {
  std::error_code ec;  // a failure here surfaces as an Io error when the stream opens
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << render_svg(contours, markers);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace bezout
