#include "hyperbicomb/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hyperbicomb {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Blue-to-red ramp across layers.
std::string layer_color(int i, int n) {
  const double f = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
  const int r = static_cast<int>(std::lround(31.0 + f * (214.0 - 31.0)));
  const int g = static_cast<int>(std::lround(119.0 + f * (39.0 - 119.0)));
  const int b = static_cast<int>(std::lround(180.0 + f * (40.0 - 180.0)));
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

std::string render_intervals(const std::vector<ConvexBody>& snaps) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const ConvexBody& s : snaps) {
    lo = std::min(lo, s.as_interval().lo);
    hi = std::max(hi, s.as_interval().hi);
  }
  if (hi - lo < 1e-9) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const int n = static_cast<int>(snaps.size());
  const double width = 640.0, margin = 24.0, bar = 12.0, gap = 8.0;
  const double height = 2.0 * margin + n * bar + (n - 1) * gap;
  const double sx = (width - 2.0 * margin) / (hi - lo);
  auto X = [&](double v) { return margin + (v - lo) * sx; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int i = 0; i < n; ++i) {
    const Interval iv = snaps[static_cast<std::size_t>(i)].as_interval();
    const double y = margin + i * (bar + gap);
    const std::string color = layer_color(i, n);
    out << "<g id=\"layer-" << i << "\">";
    if (iv.hi - iv.lo < 1e-12) {
      out << "<circle cx=\"" << num(X(iv.lo)) << "\" cy=\"" << num(y + bar / 2.0)
          << "\" r=\"" << num(bar / 2.0) << "\" fill=\"" << color << "\"/>";
    } else {
      out << "<rect x=\"" << num(X(iv.lo)) << "\" y=\"" << num(y) << "\" width=\""
          << num(X(iv.hi) - X(iv.lo)) << "\" height=\"" << num(bar) << "\" fill=\"" << color
          << "\" fill-opacity=\"0.8\"/>";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_polygons(const std::vector<ConvexBody>& snaps) {
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const ConvexBody& s : snaps)
    for (const Eigen::Vector2d& v : s.polygon_vertices()) {
      xlo = std::min(xlo, v.x());
      xhi = std::max(xhi, v.x());
      ylo = std::min(ylo, v.y());
      yhi = std::max(yhi, v.y());
    }
  if (xhi - xlo < 1e-9) {
    xlo -= 1.0;
    xhi += 1.0;
  }
  if (yhi - ylo < 1e-9) {
    ylo -= 1.0;
    yhi += 1.0;
  }
  const double padx = 0.05 * (xhi - xlo), pady = 0.05 * (yhi - ylo);
  xlo -= padx;
  xhi += padx;
  ylo -= pady;
  yhi += pady;

  const double size = 480.0;
  const double scale = std::min(size / (xhi - xlo), size / (yhi - ylo));
  const double width = (xhi - xlo) * scale, height = (yhi - ylo) * scale;
  auto X = [&](double v) { return (v - xlo) * scale; };
  auto Y = [&](double v) { return height - (v - ylo) * scale; };  // y up

  const int n = static_cast<int>(snaps.size());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  for (int i = 0; i < n; ++i) {
    const auto& verts = snaps[static_cast<std::size_t>(i)].polygon_vertices();
    const std::string color = layer_color(i, n);
    out << "<g id=\"layer-" << i << "\">";
    if (verts.size() == 1) {
      out << "<circle cx=\"" << num(X(verts[0].x())) << "\" cy=\"" << num(Y(verts[0].y()))
          << "\" r=\"4.000000\" fill=\"" << color << "\"/>";
    } else if (verts.size() == 2) {
      out << "<line x1=\"" << num(X(verts[0].x())) << "\" y1=\"" << num(Y(verts[0].y()))
          << "\" x2=\"" << num(X(verts[1].x())) << "\" y2=\"" << num(Y(verts[1].y()))
          << "\" stroke=\"" << color << "\" stroke-width=\"2.000000\"/>";
    } else {
      out << "<path d=\"";
      for (std::size_t k = 0; k < verts.size(); ++k)
        out << (k == 0 ? "M" : " L") << num(X(verts[k].x())) << "," << num(Y(verts[k].y()));
      out << " Z\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.500000\"/>";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const std::vector<ConvexBody>& snapshots) {
  if (snapshots.size() < 2)
    throw std::invalid_argument("render_svg: need at least two snapshots");
  const ConvexBody::Kind kind = snapshots.front().kind();
  for (const ConvexBody& s : snapshots) {
    if (s.kind() == ConvexBody::Kind::Subtree)
      throw std::invalid_argument("render_svg: subtree bodies have no planar embedding");
    if (s.kind() != kind)
      throw std::invalid_argument("render_svg: snapshots must share one representation");
  }
  return kind == ConvexBody::Kind::Interval ? render_intervals(snapshots)
                                            : render_polygons(snapshots);
}

void emit_svg(const std::vector<ConvexBody>& snapshots, const std::string& path) {
  std::string body = render_svg(snapshots);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("emit_svg: cannot open " + path);
  out << body;
}

}  // namespace hyperbicomb
