#include "trigeo/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace trigeo {

namespace {

constexpr double kCanvas = 600.0;

struct XY {
  double x, y;
};

std::vector<XY> embed(const PointFile& pf) {
  std::vector<XY> out;
  switch (pf.kind) {
    case PointFile::Kind::Points:
      for (const Point& p : pf.points)
        out.push_back({(double)p.x.convert_to<double>(), (double)p.y.convert_to<double>()});
      break;
    case PointFile::Kind::Circle: {
      constexpr double tau = 6.283185307179586476925286766559;
      for (const Rational& f : pf.fractions) {
        double a = tau * f.convert_to<double>();
        out.push_back({std::cos(a), std::sin(a)});
      }
      if (pf.with_center) out.push_back({0.0, 0.0});
      break;
    }
    case PointFile::Kind::Eisenstein: {
      const double s3h = std::sqrt(3.0) / 2.0;
      for (const auto& s : pf.lattice_sites)
        out.push_back({(double)s[0] + 0.5 * (double)s[1], s3h * (double)s[1]});
      break;
    }
  }
  return out;
}

// Exact collinearity of three sites, by kind.
bool sites_collinear(const PointFile& pf, size_t i, size_t j, size_t k) {
  switch (pf.kind) {
    case PointFile::Kind::Points:
      return collinear(pf.points[i], pf.points[j], pf.points[k]);
    case PointFile::Kind::Circle: {
      size_t center = pf.fractions.size();
      if (!pf.with_center) return false;
      if (i != center && j != center && k != center) return false;
      size_t a = (i == center) ? j : i;
      size_t b = (i == center || j == center) ? k : j;
      Rational d = pf.fractions[a] - pf.fractions[b];
      if (d < 0) d = -d;
      return d == Rational(1, 2);
    }
    case PointFile::Kind::Eisenstein: {
      long ux = pf.lattice_sites[j][0] - pf.lattice_sites[i][0];
      long uy = pf.lattice_sites[j][1] - pf.lattice_sites[i][1];
      long vx = pf.lattice_sites[k][0] - pf.lattice_sites[i][0];
      long vy = pf.lattice_sites[k][1] - pf.lattice_sites[i][1];
      return ux * vy - uy * vx == 0;
    }
  }
  return false;
}

std::string fmt(double v) {
  char buf[32];
  // Avoid "-0.000".
  if (std::abs(v) < 5e-4) v = 0.0;
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const PointFile& pf) {
  std::vector<XY> pts = embed(pf);
  const size_t n = pts.size();

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (n > 0) {
    xmin = xmax = pts[0].x;
    ymin = ymax = pts[0].y;
    for (const XY& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  double w = xmax - xmin, h = ymax - ymin;
  double span = std::max(std::max(w, h), 1e-9);
  double margin = 0.1 * kCanvas;
  double scale = (kCanvas - 2 * margin) / span;
  // Center the bounding box on the canvas; flip y for SVG coordinates.
  double ox = (kCanvas - scale * w) / 2.0;
  double oy = (kCanvas - scale * h) / 2.0;
  auto tx = [&](const XY& p) { return ox + scale * (p.x - xmin); };
  auto ty = [&](const XY& p) { return kCanvas - (oy + scale * (p.y - ymin)); };

  // A segment is dashed when its endpoints sit on some collinear triple.
  std::vector<std::vector<bool>> dashed(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = 0; k < n && !dashed[i][j]; ++k) {
        if (k == i || k == j) continue;
        if (sites_collinear(pf, i, j, k)) dashed[i][j] = dashed[j][i] = true;
      }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
         "viewBox=\"0 0 600 600\">\n";
  svg << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      svg << "<line x1=\"" << fmt(tx(pts[i])) << "\" y1=\"" << fmt(ty(pts[i]))
          << "\" x2=\"" << fmt(tx(pts[j])) << "\" y2=\"" << fmt(ty(pts[j]))
          << "\" stroke=\"black\" stroke-width=\"1\"";
      if (dashed[i][j]) svg << " stroke-dasharray=\"4 3\"";
      svg << "/>\n";
    }
  for (size_t i = 0; i < n; ++i)
    svg << "<circle cx=\"" << fmt(tx(pts[i])) << "\" cy=\"" << fmt(ty(pts[i]))
        << "\" r=\"4\" fill=\"#1f4e9c\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace trigeo
