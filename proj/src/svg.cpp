#include "abplab/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace abplab {

namespace {

constexpr double kSize = 480.0;
constexpr double kMargin = 20.0;

struct Frame {
  double x0, y0, scale;

  Frame(std::vector<Vec2> pts) {
    double xmin = std::numeric_limits<double>::infinity(), ymin = xmin, xmax = -xmin, ymax = -xmin;
    for (Vec2 p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    x0 = xmin;
    y0 = ymax;
    scale = (kSize - 2 * kMargin) / std::max({xmax - xmin, ymax - ymin, 1e-12});
  }
  double sx(double x) const { return kMargin + (x - x0) * scale; }
  double sy(double y) const { return kMargin + (y0 - y) * scale; }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void header(std::ostringstream& os) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void outline(std::ostringstream& os, const Frame& f, const Polygon& p, const char* stroke, const char* fill) {
  os << "<polygon fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
  for (Vec2 v : p.vertices()) os << fmt(f.sx(v.x)) << ',' << fmt(f.sy(v.y)) << ' ';
  os << "\"/>\n";
}

void dot(std::ostringstream& os, const Frame& f, Vec2 p, double r, const char* color) {
  os << "<circle cx=\"" << fmt(f.sx(p.x)) << "\" cy=\"" << fmt(f.sy(p.y)) << "\" r=\"" << r << "\" fill=\"" << color
     << "\"/>\n";
}

}  // namespace

std::string svg_domain(const Polygon& domain) {
  std::ostringstream os;
  header(os);
  outline(os, Frame(domain.vertices()), domain, "black", "#dde8f4");
  os << "</svg>\n";
  return os.str();
}

std::string svg_contact_set(const Polygon& domain, const TriMesh& mesh, const ContactSet& gamma) {
  std::ostringstream os;
  header(os);
  const Frame f(domain.vertices());
  outline(os, f, domain, "black", "none");
  std::vector<char> member(mesh.vertex_count(), 0);
  for (int m : gamma.members) member[m] = 1;
  for (int i = 0; i < static_cast<int>(mesh.vertex_count()); ++i) dot(os, f, mesh.vertex(i), member[i] ? 1.6 : 1.0, member[i] ? "#c0392b" : "#b0b0b0");
  os << "</svg>\n";
  return os.str();
}

std::string svg_gradient_image(const Polygon& target, const ContactSet& gamma, const CoverageReport* coverage) {
  std::vector<Vec2> pts = target.vertices();
  for (Vec2 p : gamma.gradients) pts.push_back(p);
  const Frame f(pts);
  std::ostringstream os;
  header(os);
  outline(os, f, target, "black", "#eef4e4");
  for (Vec2 p : gamma.gradients) dot(os, f, p, 1.0, "#2e6da4");
  if (coverage) {
    for (Vec2 p : coverage->failures) dot(os, f, p, 2.5, "#c0392b");
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace abplab
