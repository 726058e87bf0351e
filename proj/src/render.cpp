#include <array>
#include <numbers>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ncph/error.hpp"
#include "ncph/session.hpp"

// Display-only floating geometry. Nothing here feeds back into a decision.

namespace ncph {

namespace {

using P3 = std::array<double, 3>;

double dot3(const P3& a, const P3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
P3 cross3(const P3& a, const P3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
P3 scale3(const P3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
P3 add3(const P3& a, const P3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
P3 unit3(const P3& a) { return scale3(a, 1.0 / std::sqrt(dot3(a, a))); }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

class Canvas {
 public:
  Canvas(const CoxeterSystem& sys, const Vector& v) {
    // Rows of a Cholesky factor of the Gram matrix are Euclidean simple roots.
    double g[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) g[i][j] = sys.gram()(i, j).to_double();
    for (int j = 0; j < 3; ++j) {
      double s = g[j][j];
      for (int k = 0; k < j; ++k) s -= l_[j][k] * l_[j][k];
      l_[j][j] = std::sqrt(s);
      for (int i = j + 1; i < 3; ++i) {
        double x = g[i][j];
        for (int k = 0; k < j; ++k) x -= l_[i][k] * l_[j][k];
        l_[i][j] = x / l_[j][j];
      }
    }
    pole_ = unit3(euclidean(v));
    P3 axis{1, 0, 0};
    if (std::abs(pole_[0]) > 0.9) axis = {0, 1, 0};
    e1_ = unit3(add3(axis, scale3(pole_, -dot3(axis, pole_))));
    e2_ = cross3(pole_, e1_);
  }

  P3 euclidean(const Vector& x) const {
    P3 e{0, 0, 0};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) e[k] += x[i].to_double() * l_[i][k];
    return e;
  }
  const P3& pole() const { return pole_; }

  // Stereographic projection from -pole onto the tangent plane at pole; the
  // closed upper hemisphere lands in the disk of radius 2.
  std::pair<double, double> screen(const P3& u) const {
    P3 x = unit3(u);
    double t = 2.0 / (1.0 + dot3(x, pole_));
    P3 p = add3(scale3(pole_, -1), scale3(add3(x, pole_), t));
    return {500.0 + 225.0 * dot3(p, e1_), 500.0 - 225.0 * dot3(p, e2_)};
  }

  // Great-circle arc from a to b as path segments (without the initial move).
  std::string arc(const P3& a, const P3& b, int steps = 24) const {
    std::string out;
    for (int k = 1; k <= steps; ++k) {
      double s = static_cast<double>(k) / steps;
      auto [x, y] = screen(add3(scale3(a, 1 - s), scale3(b, s)));
      out += " L" + num(x) + "," + num(y);
    }
    return out;
  }

  std::string polygon(const std::vector<P3>& corners) const {
    auto [x0, y0] = screen(corners[0]);
    std::string d = "M" + num(x0) + "," + num(y0);
    for (std::size_t i = 0; i < corners.size(); ++i) d += arc(corners[i], corners[(i + 1) % corners.size()]);
    return d + " Z";
  }

  // Half of the great circle normal to n that lies in the upper hemisphere.
  std::string half_circle(const P3& n) const {
    P3 un = unit3(n);
    P3 top = add3(pole_, scale3(un, -dot3(pole_, un)));
    if (dot3(top, top) < 1e-12) return {};
    top = unit3(top);
    P3 side = cross3(un, top);
    std::string d;
    const int steps = 180;
    for (int k = 0; k <= steps; ++k) {
      double theta = -std::numbers::pi / 2 + std::numbers::pi * k / steps;
      auto [x, y] = screen(add3(scale3(top, std::cos(theta)), scale3(side, std::sin(theta))));
      d += (k ? " L" : "M") + num(x) + "," + num(y);
    }
    return d;
  }

 private:
  double l_[3][3] = {};
  P3 pole_{}, e1_{}, e2_{};
};

}  // namespace

std::string render_svg(Session& session) {
  const auto& sys = session.system();
  if (sys.rank() != 3) throw Error("render needs rank 3, got rank " + std::to_string(sys.rank()));
  const auto& gv = session.generic();
  const auto& chambers = session.chambers();
  const auto& mc = session.mu_complex();
  const auto& t = session.reflections();
  Canvas canvas(sys, gv.v);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
  os << "<title>" << sys.input_diagram().label << ": hemisphere v.x &gt; 0, " << bounded_slice_count(chambers)
     << " bounded-slice chambers, " << mc.facets.size() << " facets</title>\n";
  os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";

  os << "<g id=\"bounded-chambers\" fill=\"#cfe0f3\" stroke=\"none\">\n";
  for (const auto& ch : chambers) {
    if (!ch.bounded_slice) continue;
    std::vector<P3> corners;
    for (const auto& r : ch.rays) corners.push_back(unit3(canvas.euclidean(r)));
    os << "<path d=\"" << canvas.polygon(corners) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<circle cx=\"500\" cy=\"500\" r=\"450\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "<g id=\"hyperplanes\" fill=\"none\" stroke=\"#555\" stroke-width=\"1\">\n";
  for (const auto& root : t.roots) os << "<path d=\"" << canvas.half_circle(canvas.euclidean(root)) << "\"/>\n";
  os << "</g>\n";

  os << "<g id=\"facets\" fill=\"none\" stroke=\"black\" stroke-width=\"4\" stroke-linejoin=\"round\">\n";
  for (const auto& f : mc.facets) {
    std::vector<P3> corners;
    for (auto p : f) corners.push_back(unit3(canvas.euclidean(mc.vertices[p])));
    os << "<path d=\"" << canvas.polygon(corners) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"18\">\n";
  for (std::size_t i = 0; i < mc.vertices.size(); ++i) {
    auto [x, y] = canvas.screen(canvas.euclidean(mc.vertices[i]));
    os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"5\" fill=\"black\"/>";
    os << "<text x=\"" << num(x + 8) << "\" y=\"" << num(y - 8) << "\">" << i + 1 << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ncph
