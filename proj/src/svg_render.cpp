#include "mysticum/svg_render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace mysticum {

namespace {

constexpr double kCx = 500, kCy = 500, kR = 400;

struct XY {
  double x, y;
};

// chart (q0 : q1 : q2) -> ((q0-q2)/(q0+q2), -q1/(q0+q2)); the conic becomes
// the unit circle and conic point z lands on the stereographic image of z
XY chart(const BinaryForm<Rational>& q) {
  double q0 = q.coeff(0).to_double(), q1 = q.coeff(1).to_double(), q2 = q.coeff(2).to_double();
  double den = q0 + q2;
  require(std::abs(den) > 1e-12, "render: element on the chart horizon");
  return {(q0 - q2) / den, -q1 / den};
}

XY to_canvas(const XY& p) { return {kCx + kR * p.x, kCy - kR * p.y}; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void line_into_box(const XY& a, const XY& b, std::ostringstream& os, const char* style) {
  // clip the infinite line through a, b to the 1000 x 1000 box
  double dx = b.x - a.x, dy = b.y - a.y;
  std::vector<XY> hits;
  auto push = [&](double t) {
    XY p{a.x + t * dx, a.y + t * dy};
    const double eps = 1e-7;
    if (p.x >= -eps && p.x <= 1000 + eps && p.y >= -eps && p.y <= 1000 + eps) {
      for (const auto& h : hits)
        if (std::abs(h.x - p.x) + std::abs(h.y - p.y) < 1e-6) return;
      hits.push_back(p);
    }
  };
  if (std::abs(dx) > 1e-12) {
    push((0 - a.x) / dx);
    push((1000 - a.x) / dx);
  }
  if (std::abs(dy) > 1e-12) {
    push((0 - a.y) / dy);
    push((1000 - a.y) / dy);
  }
  if (hits.size() >= 2)
    os << "<line x1=\"" << num(hits[0].x) << "\" y1=\"" << num(hits[0].y) << "\" x2=\""
       << num(hits[1].x) << "\" y2=\"" << num(hits[1].y) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_sextuple_svg(const std::array<P1Point<Rational>, 6>& points) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" "
        "width=\"1000\" height=\"1000\">\n";
  os << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  os << "<circle cx=\"" << num(kCx) << "\" cy=\"" << num(kCy) << "\" r=\"" << num(kR)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  Sextuple<Rational> s(points);
  std::vector<Hexad<Rational>> aligns = find_alignments(s);

  std::array<XY, 6> canvas;
  for (int i = 0; i < 6; ++i) canvas[i] = to_canvas(chart(conic_point(points[i]).form));

  if (!aligns.empty()) {
    const Hexad<Rational>& h = aligns.front();  // deterministic: enumeration order
    // chord families through the three collinear centers
    const int fam[3][3][2] = {{{0, 4}, {2, 3}, {1, 5}},   // Q4: AE, CD, BF
                              {{0, 5}, {2, 4}, {1, 3}},   // Q5: AF, CE, BD
                              {{0, 3}, {1, 4}, {2, 5}}};  // Q6: AD, BE, CF
    const char* colors[3] = {"#c0392b", "#2980b9", "#27ae60"};
    std::array<XY, 3> qxy{};
    std::array<BinaryForm<Rational>, 3> qforms;
    for (int k = 0; k < 3; ++k) {
      std::array<PlaneElement<Rational>, 3> chords = {
          chord(h.pts[fam[k][0][0]], h.pts[fam[k][0][1]]),
          chord(h.pts[fam[k][1][0]], h.pts[fam[k][1][1]]),
          chord(h.pts[fam[k][2][0]], h.pts[fam[k][2][1]])};
      PlaneElement<Rational> q = join_or_meet(chords[0], chords[1]);
      check_theorem(incident(q, chords[2]), "render: involution chords not concurrent");
      qforms[k] = q.form;
      qxy[k] = to_canvas(chart(q.form));
      for (int c = 0; c < 3; ++c) {
        XY p1 = to_canvas(chart(conic_point(h.pts[fam[k][c][0]]).form));
        XY p2 = to_canvas(chart(conic_point(h.pts[fam[k][c][1]]).form));
        os << "<line x1=\"" << num(p1.x) << "\" y1=\"" << num(p1.y) << "\" x2=\"" << num(p2.x)
           << "\" y2=\"" << num(p2.y) << "\" stroke=\"" << colors[k]
           << "\" stroke-width=\"1.5\"/>\n";
      }
    }
    // the line through the three centers
    BinaryForm<Rational> axis = transvectant(qforms[0], qforms[1], 1);
    check_theorem(transvectant(axis, qforms[2], 2).is_zero(),
                  "render: involution centers not collinear");
    line_into_box(qxy[0], qxy[1], os,
                  "stroke=\"#8e44ad\" stroke-width=\"1.5\" stroke-dasharray=\"7 4\"");
    for (int k = 0; k < 3; ++k) {
      os << "<circle cx=\"" << num(qxy[k].x) << "\" cy=\"" << num(qxy[k].y)
         << "\" r=\"5\" fill=\"" << colors[k] << "\"/>\n";
      os << "<text x=\"" << num(qxy[k].x + 9) << "\" y=\"" << num(qxy[k].y - 9)
         << "\" font-size=\"22\" fill=\"" << colors[k] << "\">Q" << (k + 4) << "</text>\n";
    }
  }

  // labeled conic points, labels pushed along the outward normal
  const char* names = "ABCDEF";
  for (int i = 0; i < 6; ++i) {
    os << "<circle cx=\"" << num(canvas[i].x) << "\" cy=\"" << num(canvas[i].y)
       << "\" r=\"6\" fill=\"black\"/>\n";
    double nx = (canvas[i].x - kCx) / kR, ny = (canvas[i].y - kCy) / kR;
    os << "<text x=\"" << num(canvas[i].x + 24 * nx - 7) << "\" y=\""
       << num(canvas[i].y + 24 * ny + 7) << "\" font-size=\"26\">" << names[i] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mysticum
