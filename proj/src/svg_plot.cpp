#include <sstream>

#include "mukai_lab/walls.hpp"

namespace mukai_lab {

// Draw the (a, b) quadrant: the cone boundary b = 2a, the fiber direction
// (b-axis), and one ray per wall at slope 2 - y/x. Pure display output.
std::string walls_svg(const std::vector<WallClass>& walls, const Rat& k) {
  const int w = 480, h = 480, margin = 40;
  const double amax = 1.0;
  // Slopes range over [3, 2 + k/2]; scale b so the steepest ray stays visible.
  double bmax = 4.0;
  for (const WallClass& wc : walls) {
    double slope = 2.0 - wc.y.get_d() / wc.x.get_d();
    if (slope + 1.0 > bmax) bmax = slope + 1.0;
  }
  auto px = [&](double a) { return margin + a / amax * (w - 2 * margin); };
  auto py = [&](double b) { return h - margin - b / bmax * (h - 2 * margin); };
  auto clip_ray = [&](double slope, double& a_end, double& b_end) {
    // Ray b = slope * a from the origin, clipped to the plot box.
    if (slope * amax <= bmax) {
      a_end = amax;
      b_end = slope * amax;
    } else {
      a_end = bmax / slope;
      b_end = bmax;
    }
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
      << "\">\n";
  out << "  <rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  // Axes.
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(amax)
      << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0)
      << "\" y2=\"" << py(bmax) << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << px(amax) - 10 << "\" y=\"" << py(0) + 20
      << "\" font-size=\"12\">a</text>\n";
  out << "  <text x=\"" << px(0) - 20 << "\" y=\"" << py(bmax) + 10
      << "\" font-size=\"12\">b</text>\n";
  // Cone boundary b = 2a (dashed); the cone is everything above it.
  {
    double ae, be;
    clip_ray(2.0, ae, be);
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(ae) << "\" y2=\"" << py(be)
        << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
    out << "  <text x=\"" << px(ae) - 60 << "\" y=\"" << py(be) + 14
        << "\" font-size=\"11\" fill=\"gray\">b = 2a</text>\n";
  }
  for (const WallClass& wc : walls) {
    double slope = 2.0 - wc.y.get_d() / wc.x.get_d();
    double ae, be;
    clip_ray(slope, ae, be);
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\""
        << px(ae) << "\" y2=\"" << py(be) << "\" stroke=\"crimson\"/>\n";
    out << "  <text x=\"" << px(ae) + 2 << "\" y=\"" << py(be)
        << "\" font-size=\"10\" fill=\"crimson\">(" << wc.x << ","
        << wc.y << ")</text>\n";
  }
  out << "  <text x=\"" << margin << "\" y=\"" << margin - 16
      << "\" font-size=\"12\">k-walls meeting the ample cone, k = " << k
      << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace mukai_lab
