#include "pfan/render.hpp"

#include <cmath>
#include <sstream>

#include "pfan/category.hpp"
#include "pfan/error.hpp"

namespace pfan {

namespace {

constexpr double kSize = 400.0;
constexpr double kCenter = kSize / 2;

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                          "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

std::string header() {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

std::array<double, 3> unit(const IntVector& v) {
  std::array<double, 3> u{};
  double len = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    u[k] = v[k].convert_to<double>();
    len += u[k] * u[k];
  }
  len = std::sqrt(len);
  for (auto& x : u) x /= len;
  return u;
}

double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

std::string render_fan_svg(const Fan& fan, const Partition* partition) {
  if (fan.dim() != 2) throw Error("NotRank2", "fan rendering needs a two-dimensional fan", fan.dim());
  const double r = kSize * 0.42;
  auto point = [&](const IntVector& v) {
    const double x = v[0].convert_to<double>(), y = v[1].convert_to<double>();
    const double len = std::hypot(x, y);
    return std::pair{kCenter + r * x / len, kCenter - r * y / len};
  };
  std::ostringstream os;
  os << header();
  for (ConeId c : fan.maximal()) {
    const auto rays = fan.cone_rays(c);
    auto [x0, y0] = point(rays[0]);
    auto [x1, y1] = point(rays[1]);
    const std::size_t colour = partition ? static_cast<std::size_t>(partition->block_of(c)) : 0;
    const bool ccw = (rays[0][0] * rays[1][1] - rays[0][1] * rays[1][0]) > 0;
    os << "<path d=\"M " << kCenter << " " << kCenter << " L " << x0 << " " << y0 << " A " << r << " " << r
       << " 0 0 " << (ccw ? 0 : 1) << " " << x1 << " " << y1 << " Z\" fill=\"" << kPalette[colour % 12]
       << "\" stroke=\"none\"/>\n";
  }
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    auto [x, y] = point(fan.rays()[i]);
    os << "<line x1=\"" << kCenter << "\" y1=\"" << kCenter << "\" x2=\"" << x << "\" y2=\"" << y
       << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"12\">" << to_string(fan.rays()[i]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_stereographic_svg(const Fan& fan, std::array<double, 3> point) {
  if (fan.dim() != 3) throw Error("DimensionMismatch", "stereographic rendering needs a three-dimensional fan", fan.dim());
  double len = std::sqrt(dot3(point, point));
  if (len == 0) throw Error("ZeroVector", "projection point is zero");
  for (auto& x : point) x /= len;
  // orthonormal frame of the plane orthogonal to the projection point
  std::array<double, 3> a = std::abs(point[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
  const double d = dot3(a, point);
  for (std::size_t k = 0; k < 3; ++k) a[k] -= d * point[k];
  const double la = std::sqrt(dot3(a, a));
  for (auto& x : a) x /= la;
  const std::array<double, 3> b = {point[1] * a[2] - point[2] * a[1], point[2] * a[0] - point[0] * a[2],
                                   point[0] * a[1] - point[1] * a[0]};
  const double scale = kSize / 10;
  auto project = [&](const std::array<double, 3>& x, double& px, double& py) {
    const double t = 1 - dot3(x, point);
    if (t < 1e-9) return false;
    px = kCenter + scale * dot3(x, a) / t;
    py = kCenter - scale * dot3(x, b) / t;
    return true;
  };
  std::ostringstream os;
  os << header();
  for (ConeId w : fan.cones_of_dim(2)) {
    const auto rays = fan.cone_rays(w);
    const auto u = unit(rays[0]), v = unit(rays[1]);
    os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (int s = 0; s <= 32; ++s) {
      const double t = s / 32.0;
      std::array<double, 3> x{};
      for (std::size_t k = 0; k < 3; ++k) x[k] = (1 - t) * u[k] + t * v[k];
      const double l = std::sqrt(dot3(x, x));
      for (auto& c : x) c /= l;
      double px, py;
      if (project(x, px, py)) os << px << "," << py << " ";
    }
    os << "\"/>\n";
  }
  for (const auto& r : fan.rays()) {
    double px, py;
    if (!project(unit(r), px, py)) continue;
    os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_cw_svg(const CWComplex& cw) {
  const double r = kSize * 0.35;
  const std::size_t n = cw.zero_cells.size();
  auto pos = [&](BlockId b) {
    std::size_t i = 0;
    while (i < n && cw.zero_cells[i] != b) ++i;
    const double angle = 2 * M_PI * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
    return std::pair{kCenter + r * std::cos(angle), kCenter - r * std::sin(angle)};
  };
  std::ostringstream os;
  os << header();
  for (std::size_t e = 0; e < cw.one_cells.size(); ++e) {
    const auto& c = cw.one_cells[e];
    auto [x0, y0] = pos(c.tail);
    auto [x1, y1] = pos(c.head);
    const double bend = 20.0 * static_cast<double>(e + 1);
    if (c.tail == c.head)
      os << "<path d=\"M " << x0 << " " << y0 << " c " << bend << " " << -bend << " " << bend << " " << bend << " 0 0\"";
    else
      os << "<path d=\"M " << x0 << " " << y0 << " Q " << (x0 + x1) / 2 + bend / 4 << " " << (y0 + y1) / 2 + bend / 4
         << " " << x1 << " " << y1 << "\"";
    os << " fill=\"none\" stroke=\"black\"/>\n";
  }
  for (BlockId b : cw.zero_cells) {
    auto [x, y] = pos(b);
    os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"black\"/>\n";
    os << "<text x=\"" << x + 6 << "\" y=\"" << y - 6 << "\" font-size=\"11\">"
       << block_label(*cw.fan, cw.partition, b) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace pfan
