#include <algorithm>
#include <cstdio>
#include <sstream>

#include "newtonpoly/serialize.hpp"

namespace newtonpoly {

namespace {

struct Frame {
  std::int64_t min_x = 0, max_x = 1, min_y = 0, max_y = 1;
};

std::vector<std::pair<std::int64_t, std::int64_t>> read_vertices(const Json& polygon) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  try {
    for (const Json& v : polygon.at("vertices")) out.emplace_back(v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>());
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polygon document: ") + ex.what());
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "polygon document has no vertices");
  return out;
}

Frame frame_of(const std::vector<std::pair<std::int64_t, std::int64_t>>& vs) {
  Frame f{vs.front().first, vs.front().first, vs.front().second, vs.front().second};
  for (const auto& [x, y] : vs) {
    f.min_x = std::min(f.min_x, x);
    f.max_x = std::max(f.max_x, x);
    f.min_y = std::min(f.min_y, y);
    f.max_y = std::max(f.max_y, y);
  }
  if (f.max_x == f.min_x) ++f.max_x;
  if (f.max_y == f.min_y) ++f.max_y;
  return f;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string slope_text(const Json& edge) {
  const auto num = edge.at("slope").at("num").get<std::int64_t>();
  const auto den = edge.at("slope").at("den").get<std::int64_t>();
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace

std::string render_svg(const Json& polygon) {
  const auto vs = read_vertices(polygon);
  const Frame fr = frame_of(vs);
  constexpr double kWidth = 480, kHeight = 320, kMargin = 40;
  auto sx = [&](std::int64_t x) {
    return kMargin + (kWidth - 2 * kMargin) * static_cast<double>(x - fr.min_x) / static_cast<double>(fr.max_x - fr.min_x);
  };
  auto sy = [&](std::int64_t y) {
    return kHeight - kMargin -
           (kHeight - 2 * kMargin) * static_cast<double>(y - fr.min_y) / static_cast<double>(fr.max_y - fr.min_y);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (polygon.contains("prime") && !polygon["prime"].is_null()) {
    out << "  <text x=\"" << kMargin << "\" y=\"20\" font-family=\"monospace\" font-size=\"12\">NP_"
        << polygon["prime"].get<std::uint64_t>() << "</text>\n";
  }
  out << "  <line x1=\"" << fixed(sx(fr.min_x)) << "\" y1=\"" << fixed(sy(fr.min_y)) << "\" x2=\"" << fixed(sx(fr.max_x))
      << "\" y2=\"" << fixed(sy(fr.min_y)) << "\" stroke=\"#999\"/>\n";
  out << "  <line x1=\"" << fixed(sx(fr.min_x)) << "\" y1=\"" << fixed(sy(fr.min_y)) << "\" x2=\"" << fixed(sx(fr.min_x))
      << "\" y2=\"" << fixed(sy(fr.max_y)) << "\" stroke=\"#999\"/>\n";
  out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << fixed(sx(vs[i].first)) << ',' << fixed(sy(vs[i].second));
  out << "\"/>\n";
  for (const auto& [x, y] : vs) {
    out << "  <circle cx=\"" << fixed(sx(x)) << "\" cy=\"" << fixed(sy(y)) << "\" r=\"3\"/>\n";
    out << "  <text x=\"" << fixed(sx(x) + 4) << "\" y=\"" << fixed(sy(y) - 6)
        << "\" font-family=\"monospace\" font-size=\"11\">(" << x << ',' << y << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const Json& polygon) {
  const auto vs = read_vertices(polygon);
  std::ostringstream out;
  if (polygon.contains("prime") && !polygon["prime"].is_null()) out << "prime: " << polygon["prime"].get<std::uint64_t>() << '\n';
  out << "vertices:";
  for (const auto& [x, y] : vs) out << " (" << x << ',' << y << ')';
  out << '\n';
  if (polygon.contains("edges")) {
    for (const Json& e : polygon["edges"]) {
      out << "  slope " << slope_text(e) << "  length " << e.at("length").get<std::int64_t>() << "  lattice points "
          << e.at("lattice_points").get<std::int64_t>() << '\n';
    }
  }
  // Character plot for small polygons, highest row first.
  const Frame fr = frame_of(vs);
  if (fr.max_x - fr.min_x <= 72 && fr.max_y - fr.min_y <= 24) {
    const auto cols = static_cast<std::size_t>(fr.max_x - fr.min_x + 1);
    std::vector<std::string> rows(static_cast<std::size_t>(fr.max_y - fr.min_y + 1), std::string(cols, '.'));
    auto put = [&](std::int64_t x, std::int64_t y, char c) {
      rows[static_cast<std::size_t>(fr.max_y - y)][static_cast<std::size_t>(x - fr.min_x)] = c;
    };
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      const auto [x0, y0] = vs[i];
      const auto [x1, y1] = vs[i + 1];
      for (std::int64_t x = x0 + 1; x < x1; ++x) {
        if (((y1 - y0) * (x - x0)) % (x1 - x0) == 0) put(x, y0 + (y1 - y0) * (x - x0) / (x1 - x0), '*');
      }
    }
    for (const auto& [x, y] : vs) put(x, y, 'o');
    for (const std::string& row : rows) out << "  " << row << '\n';
  }
  return out.str();
}

}  // namespace newtonpoly
