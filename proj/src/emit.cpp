#include "delsarte/emit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace delsarte {

namespace {

std::string format_value(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

void require_matching_grids(const std::vector<BoundCurve>& curves) {
  if (curves.empty()) throw DomainError("emit: no curves");
  for (const auto& curve : curves) {
    if (curve.samples.empty()) throw DomainError("emit: empty curve");
    if (curve.samples.size() != curves[0].samples.size())
      throw DomainError("emit: curves have mismatched grid sizes");
    for (size_t i = 0; i < curve.samples.size(); ++i)
      if (curve.samples[i].first != curves[0].samples[i].first)
        throw DomainError("emit: curves have mismatched grids at row " + std::to_string(i));
  }
}

}  // namespace

std::string emit_csv(const std::vector<BoundCurve>& curves) {
  require_matching_grids(curves);
  std::ostringstream out;
  out << "delta";
  for (const auto& curve : curves) out << ',' << rate_bound_name(curve.bound.id);
  out << '\n';
  for (size_t row = 0; row < curves[0].samples.size(); ++row) {
    out << format_value(curves[0].samples[row].first);
    for (const auto& curve : curves) out << ',' << format_value(curve.samples[row].second);
    out << '\n';
  }
  return out.str();
}

std::string emit_svg(const std::vector<BoundCurve>& curves) {
  require_matching_grids(curves);
  const double width = 800, height = 600;
  const double margin_left = 70, margin_right = 30, margin_top = 30, margin_bottom = 50;
  const double plot_w = width - margin_left - margin_right;
  const double plot_h = height - margin_top - margin_bottom;
  const double x_min = curves[0].samples.front().first;
  const double x_max = curves[0].samples.back().first;
  const double y_min = 0.0, y_max = 1.05;
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  const int palette_size = 8;

  auto sx = [&](double x) {
    return margin_left + (x - x_min) / (x_max - x_min) * plot_w;
  };
  auto sy = [&](double y) {
    return margin_top + (y_max - y) / (y_max - y_min) * plot_h;
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << sx(x_min) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(x_max)
      << "\" y2=\"" << sy(0) << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << sx(x_min) << "\" y1=\"" << sy(y_min) << "\" x2=\"" << sx(x_min)
      << "\" y2=\"" << sy(y_max) << "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 10; ++tick) {
    double xv = x_min + (x_max - x_min) * tick / 10.0;
    double yv = tick / 10.0;
    out << "<line x1=\"" << sx(xv) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(xv) << "\" y2=\""
        << sy(0) + 5 << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << sx(xv) << "\" y=\"" << sy(0) + 20
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_value(xv) << "</text>\n";
    if (yv <= y_max) {
      out << "<line x1=\"" << sx(x_min) - 5 << "\" y1=\"" << sy(yv) << "\" x2=\"" << sx(x_min)
          << "\" y2=\"" << sy(yv) << "\" stroke=\"black\"/>\n";
      out << "<text x=\"" << sx(x_min) - 8 << "\" y=\"" << sy(yv) + 4
          << "\" font-size=\"11\" text-anchor=\"end\">" << format_value(yv) << "</text>\n";
    }
  }
  for (size_t c = 0; c < curves.size(); ++c) {
    out << "<polyline fill=\"none\" stroke=\"" << palette[c % palette_size]
        << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : curves[c].samples) {
      double clipped = std::min(std::max(y, y_min), y_max);
      out << sx(x) << ',' << sy(clipped) << ' ';
    }
    out << "\"/>\n";
  }
  for (size_t c = 0; c < curves.size(); ++c) {
    double ly = margin_top + 16.0 * (c + 1);
    out << "<line x1=\"" << width - margin_right - 120 << "\" y1=\"" << ly << "\" x2=\""
        << width - margin_right - 95 << "\" y2=\"" << ly << "\" stroke=\""
        << palette[c % palette_size] << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << width - margin_right - 90 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\">" << rate_bound_name(curves[c].bound.id) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace delsarte
