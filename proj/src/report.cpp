#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "vpfair/errors.hpp"
#include "vpfair/experiment.hpp"

namespace vpfair {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void write_file(const std::filesystem::path& destination, const std::string& content) {
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + destination.string() + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + destination.string() + "'");
}

// Plot geometry, in SVG user units.
constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 150, kTop = 40, kBottom = 60;
constexpr double kPlotW = kWidth - kLeft - kRight, kPlotH = kHeight - kTop - kBottom;
constexpr std::array<const char*, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

void sort_results(std::vector<CellResult>& results) {
  std::stable_sort(results.begin(), results.end(), [](const CellResult& a, const CellResult& b) {
    return std::tie(a.metric, a.set, a.alpha) < std::tie(b.metric, b.set, b.alpha);
  });
}

void write_csv(std::vector<CellResult> results, std::ostream& out) {
  if (results.empty()) throw ArgumentError("write_csv: no results to write");
  sort_results(results);
  out << "set,alpha,metric,mean,std,n\n";
  for (const auto& r : results) {
    out << r.set << ',' << fixed6(r.alpha) << ',' << to_string(r.metric) << ',' << fixed6(r.mean) << ','
        << fixed6(r.stddev) << ',' << r.n << '\n';
  }
}

void emit_csv(const std::vector<CellResult>& results, const std::filesystem::path& destination) {
  std::ostringstream buffer;
  write_csv(results, buffer);
  write_file(destination, buffer.str());
}

std::string render_plot(const std::vector<CellResult>& results, MetricId metric, const std::string& title) {
  std::map<std::string, std::vector<std::pair<double, double>>> curves;
  for (const auto& r : results) {
    if (r.metric == metric) curves[r.set].emplace_back(r.alpha, r.mean);
  }
  if (curves.empty()) {
    throw ArgumentError("render_plot: no results for metric " + std::string(to_string(metric)));
  }

  const auto x_of = [](double alpha) { return kLeft + (alpha + 1.0) / 2.0 * kPlotW; };
  const auto y_of = [](double value) { return kTop + (1.0 - value) * kPlotH; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<title>" << xml_escape(title.empty() ? std::string(to_string(metric)) : title) << "</title>\n"
      << "<defs><clipPath id=\"plot-area\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW
      << "\" height=\"" << kPlotH << "\"/></clipPath></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes and ticks
  svg << "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << kPlotW << "\" height=\"" << kPlotH << "\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double alpha = -1.0 + 0.5 * t;
    svg << "<line x1=\"" << fixed2(x_of(alpha)) << "\" y1=\"" << kTop + kPlotH << "\" x2=\"" << fixed2(x_of(alpha))
        << "\" y2=\"" << kTop + kPlotH + 5 << "\"/>\n";
  }
  for (int t = 0; t <= 5; ++t) {
    const double v = 0.2 * t;
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fixed2(y_of(v)) << "\" x2=\"" << kLeft << "\" y2=\""
        << fixed2(y_of(v)) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"tick-labels\">\n";
  for (int t = 0; t <= 4; ++t) {
    const double alpha = -1.0 + 0.5 * t;
    svg << "<text x=\"" << fixed2(x_of(alpha)) << "\" y=\"" << kTop + kPlotH + 20 << "\" text-anchor=\"middle\">"
        << fixed2(alpha) << "</text>\n";
  }
  for (int t = 0; t <= 5; ++t) {
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fixed2(y_of(0.2 * t) + 4) << "\" text-anchor=\"end\">"
        << fixed2(0.2 * t) << "</text>\n";
  }
  svg << "</g>\n"
      << "<text class=\"x-label\" x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">alpha (ranking bias)</text>\n"
      << "<text class=\"y-label\" transform=\"translate(20," << kTop + kPlotH / 2
      << ") rotate(-90)\" text-anchor=\"middle\">mean " << to_string(metric) << "</text>\n";
  if (!title.empty()) {
    svg << "<text class=\"title\" x=\"" << kLeft + kPlotW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
        << xml_escape(title) << "</text>\n";
  }

  // one polyline per set, in set-name order
  svg << "<g class=\"curves\" clip-path=\"url(#plot-area)\" fill=\"none\" stroke-width=\"2\">\n";
  std::size_t colour = 0;
  for (auto& [name, points] : curves) {
    std::sort(points.begin(), points.end());
    svg << "<polyline data-set=\"" << xml_escape(name) << "\" stroke=\"" << kPalette[colour++ % kPalette.size()]
        << "\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      svg << (i ? " " : "") << fixed2(x_of(points[i].first)) << ',' << fixed2(y_of(points[i].second));
    }
    svg << "\"/>\n";
  }
  svg << "</g>\n<g class=\"legend\">\n";
  colour = 0;
  double legend_y = kTop + 10;
  for (const auto& entry : curves) {
    const double lx = kLeft + kPlotW + 15;
    svg << "<line x1=\"" << lx << "\" y1=\"" << legend_y << "\" x2=\"" << lx + 25 << "\" y2=\"" << legend_y
        << "\" stroke=\"" << kPalette[colour++ % kPalette.size()] << "\" stroke-width=\"2\"/>"
        << "<text x=\"" << lx + 32 << "\" y=\"" << legend_y + 4 << "\">" << xml_escape(entry.first) << "</text>\n";
    legend_y += 20;
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

void emit_plot(const std::vector<CellResult>& results, MetricId metric, const std::filesystem::path& destination,
               const std::string& title) {
  write_file(destination, render_plot(results, metric, title));
}

}  // namespace vpfair
