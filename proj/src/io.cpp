#include "cvren/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace cvren {

std::string format12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string field_or_empty(double v) {
  return std::isnan(v) ? std::string{} : format12(v);
}

void write_report_row(std::ostream& out, const CriterionReport& r) {
  out << to_string(r.condition) << ',' << r.params.n << ','
      << field_or_empty(r.params.t) << ',' << field_or_empty(r.params.a) << ','
      << field_or_empty(r.params.b) << ',' << field_or_empty(r.params.eta)
      << ',' << field_or_empty(r.params.delta_zeta) << ','
      << field_or_empty(r.params.delta_xi) << ',' << (r.params.swapped ? 1 : 0)
      << ',' << format12(r.lhs) << ',' << format12(r.rhs) << ','
      << format12(r.margin) << ',' << (r.violated ? 1 : 0) << '\n';
}

constexpr const char* kReportHeader =
    "condition,n,t,a,b,eta,delta_zeta,delta_xi,swapped,lhs,rhs,margin,violated";

}  // namespace

void write_curve_csv(const CurveTable& table, std::ostream& out) {
  out << table.x_label;
  for (const auto& label : table.labels) out << ',' << label;
  out << '\n';
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    out << format12(table.x[i]);
    for (const auto& column : table.columns) out << ',' << format12(column[i]);
    out << '\n';
  }
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << result.variable << ',' << kReportHeader << '\n';
  for (std::size_t i = 0; i < result.values.size(); ++i) {
    for (const auto& report : result.reports[i]) {
      out << format12(result.values[i]) << ',';
      write_report_row(out, report);
    }
  }
}

void write_reports_csv(const std::vector<CriterionReport>& reports,
                       std::ostream& out) {
  out << kReportHeader << '\n';
  for (const auto& report : reports) write_report_row(out, report);
}

void write_curve_svg(const CurveTable& table, std::ostream& out,
                     bool clip_positive) {
  const int width = 640, height = 440;
  const double left = 64, right = 612, top = 24, bottom = 396;
  double x_min = table.x.front(), x_max = table.x.back();
  double y_min = 0.0, y_max = 0.0;
  bool have_y = false;
  for (const auto& column : table.columns) {
    for (double v : column) {
      if (clip_positive && v <= 0.0) continue;
      if (!have_y) {
        y_min = y_max = v;
        have_y = true;
      } else {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
      }
    }
  }
  if (!have_y) {
    y_min = 0.0;
    y_max = 1.0;
  }
  if (clip_positive) y_min = std::min(y_min, 0.0);
  if (y_max <= y_min) y_max = y_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  y_max += pad;
  if (!clip_positive) y_min -= pad;

  auto sx = [&](double x) {
    return left + (x - x_min) / (x_max - x_min) * (right - left);
  };
  auto sy = [&](double y) {
    return bottom - (y - y_min) / (y_max - y_min) * (bottom - top);
  };
  static const char* const colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                       "#9467bd", "#ff7f0e", "#8c564b"};
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  // Axes.
  out << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%.4g</text>\n",
                left - 4.0, bottom + 16.0, x_min);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%.4g</text>\n",
                right - 16.0, bottom + 16.0, x_max);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%.4g</text>\n", 8.0,
                bottom + 4.0, y_min);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%.4g</text>\n", 8.0,
                top + 4.0, y_max);
  out << buf;
  if (y_min < 0.0 && y_max > 0.0) {
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" "
                  "stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n",
                  left, sy(0.0), right, sy(0.0));
    out << buf;
  }
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\">%s</text>\n",
                0.5 * (left + right), bottom + 32.0, table.x_label.c_str());
  out << buf;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    const char* color = colors[c % 6];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool in_segment = false;
    for (std::size_t i = 0; i < table.x.size(); ++i) {
      const double v = table.columns[c][i];
      if (clip_positive && v <= 0.0) {
        if (in_segment) {
          out << "\"/>\n<polyline fill=\"none\" stroke=\"" << color
              << "\" stroke-width=\"1.5\" points=\"";
          in_segment = false;
        }
        continue;
      }
      std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", sx(table.x[i]), sy(v));
      out << buf;
      in_segment = true;
    }
    out << "\"/>\n";
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" "
                  "fill=\"%s\">%s</text>\n",
                  right - 48.0, top + 16.0 * (c + 1), color,
                  table.labels[c].c_str());
    out << buf;
  }
  out << "</svg>\n";
}

}  // namespace cvren
