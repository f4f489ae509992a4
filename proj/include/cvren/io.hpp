#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvren/figures.hpp"
#include "cvren/report.hpp"

namespace cvren {

/// 12-significant-digit decimal formatting used by every CSV writer.
std::string format12(double v);

/// "x_label,label_1,...\n" then one row per x value.
void write_curve_csv(const CurveTable& table, std::ostream& out);

/// Long-format sweep CSV: one row per (sweep value, condition) with the
/// full report fields; non-applicable parameters stay empty.
void write_sweep_csv(const SweepResult& result, std::ostream& out);

/// Report rows without a sweep column (the `check` subcommand).
void write_reports_csv(const std::vector<CriterionReport>& reports,
                       std::ostream& out);

/// Minimal SVG line plot with linear axes. `clip_positive` drops
/// nonpositive samples, matching how the characteristic quantities are
/// usually displayed; the CSV always keeps them.
void write_curve_svg(const CurveTable& table, std::ostream& out,
                     bool clip_positive);

}  // namespace cvren
