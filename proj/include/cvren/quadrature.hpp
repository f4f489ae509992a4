#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <stdexcept>
#include <vector>

namespace cvren {

struct QuadratureOptions {
  double rel_tol = 1e-11;
  double abs_tol = 1e-14;
  int max_intervals = 40000;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
inline constexpr double kGkNodes[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397,
    0.586087235467691, 0.741531185599394, 0.864864423359769,
    0.949107912342759, 0.991455371120813};
inline constexpr double kGaussWeights[8] = {
    0.417959183673469, 0.0,               0.381830050505119,
    0.0,               0.279705391489277, 0.0,
    0.129484966168870, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785,
    0.169004726639267, 0.140653259715525, 0.104790010322250,
    0.063092092629979, 0.022935322010529};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double gauss = kGaussWeights[0] * f0;
  double kronrod = kKronrodWeights[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGkNodes[i];
    const double fi = f(mid + dx) + f(mid - dx);
    gauss += kGaussWeights[i] * fi;
    kronrod += kKronrodWeights[i] * fi;
  }
  gauss *= half;
  kronrod *= half;
  value = kronrod;
  const double diff = std::abs(kronrod - gauss);
  error = diff * std::sqrt(diff) * 200.0;
  if (!(error < std::abs(kronrod))) error = std::abs(kronrod - gauss);
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& other) const { return error < other.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over the panels delimited by
/// `breakpoints` (ascending). Each panel is estimated once, then the panel
/// with the largest local error is bisected until the accumulated error
/// drops below max(abs_tol, rel_tol * |integral|). Supplying breakpoints
/// that resolve narrow peaks or oscillations keeps the initial pass from
/// aliasing structure away.
template <class F>
double integrate_panels(const F& f, const std::vector<double>& breakpoints,
                        const QuadratureOptions& opt = {}) {
  if (breakpoints.size() < 2) return 0.0;
  std::priority_queue<detail::Interval> heap;
  double total_value = 0.0;
  double total_error = 0.0;
  int count = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(b > a)) continue;
    double value, error;
    detail::gk15(f, a, b, value, error);
    heap.push({a, b, value, error});
    total_value += value;
    total_error += error;
    ++count;
  }
  while (total_error > std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value))) {
    if (count >= opt.max_intervals)
      throw std::runtime_error("integrate: interval budget exhausted");
    const detail::Interval worst = heap.top();
    heap.pop();
    total_value -= worst.value;
    total_error -= worst.error;
    if (total_error < 0.0) total_error = 0.0;
    const double mid = 0.5 * (worst.a + worst.b);
    double lv, le, rv, re;
    detail::gk15(f, worst.a, mid, lv, le);
    detail::gk15(f, mid, worst.b, rv, re);
    heap.push({worst.a, mid, lv, le});
    heap.push({mid, worst.b, rv, re});
    total_value += lv + rv;
    total_error += le + re;
    ++count;
  }
  return total_value;
}

/// Adaptive integration of f over [a, b] with a modest uniform pre-split.
template <class F>
double integrate(const F& f, double a, double b,
                 const QuadratureOptions& opt = {}, int initial_panels = 16) {
  if (!(b > a)) return 0.0;
  if (initial_panels < 1) initial_panels = 1;
  std::vector<double> pts(static_cast<std::size_t>(initial_panels) + 1);
  for (int i = 0; i <= initial_panels; ++i)
    pts[static_cast<std::size_t>(i)] = a + (b - a) * i / initial_panels;
  return integrate_panels(f, pts, opt);
}

}  // namespace cvren
