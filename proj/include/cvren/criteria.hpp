#pragma once

#include <functional>

#include "cvren/binning.hpp"
#include "cvren/report.hpp"
#include "cvren/states.hpp"

namespace cvren {

/// Two-Renyi-entropy separability condition
///   H_a(W) + H_b(U) >= ln(n K(t) pi),  1/a = 1 - t, 1/b = 1 + t;
/// `swapped` exchanges the roles of W and U (the twin condition).
CriterionReport check_prop1(const MarginalPair& pair, int n, double t,
                            bool swapped = false);

/// Shannon special case t = 0 with bound ln(n e pi), reported under its own
/// condition id.
CriterionReport check_shannon_diff(const MarginalPair& pair, int n);

/// Histogram / binned reformulations. With use_histogram the entropies of
/// the piecewise-constant reconstructions are compared against ln(n K pi);
/// otherwise the discrete entropies are compared against
/// ln(n K pi / (dzeta dxi)).
CriterionReport check_prop2(const MarginalPair& pair, const BinGrid& r_grid,
                            const BinGrid& s_grid, int n, double t,
                            bool use_histogram, bool swapped = false);

/// Tsallis form T_a(p) + T_b(q) >= ln_a(n K pi / (dzeta dxi)).
CriterionReport check_tsallis(const BinnedDistribution& p,
                              const BinnedDistribution& q, int n, double t,
                              bool swapped = false);

/// Shannon condition for eta-distorted distributions:
///   H_1(p_eta) + H_1(q_eta) >= eta ln(n e pi / (dzeta dxi)) + 2 h_1(eta).
CriterionReport check_inefficiency(const BinnedDistribution& p,
                                   const BinnedDistribution& q, int n,
                                   double eta);

/// Pure-state condition
///   H_a(W) >= (1/t) ln(C(a)/C(alpha)^n) + (1/n) sum_l H_alpha(w_l)
/// with 1/a = 1 - t, tau = t/n, 1/alpha = 1 - tau; the constant tends to
/// (ln n)/2 as a -> 1. Local entropies use the position-side densities w_l.
CriterionReport check_pure(const StateSpec& state, const QuadratureConfig& config,
                           double a, int n);

/// (1/t) ln(C(a)/C(alpha)^n) with the analytic a -> 1 limit (ln n)/2.
double pure_state_constant(int n, double t);

/// Evaluates the two-entropy condition and its twin over the default order
/// scan t in {0, 0.1, ..., 0.9, 1} and returns the report with the smallest
/// margin; a negative margin certifies that the state is not n-separable.
CriterionReport best_violation_scan(const MarginalPair& pair, int n);

/// Characteristic quantity of the cat-state family under the standard
/// (alternating-R, all-plus-S) configuration:
///   Q_a(z) = ln(n K pi) - H_a(U) - H_b(W),  t = 1 - 1/a.
/// Positive values certify entanglement. The z member of `family` is
/// ignored; z is the returned function's argument.
std::function<double(double)> q_characteristic(const DephasedCat& family, double a);

/// Characteristic quantity of the antisymmetric pure family under the
/// all-plus configuration at t = 0:
///   A(z) = (ln n)/2 + (1/n) sum_l H_1(w_l) - H_1(W).
std::function<double(double)> a_characteristic(const AntisymCatPure& family);

}  // namespace cvren
