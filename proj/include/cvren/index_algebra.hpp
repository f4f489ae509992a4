#pragma once

#include <stdexcept>

namespace cvren {

/// Extended entropic index: a finite real value or a dedicated infinity
/// marker. The marker is kept separate from IEEE infinity so conjugate
/// bookkeeping stays exact (1/inf is exactly 0, no rounding ambiguity).
class Index {
 public:
  Index(double value) : value_(value), infinite_(false) {}

  static Index infinity() { return Index(); }

  bool is_infinity() const { return infinite_; }

  double value() const {
    if (infinite_) throw std::logic_error("Index: value() on infinity marker");
    return value_;
  }

  /// 1/x, defined for the marker as exactly 0.
  double reciprocal() const { return infinite_ ? 0.0 : 1.0 / value_; }

  friend bool operator==(const Index& lhs, const Index& rhs) {
    if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
    return lhs.value_ == rhs.value_;
  }

 private:
  Index() : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

/// Conjugate exponent x' with 1/x + 1/x' = 1. x = 1 maps to the infinity
/// marker; x in (0,1) gives a strictly negative conjugate.
Index conjugate_index(double x);

/// Involution-friendly variant accepting the marker (conjugate of infinity
/// is 1).
Index conjugate_index(const Index& x);

/// Index pair (a, b) attached to the order parameter t in [0,1]:
/// 1/a = 1 - t, 1/b = 1 + t. At t = 1, a is the infinity marker and b = 1/2.
struct EntropicIndexPair {
  double t;
  Index a;
  double b;

  static EntropicIndexPair from_order(double t);
};

/// Per-subsystem indices for an n-partite split: tau = t/n,
/// 1/alpha = 1 - tau, 1/beta = 1 + tau, with conjugates 1/alpha' = tau and
/// 1/beta' = -tau.
struct SubsystemIndexSet {
  int n;
  double tau;
  double alpha;
  double beta;
  Index alpha_conj;
  Index beta_conj;

  static SubsystemIndexSet from_order(int n, double t);
};

/// Sharp Fourier-pair constant kappa(tau) on [0,1]:
/// ln kappa = [(1+tau)ln(1+tau) - (1-tau)ln(1-tau)] / (2 tau),
/// continued analytically to kappa(0) = e; kappa(1) = 2.
double kappa(double tau);

/// Criterion constant K(t); same closed form as kappa, strictly decreasing
/// from K(0) = e to K(1) = 2.
double big_k(double t);

/// ln of the sharp convolution factor C(x) for conjugate pair (x, x'),
/// valid for negative conjugates via absolute values:
/// 2 ln C = (1/x') ln(1/|x'|) - (1/x) ln(1/|x|).
double log_young_c(double x, const Index& x_conj);

/// C(x) computed through the log form above.
double young_c(double x, const Index& x_conj);
double young_c(double x);  // conjugate derived internally

/// C(x) computed literally through the product form
/// C^2 = |x|^{1/x} |x'|^{-1/x'}; kept as an independent route for
/// cross-checking against young_c.
double young_c_product_form(double x, const Index& x_conj);

/// Right-hand side ln(n K(t) pi) of the two-entropy separability bound.
double criterion_bound(int n, double t);

/// Residual of the constant-stack identity
/// (1/t) ln[C(a) C(beta)^n / (C(alpha)^n C(b))] + ln(kappa(t/n) pi)
///   - ln(n K(t) pi),
/// which must vanish for every n >= 2 and t in (0,1).
double constant_identity_residual(int n, double t);

}  // namespace cvren
