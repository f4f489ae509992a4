#pragma once

#include <limits>
#include <string>
#include <string_view>

namespace cvren {

enum class ConditionId {
  Prop1,
  Prop1Twin,
  Prop2Hist,
  Prop2Binned,
  Prop2BinnedTwin,
  TsallisBinned,
  TsallisBinnedTwin,
  ShannonDiff,
  InefficiencyShannon,
  PureState,
  HausdorffYoung,
};

std::string_view to_string(ConditionId id);
ConditionId condition_from_string(std::string_view name);

/// Parameters attached to an evaluated condition; NaN / defaults mean
/// "not applicable".
struct CriterionParams {
  int n = 0;
  double t = std::numeric_limits<double>::quiet_NaN();
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double eta = std::numeric_limits<double>::quiet_NaN();
  double delta_zeta = std::numeric_limits<double>::quiet_NaN();
  double delta_xi = std::numeric_limits<double>::quiet_NaN();
  bool swapped = false;
  int hermite_index = -1;
};

/// One evaluated condition. All conditions are stored in the
/// "lhs >= rhs when separable" orientation, so margin = lhs - rhs and a
/// negative margin flags a violation (entanglement certified for the
/// separability conditions, a numerical failure for self-checks).
struct CriterionReport {
  ConditionId condition;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool violated = false;
  CriterionParams params;

  static CriterionReport make(ConditionId id, double lhs, double rhs,
                              CriterionParams params);

  /// One-line structured text record: id, params, lhs, rhs, margin, violated.
  std::string line() const;
};

}  // namespace cvren
