#include "cvren/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace cvren {

std::string_view to_string(ConditionId id) {
  switch (id) {
    case ConditionId::Prop1: return "Prop1";
    case ConditionId::Prop1Twin: return "Prop1Twin";
    case ConditionId::Prop2Hist: return "Prop2Hist";
    case ConditionId::Prop2Binned: return "Prop2Binned";
    case ConditionId::Prop2BinnedTwin: return "Prop2BinnedTwin";
    case ConditionId::TsallisBinned: return "TsallisBinned";
    case ConditionId::TsallisBinnedTwin: return "TsallisBinnedTwin";
    case ConditionId::ShannonDiff: return "ShannonDiff";
    case ConditionId::InefficiencyShannon: return "InefficiencyShannon";
    case ConditionId::PureState: return "PureState";
    case ConditionId::HausdorffYoung: return "HausdorffYoung";
  }
  return "Unknown";
}

ConditionId condition_from_string(std::string_view name) {
  for (ConditionId id :
       {ConditionId::Prop1, ConditionId::Prop1Twin, ConditionId::Prop2Hist,
        ConditionId::Prop2Binned, ConditionId::Prop2BinnedTwin,
        ConditionId::TsallisBinned, ConditionId::TsallisBinnedTwin,
        ConditionId::ShannonDiff, ConditionId::InefficiencyShannon,
        ConditionId::PureState, ConditionId::HausdorffYoung}) {
    if (to_string(id) == name) return id;
  }
  throw std::invalid_argument("unknown condition id: " + std::string(name));
}

CriterionReport CriterionReport::make(ConditionId id, double lhs, double rhs,
                                      CriterionParams params) {
  CriterionReport r;
  r.condition = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.violated = r.margin < 0.0;
  r.params = params;
  if (!std::isfinite(r.margin))
    throw std::runtime_error("CriterionReport: non-finite margin");
  return r;
}

std::string CriterionReport::line() const {
  char buf[320];
  auto field = [](double v) { return std::isnan(v) ? 0.0 : v; };
  std::snprintf(buf, sizeof(buf),
                "%s n=%d t=%.6g a=%.6g b=%.6g eta=%.6g dzeta=%.6g dxi=%.6g "
                "swapped=%d lhs=%.12g rhs=%.12g margin=%.12g violated=%d",
                std::string(to_string(condition)).c_str(), params.n,
                field(params.t), field(params.a), field(params.b),
                field(params.eta), field(params.delta_zeta),
                field(params.delta_xi), params.swapped ? 1 : 0, lhs, rhs,
                margin, violated ? 1 : 0);
  return buf;
}

}  // namespace cvren
