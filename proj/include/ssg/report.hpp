#pragma once

#include <string>

#include <json.hpp>

#include "ssg/analysis.hpp"

namespace ssg {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

json to_json(const Coloring& c);
json to_json(const PsiValue& p);
json to_json(const SwapCandidate& s, const SwapClassification& cls);
json to_json(const EquilibriumVerdict& v);
json to_json(const DynamicsTrace& t);
json to_json(const PoAReport& r);
json to_json(const BoundSpec& b);
json to_json(const Params& p);
json to_json(const AuditReport& a);
json to_json(const ImprovingCycle& c);
json to_json(const SwapAuditReport& r);

std::string poa_text(const json& report);
std::string poa_csv(const json& report);

}  // namespace ssg
