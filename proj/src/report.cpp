#include "ssg/report.hpp"

#include <iomanip>
#include <sstream>

namespace ssg {

json to_json(const Coloring& c) { return c.colors(); }

json to_json(const PsiValue& p) { return json::array({p.phi, p.nonzero_count}); }

json to_json(const SwapCandidate& s, const SwapClassification& cls) {
  return {{"u", s.u},
          {"v", s.v},
          {"local", s.is_local},
          {"profitable", cls.profitable},
          {"gain_u", cls.gain_u.str()},
          {"gain_v", cls.gain_v.str()},
          {"delta_phi", cls.delta_phi},
          {"delta_psi", json::array({cls.delta_psi.first, cls.delta_psi.second})}};
}

json to_json(const EquilibriumVerdict& v) {
  json j{{"is_equilibrium", v.is_equilibrium}};
  j["witness"] = v.witness ? to_json(v.witness->first, v.witness->second) : json(nullptr);
  return j;
}

json to_json(const DynamicsTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"u", s.swap.u},
                     {"v", s.swap.v},
                     {"local", s.swap.is_local},
                     {"gain_u", s.gain_u.str()},
                     {"gain_v", s.gain_v.str()},
                     {"phi", s.psi.phi},
                     {"psi", to_json(s.psi)}});
  json outcome{{"kind", t.outcome.name()}, {"steps", t.outcome.steps}};
  if (t.outcome.kind == DynamicsOutcome::Kind::CycleDetected) {
    outcome["first_repeat_index"] = t.outcome.first_repeat_index;
    outcome["period"] = t.outcome.period;
  }
  if (t.outcome.kind == DynamicsOutcome::Kind::BudgetExhausted) outcome["budget"] = t.outcome.budget;
  return {{"initial", to_json(t.initial)},
          {"initial_psi", to_json(t.initial_psi)},
          {"steps", steps},
          {"outcome", outcome},
          {"final", to_json(t.final_coloring)}};
}

json to_json(const PoAReport& r) {
  json j{{"locality", locality_name(r.locality)},
         {"types", r.types.counts()},
         {"colorings", r.colorings},
         {"opt_welfare", r.opt_welfare.str()},
         {"opt_witness", to_json(r.opt_witness)},
         {"equilibrium_count", r.equilibrium_count}};
  j["worst_eq_welfare"] = r.worst_eq_welfare ? json(r.worst_eq_welfare->str()) : json(nullptr);
  j["worst_witness"] = r.worst_witness ? to_json(*r.worst_witness) : json(nullptr);
  j["best_eq_welfare"] = r.best_eq_welfare ? json(r.best_eq_welfare->str()) : json(nullptr);
  if (r.equilibrium_classes) j["equilibrium_classes"] = *r.equilibrium_classes;
  j["poa"] = r.poa.str();
  return j;
}

json to_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) {
    if (v.den() == 1)
      j[k] = v.num();
    else
      j[k] = v.str();
  }
  return j;
}

json to_json(const BoundSpec& b) {
  json j{{"family", b.family},
         {"params", to_json(b.params)},
         {"kind", bound_kind_name(b.kind)},
         {"scope", b.scope == BoundScope::Instance ? "instance" : "class"},
         {"locality", locality_name(b.locality)}};
  if (b.kind == BoundKind::Exact) {
    j["value"] = b.upper.str();
  } else {
    if (b.kind != BoundKind::Upper) j["lower"] = b.lower.str();
    if (b.kind != BoundKind::Lower) j["upper"] = b.upper.str();
  }
  j["source"] = b.source;
  j["notes"] = b.notes;
  return j;
}

json to_json(const AuditReport& a) {
  json rows = json::array();
  for (const auto& r : a.rows) {
    json row{{"params", to_json(r.params)}};
    if (r.report) {
      row["poa"] = r.report->poa.str();
      row["opt_welfare"] = r.report->opt_welfare.str();
      row["worst_eq_welfare"] = r.report->worst_eq_welfare ? json(r.report->worst_eq_welfare->str()) : json(nullptr);
    }
    if (r.bound) row["bound"] = to_json(*r.bound);
    row["verdict"] = verdict_name(r.verdict);
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(row);
  }
  return {{"family", a.family}, {"locality", locality_name(a.locality)}, {"failures", a.failures()}, {"rows", rows}};
}

json to_json(const ImprovingCycle& c) {
  json cols = json::array(), swaps = json::array();
  for (const auto& x : c.colorings) cols.push_back(to_json(x));
  for (const auto& s : c.swaps) swaps.push_back({{"u", s.u}, {"v", s.v}, {"local", s.is_local}});
  return {{"length", c.length()}, {"colorings", cols}, {"swaps", swaps}};
}

json to_json(const SwapAuditReport& r) {
  json cats = json::object();
  for (const auto& [k, v] : r.categories) cats[k] = v;
  return {{"colorings", r.colorings}, {"swaps_checked", r.swaps_checked}, {"categories", cats}, {"violations", r.violations}};
}

namespace {

std::string field(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return "-";
  if (j[key].is_string()) return j[key].get<std::string>();
  return j[key].dump();
}

}  // namespace

std::string poa_text(const json& report) {
  const json& e = report.at("empirical");
  std::ostringstream out;
  auto line = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(20) << k << v << '\n'; };
  line("graph", field(report, "graph"));
  line("types", e.at("types").dump());
  line("locality", field(e, "locality"));
  line("colorings", field(e, "colorings"));
  line("opt welfare", field(e, "opt_welfare"));
  line("worst eq welfare", field(e, "worst_eq_welfare"));
  line("best eq welfare", field(e, "best_eq_welfare"));
  line("equilibria", field(e, "equilibrium_count"));
  if (e.contains("equilibrium_classes")) line("up to symmetry", field(e, "equilibrium_classes"));
  line("poa", field(e, "poa"));
  if (report.contains("bound") && !report["bound"].is_null()) {
    const json& b = report["bound"];
    std::string v = b.contains("value") ? field(b, "value") : "[" + field(b, "lower") + ", " + field(b, "upper") + "]";
    line("bound", field(b, "kind") + " " + v + " (" + field(b, "scope") + ")");
    line("verdict", field(report, "verdict"));
    line("source", field(b, "source"));
    for (const auto& n : b.at("notes")) line("note", n.get<std::string>());
  }
  return out.str();
}

std::string poa_csv(const json& report) {
  const json& e = report.at("empirical");
  std::ostringstream out;
  out << "graph,types,locality,colorings,opt_welfare,worst_eq_welfare,best_eq_welfare,equilibria,poa,bound_kind,bound,"
         "verdict\n";
  std::string types;
  for (const auto& t : e.at("types")) types += (types.empty() ? "" : ";") + t.dump();
  std::string bk = "-", bv = "-";
  if (report.contains("bound") && !report["bound"].is_null()) {
    const json& b = report["bound"];
    bk = field(b, "kind");
    bv = b.contains("value") ? field(b, "value") : field(b, "lower") + ";" + field(b, "upper");
  }
  out << field(report, "graph") << ',' << types << ',' << field(e, "locality") << ',' << field(e, "colorings") << ','
      << field(e, "opt_welfare") << ',' << field(e, "worst_eq_welfare") << ',' << field(e, "best_eq_welfare") << ','
      << field(e, "equilibrium_count") << ',' << field(e, "poa") << ',' << bk << ',' << bv << ','
      << field(report, "verdict") << '\n';
  return out.str();
}

}  // namespace ssg
