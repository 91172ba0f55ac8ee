#include <algorithm>

#include "ssg/analysis.hpp"
#include "ssg/error.hpp"

namespace ssg {

const char* bound_kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::Exact: return "exact";
    case BoundKind::Upper: return "upper";
    case BoundKind::Lower: return "lower";
    case BoundKind::Interval: return "interval";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "n/a";
  }
  return "?";
}

std::vector<std::string> bound_families() {
  return {"cycle",   "path",     "general",  "balanced",  "min-max-degree", "bounded-degree", "regular", "grid4",
          "grid4-o1", "grid4-2xh", "grid4-3xh", "grid4-lxh", "grid8",          "grid8-o1",       "grid8-local"};
}

namespace {

struct Lookup {
  const std::string& family;
  const Params& params;

  Rational value(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end())
      throw Error(ErrorCode::IncompleteParams, "family '" + family + "' needs parameter '" + key + "'");
    return it->second;
  }
  std::int64_t integer(const std::string& key) const {
    Rational v = value(key);
    if (v.den() != 1) throw Error(ErrorCode::InvalidParameter, "parameter '" + key + "' must be an integer");
    return v.num();
  }
  bool has(const std::string& key) const { return params.count(key) > 0; }
};

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidParameter, msg); }

Ratio fin(Rational r) { return Ratio::finite(r); }
Rational R(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }

BoundSpec exact(Ratio v, BoundScope scope, std::string source) {
  BoundSpec b;
  b.kind = BoundKind::Exact;
  b.scope = scope;
  b.lower = b.upper = v;
  b.source = std::move(source);
  return b;
}

BoundSpec upper(Ratio v, BoundScope scope, std::string source) {
  BoundSpec b;
  b.kind = BoundKind::Upper;
  b.scope = scope;
  b.upper = v;
  b.source = std::move(source);
  return b;
}

BoundSpec interval(Ratio lo, Ratio hi, BoundScope scope, std::string source) {
  BoundSpec b;
  b.kind = BoundKind::Interval;
  b.scope = scope;
  b.lower = lo;
  b.upper = hi;
  b.source = std::move(source);
  return b;
}

// n and the minority count, validated for two-color instances.
std::pair<std::int64_t, std::int64_t> n_and_o(const Lookup& p, std::int64_t min_n) {
  std::int64_t n = p.integer("n"), o = p.integer("o");
  if (n < min_n || o < 1 || o >= n) invalid("need n >= " + std::to_string(min_n) + " and 1 <= o < n");
  return {n, std::min(o, n - o)};
}

const char* kPathOneOrangeNote =
    "o=1: the formula assumes an optimum of n-1, but one orange agent at an endpoint gives n-3/2; "
    "enumeration yields (2n-3)/(2n-5)";

BoundSpec build(const std::string& family, const Lookup& p, Locality loc) {
  const bool global = loc == Locality::Global;
  if (family == "cycle") {
    auto [n, o] = n_and_o(p, 3);
    const std::int64_t b = n - o;
    if (global) {
      if (o == 1) return exact(fin(R(1)), BoundScope::Instance, "PoA of 2-SSGs on cycles");
      return exact(fin(R(n - 2, b + o % 2)), BoundScope::Instance, "PoA of 2-SSGs on cycles, (n-2)/(b+beta) with o=2alpha+beta");
    }
    const std::int64_t alpha = n / 3, beta = n % 3;
    if (o == 1) return exact(fin(R(1)), BoundScope::Instance, "LPoA of local 2-SSGs on cycles");
    if (b >= 2 * o) return exact(fin(R(n - 2, b - o)), BoundScope::Instance, "LPoA of local 2-SSGs on cycles, tight case b>=2o");
    if (alpha + beta == 0) invalid("cycle too small");
    return upper(fin(R(n - 2, alpha + beta)), BoundScope::Instance, "LPoA of local 2-SSGs on cycles, (n-2)/(alpha+beta) with n=3alpha+beta");
  }
  if (family == "path") {
    auto [n, o] = n_and_o(p, 3);
    const std::int64_t b = n - o;
    if (n == 3) return exact(Ratio::infinite(), BoundScope::Instance, global ? "PoA of 2-SSGs on paths, n=3" : "LPoA of local 2-SSGs on paths, n=3");
    if (o == 1) {
      BoundSpec s = exact(fin(R(2 * n - 2, 2 * n - 5)), BoundScope::Instance,
                          global ? "PoA of 2-SSGs on paths, o=1" : "LPoA of local 2-SSGs on paths, o=1");
      s.notes.push_back(kPathOneOrangeNote);
      return s;
    }
    if (global) {
      const std::int64_t alpha = o / 2, beta = o % 2;
      if (b <= 2 * alpha + 1)
        return exact(fin(R(n - 1, b + 1 + beta)), BoundScope::Instance, "PoA of 2-SSGs on paths, (n-1)/(b+1+beta) when b<=2alpha+1");
      return exact(fin(R(n - 1, b + beta)), BoundScope::Instance, "PoA of 2-SSGs on paths, (n-1)/(b+beta) when b>=2alpha+2");
    }
    const std::int64_t alpha = n / 3;
    if (b >= 2 * o) return exact(fin(R(n - 1, b - o - 1)), BoundScope::Instance, "LPoA of local 2-SSGs on paths, tight case b>=2o");
    return upper(fin(R(n - 1, alpha)), BoundScope::Instance, "LPoA of local 2-SSGs on paths, (n-1)/alpha with n=3alpha+beta");
  }
  if (family == "general") {
    auto [n, o] = n_and_o(p, 2);
    if (o < 2) invalid("general bound needs o > 1");
    if (!global) throw Error(ErrorCode::UnknownFamily, "'general' is a swap-game (global) bound");
    return upper(fin(R(n * o * (n - o) - n, o * (o - 1) * (n - o))), BoundScope::Class, "PoA of 2-SSGs with o>1");
  }
  if (family == "balanced") {
    const std::int64_t n = p.integer("n");
    if (n < 2 || n % 2) invalid("balanced games need an even n");
    if (global) return upper(fin(std::min(R(3), R(2 * (n + 2), n))), BoundScope::Class, "PoA of balanced 2-SSGs, min{3, 2(n+2)/n}");
    if (n < 4) invalid("balanced local bound needs o > 1");
    BoundSpec s = interval(fin(R(2 * n - 8) + R(8, n)), fin(R(2 * n) - R(8, n)), BoundScope::Class,
                           "LPoA of local balanced 2-SSGs with o>1");
    s.notes.push_back("lower end is attained over the class (double-star family), not by every instance");
    return s;
  }
  if (family == "min-max-degree") {
    if (global) throw Error(ErrorCode::UnknownFamily, "'min-max-degree' is a local bound");
    const std::int64_t d = p.integer("delta_min"), D = p.integer("delta_max");
    if (d < 2 || D < d) invalid("need 2 <= delta_min <= delta_max");
    BoundSpec s = upper(fin(R(2 * (d + D), d - 1)), BoundScope::Class, "LPoA of local 2-SSGs by minimum and maximum degree");
    s.notes.push_back(
        "statement prints 2(1+(Delta+1)/(delta-1)) and the overview table 2(1+(Delta-1)/(delta-1)); "
        "the proof ends with 2(delta+Delta)/(delta-1), which is used here");
    return s;
  }
  if (family == "bounded-degree") {
    if (global) throw Error(ErrorCode::UnknownFamily, "'bounded-degree' is a local bound");
    const std::int64_t D = p.integer("delta_max");
    if (D < 2) invalid("need delta_max >= 2");
    if (p.has("n") && D > p.integer("n") - 2) invalid("bound needs delta_max <= n-2");
    Rational eps = p.has("epsilon") ? p.value("epsilon") : R(0);
    if (eps < R(0)) invalid("epsilon must be non-negative");
    return interval(fin(R(D * (D - 1), 2) - eps), fin(R(4 * (D * D - D + 1))), BoundScope::Class,
                    "LPoA of local 2-SSGs with maximum degree at most n-2");
  }
  if (family == "regular") {
    if (global) throw Error(ErrorCode::UnknownFamily, "'regular' is a local bound");
    const std::int64_t D = p.integer("delta");
    if (D < 2) invalid("need delta >= 2");
    return exact(fin(R(2) + R(1, D / 2)), BoundScope::Class, "LPoA of local 2-SSGs on regular graphs, 2+1/alpha with delta=2alpha+beta");
  }
  if (family == "grid4") {
    if (!global) throw Error(ErrorCode::UnknownFamily, "use grid4-2xh, grid4-3xh or grid4-lxh for local bounds");
    BoundSpec s = upper(fin(R(2)), BoundScope::Class, "PoA of 2-SSGs on 4-grids is at most 2");
    s.notes.push_back("applies when both colors have at least two agents; the frame profiles approach it from below");
    return s;
  }
  if (family == "grid4-o1") return exact(fin(R(25, 22)), BoundScope::Class, "PoA of 2-SSGs on 4-grids with one agent of a type");
  if (family == "grid4-2xh") {
    if (global) throw Error(ErrorCode::UnknownFamily, "'grid4-2xh' is a local bound");
    return exact(fin(R(3)), BoundScope::Class, "LPoA of local 2-SSGs on 2xh 4-grids, h>=3");
  }
  if (family == "grid4-3xh") {
    if (global) throw Error(ErrorCode::UnknownFamily, "'grid4-3xh' is a local bound");
    return exact(fin(R(36, 13)), BoundScope::Class, "LPoA of local 2-SSGs on 3xh 4-grids, h>=3");
  }
  if (family == "grid4-lxh" || family == "grid8-local") {
    if (global) throw Error(ErrorCode::UnknownFamily, "'" + family + "' is a local bound");
    const std::int64_t m = std::min(p.integer("rows"), p.integer("cols"));
    const std::int64_t c = family == "grid4-lxh" ? 20 : 18;
    if (m <= 8) invalid("size precondition needs rows, cols > 8");
    // Largest epsilon the size precondition rows, cols >= 8 + c/epsilon admits.
    const Rational eps = R(c, m - 8);
    if (family == "grid4-lxh")
      return interval(fin(R(5, 2) - eps), fin(R(5, 2) + eps), BoundScope::Class,
                      "LPoA of local 2-SSGs on large 4-grids in (5/2-eps, 5/2+eps]");
    return upper(fin(R(9, 4) + eps), BoundScope::Class, "LPoA of local 2-SSGs on large 8-grids at most 9/4+eps");
  }
  if (family == "grid8") {
    if (!global) throw Error(ErrorCode::UnknownFamily, "use grid8-local for the local bound");
    return upper(fin(R(8)), BoundScope::Class, "PoA of 2-SSGs on 8-grids is at most 8");
  }
  if (family == "grid8-o1") return exact(fin(R(897, 704)), BoundScope::Class, "PoA of 2-SSGs on 8-grids with one agent of a type");
  throw Error(ErrorCode::UnknownFamily, "unknown bound family '" + family + "'");
}

}  // namespace

BoundSpec theoretical_bound(const std::string& family, const Params& params, Locality locality) {
  BoundSpec b = build(family, Lookup{family, params}, locality);
  b.family = family;
  b.params = params;
  b.locality = locality;
  return b;
}

Verdict judge(const BoundSpec& b, const Ratio& empirical) {
  if (empirical.kind == Ratio::Kind::Undefined) return Verdict::NotApplicable;
  auto le = [](const Ratio& a, const Ratio& c) { return compare(a, c) <= 0; };
  switch (b.kind) {
    case BoundKind::Exact:
      if (b.scope == BoundScope::Instance) return empirical == b.upper ? Verdict::Pass : Verdict::Fail;
      return le(empirical, b.upper) ? Verdict::Pass : Verdict::Fail;
    case BoundKind::Upper:
      return le(empirical, b.upper) ? Verdict::Pass : Verdict::Fail;
    case BoundKind::Lower:
      if (b.scope == BoundScope::Class) return Verdict::NotApplicable;
      return le(b.lower, empirical) ? Verdict::Pass : Verdict::Fail;
    case BoundKind::Interval:
      if (!le(empirical, b.upper)) return Verdict::Fail;
      if (b.scope == BoundScope::Instance && !(compare(b.lower, empirical) < 0)) return Verdict::Fail;
      return Verdict::Pass;
  }
  return Verdict::NotApplicable;
}

int AuditReport::failures() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const AuditRow& r) {
    return r.verdict == Verdict::Fail;
  }));
}

Instance make_instance(const std::string& family, const Params& params, Locality locality) {
  Lookup p{family, params};
  Instance inst;
  inst.bound_params = params;
  const bool global = locality == Locality::Global;
  if (family == "cycle" || family == "path") {
    const int n = static_cast<int>(p.integer("n"));
    inst.graph = family == "cycle" ? make_cycle(n) : make_path(n);
    inst.bound_family = family;
  } else if (family == "grid4" || family == "grid8") {
    const int rows = static_cast<int>(p.integer("rows")), cols = static_cast<int>(p.integer("cols"));
    inst.graph = make_grid(rows, cols, family == "grid4" ? GridKind::Four : GridKind::Eight);
    const std::int64_t o = std::min<std::int64_t>(p.integer("o"), inst.graph.n() - p.integer("o"));
    const int shorter = std::min(rows, cols);
    if (family == "grid4")
      inst.bound_family = global ? (o == 1 ? "grid4-o1" : "grid4")
                                 : (shorter == 2 ? "grid4-2xh" : shorter == 3 ? "grid4-3xh" : "grid4-lxh");
    else
      inst.bound_family = global ? (o == 1 ? "grid8-o1" : "grid8") : "grid8-local";
  } else if (family == "regular-gadget") {
    inst.graph = make_regular_gadget(static_cast<int>(p.integer("delta")), static_cast<int>(p.integer("q")));
    inst.bound_family = "regular";
  } else {
    throw Error(ErrorCode::UnknownFamily, "no instance generator for '" + family + "'");
  }
  const std::int64_t o = p.integer("o");
  if (o < 1 || o >= inst.graph.n()) invalid("need 1 <= o < n");
  inst.types = TypeVector::two(inst.graph.n(), static_cast<int>(o));
  inst.bound_params["n"] = Rational(inst.graph.n());
  return inst;
}

AuditRow audit_instance(const std::string& family, const Params& params, Locality locality, const EnumOptions& opts) {
  Instance inst = make_instance(family, params, locality);
  AuditRow row;
  row.params = params;
  row.report = empirical_poa(inst.graph, inst.types, locality, opts);
  try {
    row.bound = theoretical_bound(inst.bound_family, inst.bound_params, locality);
    row.verdict = judge(*row.bound, row.report->poa);
  } catch (const Error& e) {
    row.error = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return row;
}

AuditReport bound_audit(const std::string& family, const std::vector<Params>& grid, Locality locality,
                        const EnumOptions& opts) {
  AuditReport report;
  report.family = family;
  report.locality = locality;
  for (const Params& params : grid) {
    try {
      report.rows.push_back(audit_instance(family, params, locality, opts));
    } catch (const Error& e) {
      AuditRow row;
      row.params = params;
      row.error = std::string(error_code_name(e.code())) + ": " + e.what();
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace ssg
