#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ssg/equilibria.hpp"

namespace ssg {

struct EnumOptions {
  // Cap on (#colorings x n) utility evaluations.
  std::int64_t budget = 100'000'000;
  unsigned jobs = 1;
  // Also count equilibria up to grid automorphisms (grid graphs only).
  bool symmetry_classes = false;
};

struct PoAReport {
  Locality locality = Locality::Global;
  TypeVector types;
  Rational opt_welfare;
  Coloring opt_witness;
  std::optional<Rational> worst_eq_welfare;
  std::optional<Coloring> worst_witness;
  std::optional<Rational> best_eq_welfare;
  std::int64_t equilibrium_count = 0;
  std::optional<std::int64_t> equilibrium_classes;
  std::int64_t colorings = 0;
  Ratio poa;
};

std::pair<Rational, Coloring> brute_force_optimum(const Graph& g, const TypeVector& t, const EnumOptions& opts = {});
// Single pass over all colorings: optimum plus equilibrium statistics.
PoAReport enumerate_equilibria(const Graph& g, const TypeVector& t, Locality locality, const EnumOptions& opts = {});
PoAReport empirical_poa(const Graph& g, const TypeVector& t, Locality locality, const EnumOptions& opts = {});

// Vertex permutations of the grid's automorphism group (identity first).
std::vector<std::vector<Vertex>> grid_automorphisms(const Graph& g);

using Params = std::map<std::string, Rational>;

enum class BoundKind { Exact, Upper, Lower, Interval };
// Instance: the value is the PoA of this exact instance. Class: the value is
// the PoA over a graph class, so a single instance is only bounded by it.
enum class BoundScope { Instance, Class };
const char* bound_kind_name(BoundKind k);

struct BoundSpec {
  std::string family;
  Params params;
  BoundKind kind = BoundKind::Exact;
  BoundScope scope = BoundScope::Instance;
  Ratio lower;  // Exact: lower == upper
  Ratio upper;
  Locality locality = Locality::Global;
  std::string source;
  std::vector<std::string> notes;
};

// Families: cycle, path, general, balanced, min-max-degree, bounded-degree,
// regular, grid4, grid4-o1, grid4-2xh, grid4-3xh, grid4-lxh, grid8,
// grid8-o1, grid8-local. Throws UnknownFamily / IncompleteParams.
BoundSpec theoretical_bound(const std::string& family, const Params& params, Locality locality);
std::vector<std::string> bound_families();

enum class Verdict { Pass, Fail, NotApplicable };
const char* verdict_name(Verdict v);

// Exact+Instance: equality. Upper (or any Class-scoped exact value): the
// empirical ratio must not exceed it. Lower+Instance: must not fall below.
// Class-scoped lower sides are not instance properties and are skipped.
Verdict judge(const BoundSpec& b, const Ratio& empirical);

struct AuditRow {
  Params params;
  std::optional<PoAReport> report;
  std::optional<BoundSpec> bound;
  Verdict verdict = Verdict::NotApplicable;
  std::string error;
};

struct AuditReport {
  std::string family;
  Locality locality = Locality::Global;
  std::vector<AuditRow> rows;
  int failures() const;
};

struct Instance {
  Graph graph;
  TypeVector types;
  std::string bound_family;
  Params bound_params;
};
// Two-color instance of a family (cycle, path, grid4, grid8, regular-gadget)
// with "o" agents of one color, plus the bound family that covers it.
Instance make_instance(const std::string& family, const Params& params, Locality locality);
// Enumerates one instance and judges it; a missing bound is recorded in error.
AuditRow audit_instance(const std::string& family, const Params& params, Locality locality, const EnumOptions& opts = {});
// Generates each instance from the family (cycle, path, grid4, grid8,
// regular-gadget), enumerates it and judges the matching bound. Budget
// failures are recorded per row and the grid continues.
AuditReport bound_audit(const std::string& family, const std::vector<Params>& grid, Locality locality,
                        const EnumOptions& opts = {});

}  // namespace ssg
