#include "ssg/dynamics.hpp"

#include <algorithm>
#include <unordered_map>

#include "ssg/error.hpp"

namespace ssg {

const char* locality_name(Locality l) { return l == Locality::Global ? "global" : "local"; }

std::string Scheduler::str() const {
  switch (kind) {
    case Kind::First: return "first";
    case Kind::BestGain: return "best-gain";
    case Kind::Random: return "random";
    case Kind::Scripted: return "scripted";
  }
  return "?";
}

const char* DynamicsOutcome::name() const {
  switch (kind) {
    case Kind::Converged: return "converged";
    case Kind::CycleDetected: return "cycle-detected";
    case Kind::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

// Same-color neighbor counts of u and v after exchanging their colors.
std::pair<int, int> swapped_counts(const Graph& g, const Coloring& c, Vertex u, Vertex v) {
  auto after = [&](Vertex w) { return w == u ? c[v] : (w == v ? c[u] : c[w]); };
  int at_v = 0, at_u = 0;  // new same counts at positions v (agent from u) and u
  for (Vertex w : g.neighbors(v)) at_v += after(w) == c[u];
  for (Vertex w : g.neighbors(u)) at_u += after(w) == c[v];
  return {at_v, at_u};
}

}  // namespace

bool is_profitable(const Graph& g, const Coloring& c, Vertex u, Vertex v) {
  if (c[u] == c[v]) return false;
  auto [at_v, at_u] = swapped_counts(g, c, u, v);
  std::int64_t du = g.degree(u), dv = g.degree(v);
  std::int64_t su = same_color_neighbors(g, c, u), sv = same_color_neighbors(g, c, v);
  // at_v/dv > su/du and at_u/du > sv/dv
  return at_v * du > su * dv && at_u * dv > sv * du;
}

SwapClassification classify_swap(const Graph& g, const Coloring& c, Vertex u, Vertex v) {
  if (u == v || c[u] == c[v])
    throw Error(ErrorCode::SameColorSwap, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                              " hold the same color");
  SwapClassification cls;
  auto [gu, gv] = swap_gain(g, c, u, v);
  cls.gain_u = gu;
  cls.gain_v = gv;
  cls.profitable = gu > Rational(0) && gv > Rational(0);

  auto after = [&](Vertex w) { return w == u ? c[v] : (w == v ? c[u] : c[w]); };
  auto same_before = [&](Vertex x) {
    int s = 0;
    for (Vertex w : g.neighbors(x)) s += c[w] == c[x];
    return s;
  };
  auto same_after = [&](Vertex x) {
    int s = 0;
    for (Vertex w : g.neighbors(x)) s += after(w) == after(x);
    return s;
  };
  // Only edges at u or v change; the edge uv is bichromatic before and after.
  cls.delta_phi = (same_after(u) + same_after(v)) - (same_before(u) + same_before(v));

  std::vector<Vertex> touched{u, v};
  for (Vertex w : g.neighbors(u)) touched.push_back(w);
  for (Vertex w : g.neighbors(v)) touched.push_back(w);
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::int64_t dz = 0;
  for (Vertex x : touched) dz += (same_after(x) > 0) - (same_before(x) > 0);
  cls.delta_psi = {cls.delta_phi, dz};
  return cls;
}

SwapClassification classify_swap(const Graph& g, const Coloring& c, const SwapCandidate& s) {
  return classify_swap(g, c, s.u, s.v);
}

std::vector<ProfitableSwap> enumerate_profitable(const Graph& g, const Coloring& c, Locality locality) {
  std::vector<ProfitableSwap> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (locality == Locality::Local) {
      for (Vertex v : g.neighbors(u))
        if (v > u && is_profitable(g, c, u, v)) out.emplace_back(SwapCandidate{u, v, true}, classify_swap(g, c, u, v));
    } else {
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (is_profitable(g, c, u, v))
          out.emplace_back(SwapCandidate{u, v, g.adjacent(u, v)}, classify_swap(g, c, u, v));
    }
  }
  return out;
}

DynamicsTrace run_dynamics(const Graph& g, const TypeVector& t, const Coloring& init, Locality locality,
                           const Scheduler& scheduler, std::int64_t budget) {
  check_consistent(g, init, t);
  if (budget < 0) throw Error(ErrorCode::InvalidParameter, "budget must be non-negative");
  if (scheduler.kind == Scheduler::Kind::Scripted && scheduler.script.empty())
    throw Error(ErrorCode::InvalidParameter, "scripted scheduler needs at least one swap");

  DynamicsTrace trace;
  trace.initial = init;
  trace.initial_psi = psi(g, init);
  Coloring cur = init;
  std::unordered_map<Coloring, std::int64_t, ColoringHash> seen{{cur, 0}};
  Rng rng(scheduler.seed);
  std::int64_t steps = 0;

  for (;;) {
    auto options = enumerate_profitable(g, cur, locality);
    if (options.empty()) {
      trace.outcome.kind = DynamicsOutcome::Kind::Converged;
      break;
    }
    if (steps == budget) {
      trace.outcome.kind = DynamicsOutcome::Kind::BudgetExhausted;
      trace.outcome.budget = budget;
      break;
    }
    std::size_t pick = 0;
    switch (scheduler.kind) {
      case Scheduler::Kind::First: break;
      case Scheduler::Kind::BestGain:
        for (std::size_t i = 1; i < options.size(); ++i) {
          const auto& a = options[i].second;
          const auto& b = options[pick].second;
          if (a.gain_u + a.gain_v > b.gain_u + b.gain_v) pick = i;
        }
        break;
      case Scheduler::Kind::Random: pick = rng.below(options.size()); break;
      case Scheduler::Kind::Scripted: {
        auto [a, b] = scheduler.script[steps % scheduler.script.size()];
        if (a > b) std::swap(a, b);
        auto it = std::find_if(options.begin(), options.end(),
                               [&](const ProfitableSwap& p) { return p.first.u == a && p.first.v == b; });
        if (it == options.end())
          throw Error(ErrorCode::InvalidParameter, "scripted swap (" + std::to_string(a) + "," + std::to_string(b) +
                                                       ") is not profitable at step " + std::to_string(steps));
        pick = static_cast<std::size_t>(it - options.begin());
        break;
      }
    }
    const auto& [cand, cls] = options[pick];
    cur = apply_swap(cur, cand.u, cand.v);
    ++steps;
    trace.steps.push_back({cand, cls.gain_u, cls.gain_v, psi(g, cur)});
    auto [it, fresh] = seen.emplace(cur, steps);
    if (!fresh) {
      trace.outcome.kind = DynamicsOutcome::Kind::CycleDetected;
      trace.outcome.first_repeat_index = it->second;
      trace.outcome.period = steps - it->second;
      break;
    }
  }
  trace.outcome.steps = steps;
  trace.final_coloring = cur;
  return trace;
}

void audit_swap(const Graph& g, const Coloring& c, Vertex u, Vertex v, const SwapClassification& cls,
                SwapAuditReport& report) {
  ++report.swaps_checked;
  Vertex lo = u, hi = v;
  if (g.degree(lo) > g.degree(hi)) std::swap(lo, hi);
  const int dlo = g.degree(lo), dhi = g.degree(hi);
  const int gap = dhi - dlo;
  const Rational u_lo = utility(g, c, lo), u_hi = utility(g, c, hi);
  auto violation = [&](const std::string& rule) {
    report.violations.push_back(rule + " at swap (" + std::to_string(u) + "," + std::to_string(v) +
                                "), degrees " + std::to_string(dlo) + "/" + std::to_string(dhi) +
                                ", delta_phi " + std::to_string(cls.delta_phi) + ", coloring [" + c.str() + "]");
  };

  if (gap <= 1) {
    ++report.categories[gap == 0 ? "gap0" : "gap1"];
    if (cls.delta_phi < 1) violation("gap<=1 requires delta_phi>=1");
  } else if (gap == 2) {
    ++report.categories["gap2"];
    if (cls.delta_phi < 0) violation("gap=2 requires delta_phi>=0");
    if (cls.delta_phi == 0 && !(u_hi > Rational(1, 2) && u_hi < Rational(1)))
      violation("gap=2 with delta_phi=0 requires higher-degree utility in (1/2,1)");
  } else {
    ++report.categories["gap>2"];
  }

  const auto& gm = g.grid();
  if (gm && gm->kind == GridKind::Eight && c.k() <= 2 && g.adjacent(u, v) && dhi == 8 && (dlo == 3 || dlo == 5)) {
    const Rational trigger = dlo == 3 ? Rational(5, 8) : Rational(6, 8);
    ++report.categories[dlo == 3 ? "local(3,8)" : "local(5,8)"];
    bool premise = u_lo.is_zero() && u_hi == trigger;
    if (premise && cls.delta_phi != -1) violation("8-grid local pair: premise met but delta_phi != -1");
    if (!premise && cls.delta_phi < 1) violation("8-grid local pair: premise not met but delta_phi < 1");
  }
}

namespace {

void audit_coloring(const Graph& g, const Coloring& c, Locality locality, SwapAuditReport& report) {
  ++report.colorings;
  for (const auto& [cand, cls] : enumerate_profitable(g, c, locality)) {
    std::int64_t recomputed = phi(g, apply_swap(c, cand.u, cand.v)) - phi(g, c);
    if (recomputed != cls.delta_phi)
      report.violations.push_back("delta_phi mismatch at (" + std::to_string(cand.u) + "," + std::to_string(cand.v) + ")");
    audit_swap(g, c, cand.u, cand.v, cls, report);
  }
}

}  // namespace

SwapAuditReport audit_swaps(const Graph& g, std::int64_t samples, std::uint64_t seed, Locality locality) {
  SwapAuditReport report;
  if (g.n() < 2) return report;
  Rng rng(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    int o = 1 + static_cast<int>(rng.below(g.n() / 2));
    Coloring c = random_coloring(TypeVector({o, g.n() - o}), rng);
    audit_coloring(g, c, locality, report);
  }
  return report;
}

SwapAuditReport audit_swaps_exhaustive(const Graph& g, const TypeVector& t, Locality locality) {
  SwapAuditReport report;
  for_each_coloring(t, [&](const Coloring& c) { audit_coloring(g, c, locality, report); });
  return report;
}

}  // namespace ssg
