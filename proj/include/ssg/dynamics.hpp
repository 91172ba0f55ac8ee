#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/game.hpp"
#include "ssg/rng.hpp"

namespace ssg {

enum class Locality { Global, Local };
const char* locality_name(Locality l);

struct SwapCandidate {
  Vertex u = 0;
  Vertex v = 0;
  bool is_local = false;
  friend bool operator==(const SwapCandidate&, const SwapCandidate&) = default;
};

struct SwapClassification {
  bool profitable = false;
  Rational gain_u;
  Rational gain_v;
  std::int64_t delta_phi = 0;
  std::pair<std::int64_t, std::int64_t> delta_psi{0, 0};
};

using ProfitableSwap = std::pair<SwapCandidate, SwapClassification>;

SwapClassification classify_swap(const Graph& g, const Coloring& c, Vertex u, Vertex v);
SwapClassification classify_swap(const Graph& g, const Coloring& c, const SwapCandidate& s);

// Profitable swaps in lexicographic (u, v) order, u < v.
std::vector<ProfitableSwap> enumerate_profitable(const Graph& g, const Coloring& c, Locality locality);
bool is_profitable(const Graph& g, const Coloring& c, Vertex u, Vertex v);

struct Scheduler {
  enum class Kind { First, BestGain, Random, Scripted };
  Kind kind = Kind::First;
  std::uint64_t seed = 0;
  // Scripted: swaps replayed cyclically; each must be profitable when reached.
  std::vector<std::pair<Vertex, Vertex>> script;

  static Scheduler first() { return {Kind::First, 0, {}}; }
  static Scheduler best_gain() { return {Kind::BestGain, 0, {}}; }
  static Scheduler random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
  static Scheduler scripted(std::vector<std::pair<Vertex, Vertex>> s) { return {Kind::Scripted, 0, std::move(s)}; }
  std::string str() const;
};

struct DynamicsStep {
  SwapCandidate swap;
  Rational gain_u;
  Rational gain_v;
  PsiValue psi;  // after the swap
};

struct DynamicsOutcome {
  enum class Kind { Converged, CycleDetected, BudgetExhausted };
  Kind kind = Kind::Converged;
  std::int64_t steps = 0;
  std::int64_t first_repeat_index = 0;
  std::int64_t period = 0;
  std::int64_t budget = 0;
  const char* name() const;
};

struct DynamicsTrace {
  Coloring initial;
  PsiValue initial_psi;
  std::vector<DynamicsStep> steps;
  DynamicsOutcome outcome;
  Coloring final_coloring;
};

// Runs improving-response dynamics. A repeated coloring stops the run with
// CycleDetected; first_repeat_index is the step count at its first visit.
DynamicsTrace run_dynamics(const Graph& g, const TypeVector& t, const Coloring& init,
                           Locality locality, const Scheduler& scheduler, std::int64_t budget);

struct ImprovingCycle {
  std::vector<Coloring> colorings;  // closed: back() == front()
  std::vector<SwapCandidate> swaps;
  std::size_t length() const { return swaps.size(); }
};

struct IrcSearch {
  std::optional<ImprovingCycle> cycle;
  std::int64_t states_explored = 0;
  bool exhaustive = false;
};

struct IrcOptions {
  std::int64_t max_states = 1'000'000;
  // Zero: exhaustive over the full coloring space, throwing BudgetExceeded when
  // it is larger than max_states. Otherwise explore from this many seeded
  // random starts until max_states states have been seen.
  int seeded_starts = 0;
  std::uint64_t seed = 1;
};

// Exhaustive mode returns a shortest cycle of the improving-response graph.
IrcSearch find_irc(const Graph& g, const TypeVector& t, Locality locality, const IrcOptions& opts = {});

// Replays a cycle with independent recomputation: every swap profitable and
// the final coloring equal to the first.
bool verify_cycle(const Graph& g, const ImprovingCycle& cycle, Locality locality, std::string* why = nullptr);

struct SwapAuditReport {
  std::int64_t colorings = 0;
  std::int64_t swaps_checked = 0;
  // Profitable swaps per category: gap0, gap1, gap2, gap>2, local(3,8), local(5,8).
  std::map<std::string, std::int64_t> categories;
  std::vector<std::string> violations;
};

// Checks one profitable swap against the degree-gap predicates (and, on
// 8-grids with an adjacent (3,8) or (5,8) pair, the exact Phi = -1 rule).
void audit_swap(const Graph& g, const Coloring& c, Vertex u, Vertex v, const SwapClassification& cls,
                SwapAuditReport& report);
// Samples random colorings with random two-color splits.
SwapAuditReport audit_swaps(const Graph& g, std::int64_t samples, std::uint64_t seed, Locality locality = Locality::Global);
// Every coloring with type vector t.
SwapAuditReport audit_swaps_exhaustive(const Graph& g, const TypeVector& t, Locality locality = Locality::Global);

}  // namespace ssg
