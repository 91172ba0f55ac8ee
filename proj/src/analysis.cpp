#include "ssg/analysis.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <thread>

#include "ssg/error.hpp"

namespace ssg {

std::vector<std::vector<Vertex>> grid_automorphisms(const Graph& g) {
  const auto& gm = g.grid();
  if (!gm) throw Error(ErrorCode::MissingGridMetadata, "grid automorphisms need a grid graph");
  const int R = gm->rows, C = gm->cols;
  std::vector<std::vector<Vertex>> out;
  auto add = [&](auto map) {
    std::vector<Vertex> p(R * C);
    for (int r = 0; r < R; ++r)
      for (int c = 0; c < C; ++c) {
        auto [r2, c2] = map(r, c);
        p[r * C + c] = r2 * C + c2;
      }
    out.push_back(std::move(p));
  };
  add([](int r, int c) { return std::pair{r, c}; });
  add([&](int r, int c) { return std::pair{r, C - 1 - c}; });
  add([&](int r, int c) { return std::pair{R - 1 - r, c}; });
  add([&](int r, int c) { return std::pair{R - 1 - r, C - 1 - c}; });
  if (R == C) {
    add([](int r, int c) { return std::pair{c, r}; });
    add([&](int r, int c) { return std::pair{C - 1 - c, r}; });
    add([&](int r, int c) { return std::pair{c, R - 1 - r}; });
    add([&](int r, int c) { return std::pair{C - 1 - c, R - 1 - r}; });
  }
  return out;
}

namespace {

struct Aggregate {
  bool have_opt = false;
  Rational opt;
  std::int64_t opt_rank = 0;
  Coloring opt_witness;
  std::int64_t eq_count = 0;
  bool have_eq = false;
  Rational worst, best;
  std::int64_t worst_rank = 0;
  Coloring worst_witness;
  std::set<std::string> classes;

  void merge(Aggregate&& o) {
    if (o.have_opt && (!have_opt || o.opt > opt || (o.opt == opt && o.opt_rank < opt_rank))) {
      have_opt = true;
      opt = o.opt;
      opt_rank = o.opt_rank;
      opt_witness = std::move(o.opt_witness);
    }
    if (o.have_eq) {
      if (!have_eq || o.worst < worst || (o.worst == worst && o.worst_rank < worst_rank)) {
        worst = o.worst;
        worst_rank = o.worst_rank;
        worst_witness = std::move(o.worst_witness);
      }
      if (!have_eq || o.best > best) best = o.best;
      have_eq = true;
    }
    eq_count += o.eq_count;
    classes.merge(o.classes);
  }
};

std::string canonical_key(const std::vector<Color>& col, const std::vector<std::vector<Vertex>>& autos) {
  std::string best;
  std::string cur(col.size(), '\0');
  for (const auto& p : autos) {
    for (std::size_t v = 0; v < col.size(); ++v) cur[p[v]] = static_cast<char>(col[v]);
    if (best.empty() || cur < best) best = cur;
  }
  return best;
}

PoAReport scan(const Graph& g, const TypeVector& t, Locality locality, bool classify, const EnumOptions& opts) {
  if (t.n() != g.n()) throw Error(ErrorCode::InconsistentColoring, "type vector does not sum to n");
  const std::int64_t total = count_colorings(t);
  if (total == std::numeric_limits<std::int64_t>::max() || total > opts.budget / std::max(1, g.n()))
    throw Error(ErrorCode::BudgetExceeded, std::to_string(total) + " colorings x " + std::to_string(g.n()) +
                                               " utility evaluations exceed the budget of " +
                                               std::to_string(opts.budget));
  std::vector<std::vector<Vertex>> autos;
  if (opts.symmetry_classes && classify) autos = grid_automorphisms(g);

  const WelfareKernel kernel(g);
  const std::int64_t chunk_min = 2048;
  const unsigned workers = static_cast<unsigned>(
      std::clamp<std::int64_t>((total + chunk_min - 1) / chunk_min, 1, std::max(1u, opts.jobs)));
  std::vector<Aggregate> parts(workers);

  auto work = [&](unsigned w) {
    const std::int64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    if (lo >= hi) return;
    Aggregate& agg = parts[w];
    std::vector<Color> col = unrank_coloring(t, lo).colors();
    for (std::int64_t rank = lo; rank < hi; ++rank) {
      Coloring c(col, t.k());
      Rational wf = kernel.welfare(c);
      if (!agg.have_opt || wf > agg.opt) {
        agg.have_opt = true;
        agg.opt = wf;
        agg.opt_rank = rank;
        agg.opt_witness = c;
      }
      if (classify && is_equilibrium_fast(g, c, locality)) {
        ++agg.eq_count;
        if (!agg.have_eq || wf < agg.worst) {
          agg.worst = wf;
          agg.worst_rank = rank;
          agg.worst_witness = c;
        }
        if (!agg.have_eq || wf > agg.best) agg.best = wf;
        agg.have_eq = true;
        if (!autos.empty()) agg.classes.insert(canonical_key(col, autos));
      }
      next_coloring(col);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  Aggregate all = std::move(parts[0]);
  for (unsigned w = 1; w < workers; ++w) all.merge(std::move(parts[w]));

  PoAReport r;
  r.locality = locality;
  r.types = t;
  r.colorings = total;
  r.opt_welfare = all.opt;
  r.opt_witness = all.opt_witness;
  r.equilibrium_count = all.eq_count;
  if (all.have_eq) {
    r.worst_eq_welfare = all.worst;
    r.worst_witness = all.worst_witness;
    r.best_eq_welfare = all.best;
    r.poa = Ratio::of(all.opt, all.worst);
  } else {
    r.poa = Ratio::undefined();
  }
  if (!autos.empty()) r.equilibrium_classes = static_cast<std::int64_t>(all.classes.size());
  return r;
}

}  // namespace

std::pair<Rational, Coloring> brute_force_optimum(const Graph& g, const TypeVector& t, const EnumOptions& opts) {
  PoAReport r = scan(g, t, Locality::Global, false, opts);
  return {r.opt_welfare, r.opt_witness};
}

PoAReport enumerate_equilibria(const Graph& g, const TypeVector& t, Locality locality, const EnumOptions& opts) {
  return scan(g, t, locality, true, opts);
}

PoAReport empirical_poa(const Graph& g, const TypeVector& t, Locality locality, const EnumOptions& opts) {
  return scan(g, t, locality, true, opts);
}

}  // namespace ssg
