#include "ssg/equilibria.hpp"

#include <algorithm>

#include "ssg/analysis.hpp"
#include "ssg/error.hpp"

namespace ssg {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidParameter, msg); }

}  // namespace

EquilibriumVerdict is_equilibrium(const Graph& g, const Coloring& c, Locality locality) {
  EquilibriumVerdict verdict;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (c[u] == c[v]) continue;
      bool local = g.adjacent(u, v);
      if (locality == Locality::Local && !local) continue;
      if (is_profitable(g, c, u, v)) {
        verdict.is_equilibrium = false;
        verdict.witness = ProfitableSwap{SwapCandidate{u, v, local}, classify_swap(g, c, u, v)};
        return verdict;
      }
    }
  }
  return verdict;
}

bool is_equilibrium_fast(const Graph& g, const Coloring& c, Locality locality) {
  for (Vertex u = 0; u < g.n(); ++u) {
    if (locality == Locality::Local) {
      for (Vertex v : g.neighbors(u))
        if (v > u && is_profitable(g, c, u, v)) return false;
    } else {
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (is_profitable(g, c, u, v)) return false;
    }
  }
  return true;
}

bool check_characterization(const Graph& g, const Coloring& c) {
  if (c.k() != 2) throw Error(ErrorCode::WrongK, "the pairwise characterization needs exactly two colors");
  std::vector<Rational> util(g.n());
  for (Vertex v = 0; v < g.n(); ++v) util[v] = utility(g, c, v);
  for (Vertex i = 0; i < g.n(); ++i) {
    for (Vertex j = i + 1; j < g.n(); ++j) {
      if (c[i] == c[j]) continue;
      int dmin = std::min(g.degree(i), g.degree(j));
      Rational rhs = Rational(1) - Rational(g.adjacent(i, j) ? 1 : 0, dmin);
      if (util[i] + util[j] < rhs) return false;
    }
  }
  return true;
}

Coloring build_tree_lse(const Graph& tree, const TypeVector& t) {
  if (!is_tree(tree)) throw Error(ErrorCode::NotATree, "graph has a cycle");
  if (t.n() != tree.n()) throw Error(ErrorCode::InconsistentColoring, "type vector does not sum to n");
  std::vector<Vertex> order;
  order.reserve(tree.n());
  std::vector<std::pair<Vertex, std::size_t>> stack{{0, 0}};
  std::vector<Vertex> parent(tree.n(), -1);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    auto nb = tree.neighbors(v);
    if (i < nb.size()) {
      Vertex w = nb[i++];
      if (w != parent[v]) {
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
      continue;
    }
    order.push_back(v);
    stack.pop_back();
  }
  std::vector<Color> col(tree.n());
  std::size_t pos = 0;
  for (int color = 0; color < t.k(); ++color)
    for (int j = 0; j < t[color]; ++j) col[order[pos++]] = static_cast<Color>(color);
  return Coloring(std::move(col), t.k());
}

Coloring build_4grid_frame(int n) {
  if (n < 4 || n % 2) invalid("frame coloring needs an even n >= 4");
  std::vector<Color> col(n * n, 0);
  for (int i = 1; i <= n / 2; ++i) {
    const int off = i - 1, s = n - 2 * off, last = off + s - 1;
    const Color basic = i % 2 ? 0 : 1, other = 1 - basic;
    for (int r = off; r <= last; ++r) {
      for (int c = off; c <= last; ++c) {
        if (r != off && r != last && c != off && c != last) continue;
        bool left = c == off;
        bool right_inner = c == last && r != off && r != last;
        col[r * n + c] = left || right_inner ? basic : other;
      }
    }
  }
  return Coloring(std::move(col), 2);
}

Coloring build_cycle_worst(int n, int o) {
  if (n < 3 || o < 2 || 2 * o > n) invalid("cycle worst profile needs n >= 3 and 2 <= o <= n/2");
  const int alpha = o / 2, beta = o % 2, b = n - o;
  std::vector<Color> col;
  for (int i = 0; i < alpha; ++i) {
    bool last = i == alpha - 1;
    col.insert(col.end(), last ? 2 + beta : 2, 0);
    col.insert(col.end(), last ? b - 2 * (alpha - 1) : 2, 1);
  }
  return Coloring(std::move(col), 2);
}

Coloring build_path_worst(int n, int o) {
  if (n < 4 || o < 1 || 2 * o > n) invalid("path worst profile needs n >= 4 and 1 <= o <= n/2");
  std::vector<Color> col;
  if (o == 1) {
    col.assign(n, 1);
    col[1] = 0;
    return Coloring(std::move(col), 2);
  }
  const int alpha = o / 2, beta = o % 2, b = n - o;
  auto orange_run = [&](int i) { return i == alpha - 1 ? 2 + beta : 2; };
  if (b >= 2 * alpha + 2) {
    // Blue at both ends: B O B O ... O B.
    const int ends = b - 2 * (alpha - 1);
    col.insert(col.end(), 2, 1);
    for (int i = 0; i < alpha; ++i) {
      col.insert(col.end(), orange_run(i), 0);
      col.insert(col.end(), i == alpha - 1 ? ends - 2 : 2, 1);
    }
  } else {
    // O B O B ... O B.
    for (int i = 0; i < alpha; ++i) {
      col.insert(col.end(), orange_run(i), 0);
      col.insert(col.end(), i == alpha - 1 ? b - 2 * (alpha - 1) : 2, 1);
    }
  }
  return Coloring(std::move(col), 2);
}

Coloring build_regular_gadget_eq(int delta, int q) {
  if (delta < 3 || q < 2) invalid("regular gadget needs delta >= 3 and q >= 2");
  const int s = delta + 1, blue = (delta + 2) / 2;
  std::vector<Color> col(q * s);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < s; ++j) col[i * s + j] = j < blue ? 1 : 0;
  return Coloring(std::move(col), 2);
}

Coloring regular_gadget_opt_witness(int delta, int q) {
  if (delta < 3 || q < 2) invalid("regular gadget needs delta >= 3 and q >= 2");
  const int s = delta + 1, orange = q * (s - (delta + 2) / 2);
  std::vector<Color> col(q * s, 1);
  std::fill(col.begin(), col.begin() + orange, 0);
  return Coloring(std::move(col), 2);
}

Coloring build_pendant_eq(int o, int delta) {
  if (o < 3 || delta < 3) invalid("pendant instance needs o >= 3 and delta >= 3");
  const int n = o * (delta - 1);
  std::vector<Color> col(n, 1);
  std::fill(col.begin(), col.begin() + o, 0);
  return Coloring(std::move(col), 2);
}

Coloring build_2xh_alternating(int h) {
  if (h < 6 || h % 6) invalid("alternating 2xh profile needs h a positive multiple of 6");
  std::vector<Color> col(2 * h);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < h; ++c) col[r * h + c] = c % 2 ? 1 : 0;
  return Coloring(std::move(col), 2);
}

Coloring half_plane_witness(int rows, int cols) {
  if (rows < 1 || cols < 2 || cols % 2) invalid("half-plane split needs an even column count");
  std::vector<Color> col(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) col[r * cols + c] = c < cols / 2 ? 0 : 1;
  return Coloring(std::move(col), 2);
}

DoubleStarResult build_double_star_eq(int leaves_per_star) {
  if (leaves_per_star < 2) invalid("double star needs leaves_per_star >= 2");
  const int L = leaves_per_star;
  std::vector<std::pair<int, int>> variants{{L - 1, L}, {L - 2, L - 1}};
  std::optional<DoubleStarResult> best;
  for (auto [a, b] : variants) {
    if (a < 0) continue;
    Graph g = make_double_star(a, b);
    const int n = g.n(), o = n / 2;
    TypeVector t({o, n - o});
    PoAReport rep = enumerate_equilibria(g, t, Locality::Local);
    if (!rep.worst_eq_welfare) continue;
    DoubleStarResult r;
    r.graph = g;
    r.coloring = *rep.worst_witness;
    r.private_left = a;
    r.private_right = b;
    r.welfare = *rep.worst_eq_welfare;
    r.target = Rational(1, 2) + Rational(1, o - 1);
    r.matches_target = r.welfare == r.target;
    for (Vertex v = 0; v < n; ++v) r.positive_utility_agents += !utility(g, r.coloring, v).is_zero();
    if (r.matches_target) return r;
    auto gap = [](const DoubleStarResult& x) {
      Rational d = x.welfare - x.target;
      return d < Rational(0) ? -d : d;
    };
    if (!best || gap(r) < gap(*best)) best = std::move(r);
  }
  if (!best) throw Error(ErrorCode::ConstructionFailed, "no balanced double-star variant has a local equilibrium");
  return *best;
}

}  // namespace ssg
