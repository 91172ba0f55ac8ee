#include <doctest.h>

#include <optional>
#include <tuple>

#include "oracle.hpp"
#include "ssg/equilibria.hpp"
#include "ssg/error.hpp"

using namespace ssg;

namespace {

Coloring col(std::vector<int> c, int k = 2) { return Coloring(std::vector<Color>(c.begin(), c.end()), k); }

std::vector<int> ints(const Coloring& c) { return {c.colors().begin(), c.colors().end()}; }

bool oracle_eq(const Graph& g, const Coloring& c, Locality l) {
  return oracle::is_eq(oracle::adjacency(g), ints(c), l == Locality::Local);
}

// Corner and middle utilities at least 1/2, border at least 2/3.
bool grid_premise(const Graph& g, const Coloring& c) {
  for (Vertex v = 0; v < g.n(); ++v) {
    Rational need = vertex_class(g, v) == VertexClass::Border ? Rational(2, 3) : Rational(1, 2);
    if (utility(g, c, v) < need) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_equilibrium examples") {
  Graph c6 = make_cycle(6);
  CHECK(is_equilibrium(c6, col({0, 0, 0, 1, 1, 1}), Locality::Global).is_equilibrium);
  CHECK(check_characterization(c6, col({0, 0, 0, 1, 1, 1})));
  auto mid = is_equilibrium(make_path(3), col({1, 0, 1}), Locality::Global);
  CHECK(mid.is_equilibrium);
  CHECK_FALSE(mid.witness);

  // Two zero-utility agents of different colors on non-adjacent vertices.
  Graph g = make_grid(2, 3, GridKind::Four);
  Coloring bad = col({0, 1, 1, 1, 1, 0});
  CHECK(utility(g, bad, 0).is_zero());
  CHECK(utility(g, bad, 5).is_zero());
  auto v = is_equilibrium(g, bad, Locality::Global);
  REQUIRE_FALSE(v.is_equilibrium);
  REQUIRE(v.witness);
  CHECK(v.witness->second.profitable);
  CHECK(oracle::profitable(oracle::adjacency(g), ints(bad), v.witness->first.u, v.witness->first.v));
  CHECK_FALSE(check_characterization(g, bad));

  CHECK_THROWS_AS(check_characterization(g, Coloring(std::vector<Color>{0, 1, 2, 0, 1, 2}, 3)), Error);
}

TEST_CASE("witness is the lexicographically first profitable pair") {
  Rng rng(21);
  for (int it = 0; it < 300; ++it) {
    Graph g = random_connected_graph(7, 0.35, rng);
    Coloring c = random_coloring(TypeVector({3, 4}), rng);
    auto a = oracle::adjacency(g);
    std::optional<std::pair<int, int>> first;
    for (int u = 0; u < 7 && !first; ++u)
      for (int w = u + 1; w < 7 && !first; ++w)
        if (oracle::profitable(a, ints(c), u, w)) first = {u, w};
    auto verdict = is_equilibrium(g, c, Locality::Global);
    CHECK(verdict.is_equilibrium == !first);
    if (first) CHECK(std::pair{verdict.witness->first.u, verdict.witness->first.v} == *first);
  }
}

TEST_CASE("characterization agrees with the direct check") {
  Rng rng(8);
  int stable = 0;
  for (int it = 0; it < 10000; ++it) {
    int n = 3 + static_cast<int>(rng.below(8));
    Graph g = it % 3 == 0 ? random_tree(n, rng) : random_connected_graph(n, 0.2 + 0.5 * rng.uniform01(), rng);
    int o = 1 + static_cast<int>(rng.below(n - 1));
    Coloring c = random_coloring(TypeVector({o, n - o}), rng);
    bool direct = is_equilibrium(g, c, Locality::Global).is_equilibrium;
    REQUIRE(direct == check_characterization(g, c));
    CHECK(direct == is_equilibrium_fast(g, c, Locality::Global));
    CHECK(is_equilibrium_fast(g, c, Locality::Local) == oracle_eq(g, c, Locality::Local));
    if (direct) {
      ++stable;
      CHECK(is_equilibrium(g, c, Locality::Local).is_equilibrium);
    }
  }
  CHECK(stable > 100);
}

TEST_CASE("tree local equilibria") {
  Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  Coloring s = build_tree_lse(star, TypeVector({2, 2}));
  CHECK(s == col({1, 0, 0, 1}));
  CHECK(is_equilibrium(star, s, Locality::Local).is_equilibrium);

  Coloring p = build_tree_lse(make_path(5), TypeVector({2, 3}));
  CHECK(p == col({1, 1, 1, 0, 0}));
  CHECK(oracle_eq(make_path(5), p, Locality::Local));

  Rng rng(4);
  for (int it = 0; it < 500; ++it) {
    int n = 1 + static_cast<int>(rng.below(14));
    Graph t = random_tree(n, rng);
    int k = 1 + static_cast<int>(rng.below(std::min(n, 4)));
    std::vector<int> counts(k, 1);
    for (int i = k; i < n; ++i) ++counts[rng.below(k)];
    Coloring c = build_tree_lse(t, TypeVector(counts));
    CHECK(c.counts() == counts);
    CHECK(oracle_eq(t, c, Locality::Local));
  }
  CHECK_THROWS_AS(build_tree_lse(make_cycle(5), TypeVector({2, 3})), Error);
}

TEST_CASE("triangle rows") {
  CHECK(triangle_rows(5, 0) == std::vector<int>{5, 4, 3, 2, 1});
  std::vector<int> r = triangle_rows(5, 1);
  CHECK(std::accumulate(r.begin(), r.end(), 0) == 16);
  for (int x = 5; x <= 8; ++x)
    for (int y = 0; y <= x; ++y) {
      auto rows = triangle_rows(x, y);
      CHECK(std::accumulate(rows.begin(), rows.end(), 0) == x * (x + 1) / 2 + y);
      CHECK(std::is_sorted(rows.rbegin(), rows.rend()));
    }
}

TEST_CASE("8-grid equilibria") {
  auto fill = build_8grid_eq_detailed(3, 4, 5);
  CHECK(fill.method == Grid8Method::ConsecutiveFill);
  CHECK(oracle_eq(make_grid(3, 4, GridKind::Eight), fill.coloring, Locality::Global));

  auto tri = build_8grid_eq_detailed(10, 10, 15);
  CHECK(tri.method == Grid8Method::Triangle);
  CHECK(is_equilibrium(make_grid(10, 10, GridKind::Eight), tri.coloring, Locality::Global).is_equilibrium);

  auto almost = build_8grid_eq_detailed(9, 9, 16);
  CHECK(almost.method == Grid8Method::AlmostTriangle);
  CHECK(almost.coloring.counts()[0] == 16);
  CHECK(is_equilibrium(make_grid(9, 9, GridKind::Eight), almost.coloring, Locality::Global).is_equilibrium);

  for (int l = 2; l <= 6; ++l)
    for (int h = l; h <= 7; ++h) {
      Graph g = make_grid(l, h, GridKind::Eight);
      for (int o = 1; o <= l * h / 2; ++o) {
        Coloring c = build_8grid_eq(l, h, o);
        CHECK(c.counts()[0] == o);
        CHECK_MESSAGE(is_equilibrium_fast(g, c, Locality::Global), l, "x", h, " o=", o);
      }
    }
  // Transposed request: more rows than columns.
  Coloring t = build_8grid_eq(6, 3, 5);
  CHECK(is_equilibrium_fast(make_grid(6, 3, GridKind::Eight), t, Locality::Global));
}

TEST_CASE("4-grid frames") {
  CHECK_THROWS_AS(build_4grid_frame(5), Error);
  for (int n : {4, 6, 8, 10}) {
    Graph g = make_grid(n, n, GridKind::Four);
    Coloring c = build_4grid_frame(n);
    CHECK(c.counts()[0] == n * n / 2);
    CHECK(grid_premise(g, c));
    CHECK(is_equilibrium_fast(g, c, Locality::Global));
  }
  Graph g6 = make_grid(6, 6, GridKind::Four);
  Coloring f6 = build_4grid_frame(6);
  for (Vertex v = 0; v < 36; ++v)
    if (vertex_class(g6, v) == VertexClass::Middle) CHECK(same_color_neighbors(g6, f6, v) == 2);

  Graph g8 = make_grid(8, 8, GridKind::Four);
  Rational ratio = social_welfare(g8, half_plane_witness(8, 8)) / social_welfare(g8, build_4grid_frame(8));
  CHECK(ratio >= Rational(3, 2));
  CHECK(ratio <= Rational(2));
}

TEST_CASE("4-grid premise implies equilibrium on random colorings") {
  Rng rng(12);
  int hits = 0;
  for (int it = 0; it < 20000; ++it) {
    int r = 2 + static_cast<int>(rng.below(3)), cc = 2 + static_cast<int>(rng.below(4));
    Graph g = make_grid(r, cc, GridKind::Four);
    int o = 1 + static_cast<int>(rng.below(r * cc - 1));
    Coloring c = random_coloring(TypeVector({o, r * cc - o}), rng);
    if (!grid_premise(g, c)) continue;
    ++hits;
    CHECK(is_equilibrium_fast(g, c, Locality::Global));
  }
  CHECK(hits > 20);
}

TEST_CASE("cycle and path worst profiles") {
  CHECK(social_welfare(make_cycle(12), build_cycle_worst(12, 4)) == Rational(8));
  CHECK(social_welfare(make_cycle(11), build_cycle_worst(11, 5)) == Rational(7));
  CHECK(social_welfare(make_cycle(6), build_cycle_worst(6, 2)) == Rational(4));
  CHECK(social_welfare(make_path(9), build_path_worst(9, 4)) == Rational(6));
  CHECK(social_welfare(make_path(10), build_path_worst(10, 3)) == Rational(8));
  CHECK(social_welfare(make_path(4), build_path_worst(4, 1)) == Rational(3, 2));
  CHECK_THROWS_AS(build_cycle_worst(6, 1), Error);
  CHECK_THROWS_AS(build_path_worst(3, 1), Error);

  for (int n = 4; n <= 13; ++n)
    for (int o = 2; o <= n / 2; ++o) {
      int b = n - o, beta = o % 2;
      Graph g = make_cycle(n);
      Coloring c = build_cycle_worst(n, o);
      CHECK(c.counts()[0] == o);
      CHECK(oracle_eq(g, c, Locality::Global));
      CHECK(social_welfare(g, c) == Rational(b + beta));
      auto brute = oracle::poa(oracle::adjacency(g), o, false);
      CHECK(brute.worst == Rational(b + beta));
    }
  for (int n = 4; n <= 13; ++n)
    for (int o = 1; o <= n / 2; ++o) {
      int b = n - o, alpha = o / 2, beta = o % 2;
      Graph g = make_path(n);
      Coloring c = build_path_worst(n, o);
      CHECK(c.counts()[0] == o);
      CHECK(oracle_eq(g, c, Locality::Global));
      Rational expect = o == 1 ? Rational(2 * n - 5, 2) : Rational(b <= 2 * alpha + 1 ? b + 1 + beta : b + beta);
      CHECK(social_welfare(g, c) == expect);
      CHECK(oracle::poa(oracle::adjacency(g), o, false).worst == expect);
    }
}

TEST_CASE("regular gadgets") {
  CHECK(social_welfare(make_regular_gadget(3, 2), build_regular_gadget_eq(3, 2)) == Rational(8, 3));
  CHECK(social_welfare(make_regular_gadget(4, 3), build_regular_gadget_eq(4, 3)) == Rational(6));
  Graph g34 = make_regular_gadget(3, 4);
  Coloring c34 = build_regular_gadget_eq(3, 4);
  for (Vertex v = 0; v < g34.n(); ++v) CHECK(utility(g34, c34, v) == Rational(1, 3));

  for (int d = 3; d <= 6; ++d)
    for (int q = 2; q <= 4; ++q) {
      Graph g = make_regular_gadget(d, q);
      Coloring c = build_regular_gadget_eq(d, q);
      Rational expect = d % 2 ? Rational(q * (d * d - 1), 2 * d) : Rational(q * d, 2);
      CHECK(social_welfare(g, c) == expect);
      CHECK(is_equilibrium_fast(g, c, Locality::Local));
      Coloring opt = regular_gadget_opt_witness(d, q);
      CHECK(opt.counts() == c.counts());
    }
}

TEST_CASE("pendant cycles") {
  for (auto [o, d, w] : std::vector<std::tuple<int, int, Rational>>{{4, 4, Rational(2)}, {3, 3, Rational(2)}, {6, 3, Rational(4)}}) {
    Graph g = make_cycle_with_pendants(o, d);
    Coloring c = build_pendant_eq(o, d);
    CHECK(social_welfare(g, c) == w);
    CHECK(oracle_eq(g, c, Locality::Local));
    for (Vertex v = 0; v < g.n(); ++v)
      if (c[v] == 1) CHECK(utility(g, c, v).is_zero());
  }
}

TEST_CASE("2xh alternating columns") {
  CHECK(social_welfare(make_grid(2, 6, GridKind::Four), build_2xh_alternating(6)) == Rational(14, 3));
  Graph g12 = make_grid(2, 12, GridKind::Four);
  CHECK(social_welfare(g12, build_2xh_alternating(12)) == Rational(26, 3));
  CHECK(oracle_eq(g12, build_2xh_alternating(12), Locality::Local));
  CHECK(oracle_eq(make_grid(2, 6, GridKind::Four), build_2xh_alternating(6), Locality::Local));
  CHECK(social_welfare(g12, half_plane_witness(2, 12)) == Rational(3 * 24 - 4, 3));
  CHECK_THROWS_AS(build_2xh_alternating(8), Error);
}

TEST_CASE("double star search") {
  DoubleStarResult r = build_double_star_eq(4);
  CHECK(r.graph.n() % 2 == 0);
  CHECK(r.coloring.counts()[0] == r.graph.n() / 2);
  CHECK(is_equilibrium(r.graph, r.coloring, Locality::Local).is_equilibrium);
  CHECK(social_welfare(r.graph, r.coloring) == r.welfare);
  CHECK(r.positive_utility_agents == 2);
  int o = r.graph.n() / 2;
  CHECK(r.target == Rational(1, 2) + Rational(1, o - 1));
  // Independent minimum over all balanced local equilibria of the reported graph.
  auto brute = oracle::poa(oracle::adjacency(r.graph), o, true);
  CHECK(brute.worst == r.welfare);
  CHECK(r.matches_target == (r.welfare == r.target));
  // The shared leaf has degree 2, so no balanced split of this graph reaches n - 4/n.
  CHECK(brute.opt < Rational(r.graph.n()) - Rational(4, r.graph.n()));
  CHECK(r.welfare == Rational(1, 2) + Rational(1, o));
}
