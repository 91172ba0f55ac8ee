#include "ssg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ssg/error.hpp"

namespace ssg {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::InvalidParameter, msg); }

bool connected(int n, const std::vector<int>& offsets, const std::vector<Vertex>& nbrs) {
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (int i = offsets[v]; i < offsets[v + 1]; ++i) {
      Vertex w = nbrs[i];
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<Edge> edges, std::optional<GridMeta> grid) {
  if (n < 1) invalid("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      invalid("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) invalid("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) invalid("duplicate edge");

  Graph g;
  g.n_ = n;
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.nbrs_.resize(2 * edges.size());
  std::vector<int> pos(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.nbrs_[pos[u]++] = v;
    g.nbrs_[pos[v]++] = u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
  if (!connected(n, g.offsets_, g.nbrs_)) invalid("graph is disconnected");
  g.max_degree_ = *std::max_element(deg.begin(), deg.end());
  g.min_degree_ = *std::min_element(deg.begin(), deg.end());
  if (grid) {
    if (grid->rows < 1 || grid->cols < 1 || grid->rows * grid->cols != n)
      invalid("grid metadata does not match vertex count");
  }
  g.grid_ = grid;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph make_path(int n) {
  if (n < 1) invalid("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

Graph make_cycle(int n) {
  if (n < 3) invalid("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

Graph make_grid(int rows, int cols, GridKind kind) {
  if (rows < 1 || cols < 1 || rows * cols < 2) invalid("grid needs rows, cols >= 1 and at least 2 cells");
  std::vector<Edge> e;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
      if (kind == GridKind::Eight && r + 1 < rows) {
        if (c + 1 < cols) e.emplace_back(id(r, c), id(r + 1, c + 1));
        if (c > 0) e.emplace_back(id(r, c), id(r + 1, c - 1));
      }
    }
  }
  return Graph::from_edges(rows * cols, std::move(e), GridMeta{rows, cols, kind});
}

Graph make_regular_gadget(int delta, int q) {
  if (delta < 3 || q < 2) invalid("regular gadget needs delta >= 3 and q >= 2");
  const int s = delta + 1;
  std::vector<Edge> e;
  for (int i = 0; i < q; ++i) {
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b)
        if (!(a == 0 && b == delta)) e.emplace_back(i * s + a, i * s + b);
    e.emplace_back(i * s + delta, ((i + 1) % q) * s);
  }
  return Graph::from_edges(q * s, std::move(e));
}

Graph make_cycle_with_pendants(int o, int delta) {
  if (o < 3 || delta < 3) invalid("cycle with pendants needs o >= 3 and delta >= 3");
  const int per = delta - 2;
  std::vector<Edge> e;
  for (int i = 0; i < o; ++i) e.emplace_back(i, (i + 1) % o);
  int next = o;
  for (int i = 0; i < o; ++i)
    for (int j = 0; j < per; ++j) e.emplace_back(i, next++);
  return Graph::from_edges(next, std::move(e));
}

Graph make_double_star(int leaves_per_star) {
  if (leaves_per_star < 2) invalid("double star needs leaves_per_star >= 2");
  return make_double_star(leaves_per_star - 1, leaves_per_star - 1);
}

Graph make_double_star(int private_left, int private_right) {
  if (private_left < 0 || private_right < 0) invalid("negative leaf count");
  std::vector<Edge> e{{0, 1}, {1, 2}};
  int next = 3;
  for (int i = 0; i < private_left; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < private_right; ++i) e.emplace_back(2, next++);
  return Graph::from_edges(next, std::move(e));
}

Graph random_tree(int n, Rng& rng) {
  if (n < 1) invalid("tree needs n >= 1");
  // Random recursive tree on a shuffled labelling.
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(label[i], label[rng.below(i)]);
  return Graph::from_edges(n, std::move(e));
}

Graph random_connected_graph(int n, double p, Rng& rng) {
  Graph t = random_tree(n, rng);
  std::vector<Edge> e = t.edges();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!t.adjacent(u, v) && rng.uniform01() < p) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> Error {
    return Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw fail("missing header");
  long long n = -1, m = -1;
  {
    std::istringstream h(line);
    std::string extra;
    if (!(h >> n >> m) || (h >> extra) || n < 1 || m < 0) throw fail("expected header 'n m'");
  }
  std::optional<GridMeta> grid;
  std::vector<Edge> edges;
  while (next_line()) {
    std::istringstream ls(line);
    if (line[line.find_first_not_of(" \t")] == '#') {
      std::string hash, word, kind;
      int rows = 0, cols = 0;
      ls >> hash >> word;
      if (word != "grid") continue;
      if (!edges.empty() || grid) throw fail("grid comment must follow the header");
      if (!(ls >> rows >> cols >> kind) || (kind != "4" && kind != "8"))
        throw fail("expected '# grid rows cols 4|8'");
      grid = GridMeta{rows, cols, kind == "4" ? GridKind::Four : GridKind::Eight};
      continue;
    }
    long long u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) throw fail("expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range");
    if (u == v) throw fail("self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::ParseError, "header declares " + std::to_string(m) + " edges, found " +
                                           std::to_string(edges.size()));
  Graph g;
  try {
    g = Graph::from_edges(static_cast<int>(n), edges, grid);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (grid) {
    Graph ref = make_grid(grid->rows, grid->cols, grid->kind);
    if (!(ref == g)) throw Error(ErrorCode::ParseError, "edges do not match the declared grid");
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  if (const auto& gm = g.grid())
    out << "# grid " << gm->rows << ' ' << gm->cols << ' ' << (gm->kind == GridKind::Four ? 4 : 8) << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

VertexClass vertex_class(const Graph& g, Vertex v) {
  const auto& gm = g.grid();
  if (!gm) throw Error(ErrorCode::MissingGridMetadata, "vertex_class needs a grid graph");
  if (v < 0 || v >= g.n()) invalid("vertex out of range");
  int r = v / gm->cols, c = v % gm->cols;
  bool row_edge = r == 0 || r == gm->rows - 1;
  bool col_edge = c == 0 || c == gm->cols - 1;
  if (row_edge && col_edge) return VertexClass::Corner;
  if (row_edge || col_edge) return VertexClass::Border;
  return VertexClass::Middle;
}

const char* vertex_class_name(VertexClass c) {
  switch (c) {
    case VertexClass::Corner: return "corner";
    case VertexClass::Border: return "border";
    case VertexClass::Middle: return "middle";
  }
  return "?";
}

int regularity_gap(const Graph& g) { return g.max_degree() - g.min_degree(); }

bool is_tree(const Graph& g) { return g.m() == g.n() - 1; }

}  // namespace ssg
