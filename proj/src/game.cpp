#include "ssg/game.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ssg/error.hpp"

namespace ssg {

TypeVector::TypeVector(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty() || static_cast<int>(counts_.size()) > kMaxColors)
    throw Error(ErrorCode::InvalidParameter, "type vector needs 1.." + std::to_string(kMaxColors) + " colors");
  for (int c : counts_)
    if (c < 1) throw Error(ErrorCode::InvalidParameter, "type counts must be positive");
  n_ = std::accumulate(counts_.begin(), counts_.end(), 0);
}

TypeVector TypeVector::two(int n, int o) {
  if (o < 1 || o >= n) throw Error(ErrorCode::InvalidParameter, "two-color split needs 1 <= o < n");
  int lo = std::min(o, n - o);
  return TypeVector({lo, n - lo});
}

std::string TypeVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < counts_.size(); ++i) s += (i ? "," : "") + std::to_string(counts_[i]);
  return s;
}

Coloring::Coloring(std::vector<Color> colors, int k) : colors_(std::move(colors)), k_(k) {
  if (k < 1 || k > kMaxColors) throw Error(ErrorCode::InvalidParameter, "bad color count");
  for (Color c : colors_)
    if (c >= k) throw Error(ErrorCode::InvalidParameter, "color index out of range");
}

Coloring Coloring::blocks(const TypeVector& t) {
  std::vector<Color> col;
  col.reserve(t.n());
  for (int i = 0; i < t.k(); ++i) col.insert(col.end(), t[i], static_cast<Color>(i));
  return Coloring(std::move(col), t.k());
}

Coloring Coloring::parse(const std::string& text, int k_hint) {
  std::istringstream in(text);
  std::vector<Color> col;
  std::string tok;
  int maxc = -1;
  while (in >> tok) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != tok.size() || v < 0 || v >= kMaxColors)
      throw Error(ErrorCode::ParseError, "bad color token '" + tok + "'");
    col.push_back(static_cast<Color>(v));
    maxc = std::max(maxc, v);
  }
  if (col.empty()) throw Error(ErrorCode::ParseError, "empty coloring");
  return Coloring(std::move(col), std::max(k_hint, maxc + 1));
}

std::vector<int> Coloring::counts() const {
  std::vector<int> out(k_, 0);
  for (Color c : colors_) ++out[c];
  return out;
}

std::string Coloring::str() const {
  std::string s;
  for (std::size_t i = 0; i < colors_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(colors_[i]);
  }
  return s;
}

std::size_t ColoringHash::operator()(const Coloring& c) const {
  // FNV-1a over the color bytes.
  std::uint64_t h = 1469598103934665603ULL;
  for (Color x : c.colors()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Coloring random_coloring(const TypeVector& t, Rng& rng) {
  Coloring c = Coloring::blocks(t);
  std::vector<Color> col = c.colors();
  rng.shuffle(col);
  return Coloring(std::move(col), t.k());
}

void check_consistent(const Graph& g, const Coloring& c, const TypeVector& t) {
  if (c.n() != g.n())
    throw Error(ErrorCode::InconsistentColoring, "coloring has " + std::to_string(c.n()) + " entries, graph has " +
                                                     std::to_string(g.n()) + " vertices");
  if (t.n() != g.n()) throw Error(ErrorCode::InconsistentColoring, "type vector does not sum to n");
  std::vector<int> counts(std::max(c.k(), t.k()), 0);
  for (Color x : c.colors()) ++counts[x];
  for (int i = 0; i < static_cast<int>(counts.size()); ++i) {
    int want = i < t.k() ? t[i] : 0;
    if (counts[i] != want)
      throw Error(ErrorCode::InconsistentColoring, "color " + std::to_string(i) + " occurs " +
                                                       std::to_string(counts[i]) + " times, expected " +
                                                       std::to_string(want));
  }
}

int same_color_neighbors(const Graph& g, const Coloring& c, Vertex v) {
  int s = 0;
  for (Vertex w : g.neighbors(v)) s += c[w] == c[v];
  return s;
}

Rational utility(const Graph& g, const Coloring& c, Vertex v) {
  int d = g.degree(v);
  if (d == 0) return Rational(0);
  return Rational(same_color_neighbors(g, c, v), d);
}

Rational social_welfare(const Graph& g, const Coloring& c) {
  Rational sum;
  for (Vertex v = 0; v < g.n(); ++v) sum += utility(g, c, v);
  return sum;
}

std::int64_t phi(const Graph& g, const Coloring& c) {
  std::int64_t mono = 0;
  for (auto [u, v] : g.edges()) mono += c[u] == c[v];
  return mono;
}

PsiValue psi(const Graph& g, const Coloring& c) {
  PsiValue p;
  std::int64_t twice = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    int s = same_color_neighbors(g, c, v);
    twice += s;
    p.nonzero_count += s > 0;
  }
  p.phi = twice / 2;
  return p;
}

Order compare_psi(const PsiValue& a, const PsiValue& b) {
  if (a.phi != b.phi) return a.phi < b.phi ? Order::Less : Order::Greater;
  if (a.nonzero_count != b.nonzero_count) return a.nonzero_count < b.nonzero_count ? Order::Less : Order::Greater;
  return Order::Equal;
}

const char* order_name(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
  }
  return "?";
}

Coloring apply_swap(const Coloring& c, Vertex u, Vertex v) {
  if (c[u] == c[v])
    throw Error(ErrorCode::SameColorSwap, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                              " hold the same color");
  Coloring out = c;
  out.set(u, c[v]);
  out.set(v, c[u]);
  return out;
}

std::pair<Rational, Rational> swap_gain(const Graph& g, const Coloring& c, Vertex u, Vertex v) {
  if (c[u] == c[v])
    throw Error(ErrorCode::SameColorSwap, "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                              " hold the same color");
  auto after = [&](Vertex w) { return w == u ? c[v] : (w == v ? c[u] : c[w]); };
  // Agent from u now sits on v and vice versa.
  int su = 0, sv = 0;
  for (Vertex w : g.neighbors(v)) su += after(w) == c[u];
  for (Vertex w : g.neighbors(u)) sv += after(w) == c[v];
  Rational gu = Rational(su, g.degree(v)) - utility(g, c, u);
  Rational gv = Rational(sv, g.degree(u)) - utility(g, c, v);
  return {gu, gv};
}

WelfareKernel::WelfareKernel(const Graph& g) : g_(&g), weight_(g.n(), 0) {
  std::int64_t l = 1;
  for (Vertex v = 0; v < g.n(); ++v) {
    int d = std::max(1, g.degree(v));
    std::int64_t gg = std::gcd(l, static_cast<std::int64_t>(d));
    if (l / gg > (std::int64_t{1} << 40) / d) {
      l = 0;
      break;
    }
    l = l / gg * d;
  }
  scale_ = l;
  if (scale_ > 0)
    for (Vertex v = 0; v < g.n(); ++v) weight_[v] = g.degree(v) ? scale_ / g.degree(v) : 0;
}

std::int64_t WelfareKernel::scaled(const Coloring& c) const {
  std::int64_t s = 0;
  for (Vertex v = 0; v < g_->n(); ++v) s += same_color_neighbors(*g_, c, v) * weight_[v];
  return s;
}

Rational WelfareKernel::welfare(const Coloring& c) const {
  if (exact_integer()) return Rational(scaled(c), scale_);
  return social_welfare(*g_, c);
}

}  // namespace ssg

namespace ssg {

namespace {

constexpr std::int64_t kSat = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  return p > kSat ? kSat : static_cast<std::int64_t>(p);
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSat) return kSat;
  }
  return static_cast<std::int64_t>(r);
}

std::int64_t multinomial(const std::vector<int>& counts) {
  std::int64_t r = 1;
  int total = 0;
  for (int c : counts) {
    total += c;
    r = sat_mul(r, binom(total, c));
  }
  return r;
}

}  // namespace

std::int64_t count_colorings(const TypeVector& t) { return multinomial(t.counts()); }

Coloring unrank_coloring(const TypeVector& t, std::int64_t rank) {
  std::vector<int> left = t.counts();
  std::vector<Color> col;
  col.reserve(t.n());
  for (int i = 0; i < t.n(); ++i) {
    for (int c = 0; c < t.k(); ++c) {
      if (left[c] == 0) continue;
      --left[c];
      std::int64_t below = multinomial(left);
      if (rank < below) {
        col.push_back(static_cast<Color>(c));
        break;
      }
      rank -= below;
      ++left[c];
    }
  }
  if (static_cast<int>(col.size()) != t.n()) throw Error(ErrorCode::InvalidParameter, "coloring rank out of range");
  return Coloring(std::move(col), t.k());
}

bool next_coloring(std::vector<Color>& colors) { return std::next_permutation(colors.begin(), colors.end()); }

void for_each_coloring(const TypeVector& t, const std::function<void(const Coloring&)>& fn) {
  Coloring c = Coloring::blocks(t);
  std::vector<Color> col = c.colors();
  do {
    fn(Coloring(col, t.k()));
  } while (next_coloring(col));
}

}  // namespace ssg
