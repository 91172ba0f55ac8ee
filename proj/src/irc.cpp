#include <algorithm>
#include <deque>
#include <unordered_map>

#include "ssg/dynamics.hpp"
#include "ssg/error.hpp"

namespace ssg {

namespace {

std::string key_of(const Coloring& c) { return std::string(c.colors().begin(), c.colors().end()); }

std::vector<std::pair<Vertex, Vertex>> profitable_pairs(const Graph& g, const Coloring& c, Locality locality) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (locality == Locality::Local) {
      for (Vertex v : g.neighbors(u))
        if (v > u && is_profitable(g, c, u, v)) out.emplace_back(u, v);
    } else {
      for (Vertex v = u + 1; v < g.n(); ++v)
        if (is_profitable(g, c, u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

// Iterative Tarjan; returns the component id of every node.
std::vector<int> strongly_connected(const std::vector<std::vector<int>>& adj, std::vector<int>& comp_size) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0, ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (index[s] >= 0) continue;
    call.emplace_back(s, 0);
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i == 0 && index[v] < 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      if (i < adj[v].size()) {
        int w = adj[v][i++];
        if (index[w] < 0) {
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int size = 0;
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
          ++size;
          if (w == v) break;
        }
        comp_size.push_back(size);
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

IrcSearch exhaustive(const Graph& g, const TypeVector& t, Locality locality, const IrcOptions& opts) {
  const std::int64_t total = count_colorings(t);
  if (total > opts.max_states)
    throw Error(ErrorCode::BudgetExceeded, "state space has " + std::to_string(total) + " colorings, budget " +
                                               std::to_string(opts.max_states));
  std::vector<Coloring> states;
  states.reserve(total);
  std::unordered_map<std::string, int> index;
  for_each_coloring(t, [&](const Coloring& c) {
    index.emplace(key_of(c), static_cast<int>(states.size()));
    states.push_back(c);
  });
  const int n = static_cast<int>(states.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<std::vector<std::pair<Vertex, Vertex>>> moves(n);
  for (int i = 0; i < n; ++i) {
    moves[i] = profitable_pairs(g, states[i], locality);
    for (auto [u, v] : moves[i]) adj[i].push_back(index.at(key_of(apply_swap(states[i], u, v))));
  }

  IrcSearch result;
  result.states_explored = n;
  result.exhaustive = true;
  std::vector<int> comp_size;
  std::vector<int> comp = strongly_connected(adj, comp_size);

  // Shortest cycle through each node of a non-trivial component.
  std::vector<int> best;
  std::vector<int> dist(n, -1), parent(n, -1);
  for (int s = 0; s < n; ++s) {
    if (comp_size[comp[s]] < 2) continue;
    std::vector<int> touched{s};
    std::deque<int> queue{s};
    dist[s] = 0;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      int v = queue.front();
      queue.pop_front();
      if (!best.empty() && dist[v] + 1 >= static_cast<int>(best.size())) break;
      for (int w : adj[v]) {
        if (comp[w] != comp[s]) continue;
        if (w == s) {
          closing = v;
          break;
        }
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          touched.push_back(w);
          queue.push_back(w);
        }
      }
    }
    if (closing >= 0) {
      std::vector<int> path;
      for (int v = closing; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());  // s ... closing
      if (best.empty() || path.size() < best.size()) best = path;
    }
    for (int v : touched) dist[v] = parent[v] = -1;
  }
  if (best.empty()) return result;

  ImprovingCycle cycle;
  best.push_back(best.front());
  for (std::size_t i = 0; i < best.size(); ++i) cycle.colorings.push_back(states[best[i]]);
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    const Coloring& from = states[best[i]];
    for (auto [u, v] : moves[best[i]]) {
      if (apply_swap(from, u, v) == states[best[i + 1]]) {
        cycle.swaps.push_back({u, v, g.adjacent(u, v)});
        break;
      }
    }
  }
  result.cycle = std::move(cycle);
  return result;
}

IrcSearch seeded(const Graph& g, const TypeVector& t, Locality locality, const IrcOptions& opts) {
  IrcSearch result;
  // 1 = on the DFS stack, 2 = finished.
  std::unordered_map<std::string, char> state;
  Rng rng(opts.seed);
  struct Frame {
    Coloring c;
    std::vector<std::pair<Vertex, Vertex>> moves;
    std::size_t next = 0;
  };
  for (int start = 0; start < opts.seeded_starts && result.states_explored < opts.max_states; ++start) {
    Coloring c0 = random_coloring(t, rng);
    if (state.count(key_of(c0))) continue;
    std::vector<Frame> stack;
    stack.push_back({c0, profitable_pairs(g, c0, locality)});
    state[key_of(c0)] = 1;
    ++result.states_explored;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next == f.moves.size()) {
        state[key_of(f.c)] = 2;
        stack.pop_back();
        continue;
      }
      auto [u, v] = f.moves[f.next++];
      Coloring nxt = apply_swap(f.c, u, v);
      std::string k = key_of(nxt);
      auto it = state.find(k);
      if (it != state.end() && it->second == 1) {
        ImprovingCycle cycle;
        std::size_t first = 0;
        while (!(stack[first].c == nxt)) ++first;
        for (std::size_t i = first; i < stack.size(); ++i) {
          cycle.colorings.push_back(stack[i].c);
          auto [a, b] = stack[i].moves[stack[i].next - 1];
          cycle.swaps.push_back({a, b, g.adjacent(a, b)});
        }
        cycle.colorings.push_back(nxt);
        result.cycle = std::move(cycle);
        return result;
      }
      if (it != state.end()) continue;
      if (result.states_explored >= opts.max_states) break;
      state[k] = 1;
      ++result.states_explored;
      auto moves = profitable_pairs(g, nxt, locality);
      stack.push_back({std::move(nxt), std::move(moves)});
    }
  }
  return result;
}

}  // namespace

IrcSearch find_irc(const Graph& g, const TypeVector& t, Locality locality, const IrcOptions& opts) {
  if (t.n() != g.n()) throw Error(ErrorCode::InconsistentColoring, "type vector does not sum to n");
  if (opts.max_states < 1) throw Error(ErrorCode::InvalidParameter, "max_states must be positive");
  return opts.seeded_starts > 0 ? seeded(g, t, locality, opts) : exhaustive(g, t, locality, opts);
}

bool verify_cycle(const Graph& g, const ImprovingCycle& cycle, Locality locality, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cycle.swaps.empty()) return fail("empty cycle");
  if (cycle.colorings.size() != cycle.swaps.size() + 1) return fail("coloring/swap count mismatch");
  if (!(cycle.colorings.front() == cycle.colorings.back())) return fail("cycle does not return to its start");
  for (std::size_t i = 0; i < cycle.swaps.size(); ++i) {
    const auto& s = cycle.swaps[i];
    const Coloring& c = cycle.colorings[i];
    if (locality == Locality::Local && !g.adjacent(s.u, s.v)) return fail("non-local swap in a local cycle");
    if (c[s.u] == c[s.v]) return fail("same-color swap at step " + std::to_string(i));
    SwapClassification cls = classify_swap(g, c, s);
    if (!cls.profitable) return fail("swap " + std::to_string(i) + " is not profitable");
    if (!(apply_swap(c, s.u, s.v) == cycle.colorings[i + 1])) return fail("swap " + std::to_string(i) + " does not produce the next coloring");
  }
  return true;
}

}  // namespace ssg
