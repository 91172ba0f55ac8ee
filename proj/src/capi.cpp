#include "ssg.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "ssg/error.hpp"
#include "ssg/experiments.hpp"

struct ssg_graph {
  ssg::Graph g;
};

struct ssg_coloring {
  ssg::Coloring c;
};

namespace {

using ssg::json;

thread_local std::string last_error;

ssg_status status_of(ssg::ErrorCode c) { return static_cast<ssg_status>(static_cast<int>(c) + 1); }

template <class F>
ssg_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return SSG_OK;
  } catch (const ssg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return SSG_ERR_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SSG_ERR_INTERNAL;
  }
}

[[noreturn]] void invalid(const std::string& msg) { throw ssg::Error(ssg::ErrorCode::InvalidParameter, msg); }

void need(const void* p, const char* what) {
  if (!p) invalid(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse_options(const char* text) {
  if (!text || !*text) return json::object();
  json j = json::parse(text);
  if (!j.is_object()) throw ssg::Error(ssg::ErrorCode::ParseError, "options must be a JSON object");
  return j;
}

// Numbers or "p/q" strings.
ssg::Params to_params(const json& j) {
  ssg::Params p;
  for (const auto& [k, v] : j.items()) {
    if (v.is_number_integer())
      p[k] = ssg::Rational(v.get<std::int64_t>());
    else if (v.is_string())
      p[k] = ssg::Rational::parse(v.get<std::string>());
    else
      invalid("parameter '" + k + "' must be an integer or a \"p/q\" string");
  }
  return p;
}

struct Opts {
  const json& j;
  std::int64_t integer(const char* key) const {
    if (!j.contains(key)) throw ssg::Error(ssg::ErrorCode::IncompleteParams, std::string("missing parameter '") + key + "'");
    if (!j[key].is_number_integer()) invalid(std::string("parameter '") + key + "' must be an integer");
    return j[key].get<std::int64_t>();
  }
  int small(const char* key) const {
    std::int64_t v = integer(key);
    if (v < -1'000'000 || v > 1'000'000) invalid(std::string("parameter '") + key + "' is out of range");
    return static_cast<int>(v);
  }
  std::int64_t integer(const char* key, std::int64_t dflt) const { return j.contains(key) ? integer(key) : dflt; }
  std::string text(const char* key, const std::string& dflt) const {
    return j.contains(key) ? j[key].get<std::string>() : dflt;
  }
  bool flag(const char* key) const { return j.contains(key) && j[key].get<bool>(); }
};

ssg::Locality locality_of(const std::string& s) {
  if (s == "global") return ssg::Locality::Global;
  if (s == "local") return ssg::Locality::Local;
  invalid("locality must be 'global' or 'local', got '" + s + "'");
}

ssg::Locality locality_of(const Opts& o) { return locality_of(o.text("locality", "global")); }

ssg::EnumOptions enum_options(const Opts& o) {
  ssg::EnumOptions e;
  e.budget = o.integer("budget", e.budget);
  std::int64_t jobs = o.integer("jobs", 1);
  if (jobs < 1) invalid("jobs must be at least 1");
  e.jobs = static_cast<unsigned>(jobs);
  e.symmetry_classes = o.flag("symmetry");
  return e;
}

ssg::TypeVector types_of(const Opts& o, int n) {
  if (o.j.contains("types")) return ssg::TypeVector(o.j["types"].get<std::vector<int>>());
  return ssg::TypeVector::two(n, o.small("o"));
}

ssg::Graph generate(const std::string& family, const Opts& p) {
  if (family == "path") return ssg::make_path(p.small("n"));
  if (family == "cycle") return ssg::make_cycle(p.small("n"));
  if (family == "grid4") return ssg::make_grid(p.small("rows"), p.small("cols"), ssg::GridKind::Four);
  if (family == "grid8") return ssg::make_grid(p.small("rows"), p.small("cols"), ssg::GridKind::Eight);
  if (family == "regular-gadget") return ssg::make_regular_gadget(p.small("delta"), p.small("q"));
  if (family == "pendants") return ssg::make_cycle_with_pendants(p.small("o"), p.small("delta"));
  if (family == "double-star") {
    if (p.j.contains("left") || p.j.contains("right")) return ssg::make_double_star(p.small("left"), p.small("right"));
    return ssg::make_double_star(p.small("leaves"));
  }
  if (family == "random-tree" || family == "random-graph") {
    ssg::Rng rng(static_cast<std::uint64_t>(p.integer("seed", 1)));
    if (family == "random-tree") return ssg::random_tree(p.small("n"), rng);
    double prob = p.j.contains("p") ? p.j["p"].get<double>() : 0.3;
    if (!(prob >= 0 && prob <= 1)) invalid("p must be in [0, 1]");
    return ssg::random_connected_graph(p.small("n"), prob, rng);
  }
  throw ssg::Error(ssg::ErrorCode::UnknownFamily, "unknown graph family '" + family + "'");
}

json verdict_json(const ssg::EquilibriumVerdict& v, const std::string& method, ssg::Locality l) {
  json j = ssg::to_json(v);
  j["method"] = method;
  j["locality"] = ssg::locality_name(l);
  return j;
}

}  // namespace

extern "C" {

const char* ssg_version(void) { return ssg::kVersion; }

const char* ssg_status_name(ssg_status status) {
  if (status == SSG_OK) return "ok";
  if (status == SSG_ERR_INTERNAL) return "internal";
  if (status > SSG_OK && status < SSG_ERR_INTERNAL) return ssg::error_code_name(static_cast<ssg::ErrorCode>(status - 1));
  return "unknown";
}

const char* ssg_last_error(void) { return last_error.c_str(); }

void ssg_string_free(char* s) { std::free(s); }

ssg_status ssg_graph_generate(const char* family, const char* params_json, ssg_graph** out) {
  return guard([&] {
    need(family, "family");
    need(out, "out");
    json p = parse_options(params_json);
    *out = new ssg_graph{generate(family, Opts{p})};
  });
}

ssg_status ssg_graph_parse(const char* text, ssg_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ssg_graph{ssg::parse_graph(text)};
  });
}

ssg_status ssg_graph_serialize(const ssg_graph* g, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(ssg::serialize_graph(g->g));
  });
}

int ssg_graph_vertices(const ssg_graph* g) { return g ? g->g.n() : 0; }

void ssg_graph_free(ssg_graph* g) { delete g; }

ssg_status ssg_coloring_parse(const char* text, ssg_coloring** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ssg_coloring{ssg::Coloring::parse(text)};
  });
}

ssg_status ssg_coloring_random(const int* counts, int k, uint64_t seed, ssg_coloring** out) {
  return guard([&] {
    need(counts, "counts");
    need(out, "out");
    if (k < 1 || k > ssg::kMaxColors) invalid("k out of range");
    ssg::Rng rng(seed);
    *out = new ssg_coloring{ssg::random_coloring(ssg::TypeVector(std::vector<int>(counts, counts + k)), rng)};
  });
}

ssg_status ssg_coloring_serialize(const ssg_coloring* c, char** out) {
  return guard([&] {
    need(c, "coloring");
    need(out, "out");
    *out = dup(c->c.str());
  });
}

void ssg_coloring_free(ssg_coloring* c) { delete c; }

ssg_status ssg_check(const ssg_graph* g, const ssg_coloring* c, const char* options_json, char** out_json,
                     int* is_equilibrium) {
  return guard([&] {
    need(g, "graph");
    need(c, "coloring");
    need(out_json, "out_json");
    json j = parse_options(options_json);
    Opts o{j};
    ssg::Locality loc = locality_of(o);
    std::string method = o.text("method", "direct");
    if (c->c.n() != g->g.n())
      throw ssg::Error(ssg::ErrorCode::InconsistentColoring, "coloring has " + std::to_string(c->c.n()) +
                                                                  " entries for a graph with " +
                                                                  std::to_string(g->g.n()) + " vertices");
    json out;
    if (method == "direct") {
      out = verdict_json(ssg::is_equilibrium(g->g, c->c, loc), method, loc);
    } else if (method == "characterization") {
      if (loc != ssg::Locality::Global) invalid("the characterization describes global equilibria");
      bool ok = ssg::check_characterization(g->g, c->c);
      out = json{{"is_equilibrium", ok}, {"witness", nullptr}, {"method", method}, {"locality", "global"}};
    } else {
      invalid("method must be 'direct' or 'characterization'");
    }
    out["welfare"] = ssg::social_welfare(g->g, c->c).str();
    out["psi"] = ssg::to_json(ssg::psi(g->g, c->c));
    if (is_equilibrium) *is_equilibrium = out["is_equilibrium"].get<bool>();
    *out_json = dup(out.dump(2));
  });
}

ssg_status ssg_simulate(const ssg_graph* g, const ssg_coloring* init, const char* options_json, char** out_json,
                        int* outcome) {
  return guard([&] {
    need(g, "graph");
    need(init, "initial coloring");
    need(out_json, "out_json");
    json j = parse_options(options_json);
    Opts o{j};
    ssg::Locality loc = locality_of(o);
    std::string kind = o.text("scheduler", "first");
    std::uint64_t seed = static_cast<std::uint64_t>(o.integer("seed", 1));
    ssg::Scheduler s;
    if (kind == "first") {
      s = ssg::Scheduler::first();
    } else if (kind == "best-gain") {
      s = ssg::Scheduler::best_gain();
    } else if (kind == "random") {
      s = ssg::Scheduler::random(seed);
    } else if (kind == "scripted") {
      if (!j.contains("script")) throw ssg::Error(ssg::ErrorCode::IncompleteParams, "scripted scheduler needs a script");
      s = ssg::Scheduler::scripted(j["script"].get<std::vector<std::pair<int, int>>>());
    } else {
      invalid("unknown scheduler '" + kind + "'");
    }
    ssg::TypeVector t = j.contains("types") ? ssg::TypeVector(j["types"].get<std::vector<int>>())
                                            : ssg::TypeVector(init->c.counts());
    std::int64_t budget = o.integer("budget", 100000);
    if (budget < 0) invalid("budget must be non-negative");
    ssg::DynamicsTrace tr = ssg::run_dynamics(g->g, t, init->c, loc, s, budget);
    json out = ssg::to_json(tr);
    if (outcome) {
      using K = ssg::DynamicsOutcome::Kind;
      *outcome = tr.outcome.kind == K::Converged ? 0 : tr.outcome.kind == K::CycleDetected ? 1 : 2;
    }
    *out_json = dup(out.dump(2));
  });
}

ssg_status ssg_poa(const ssg_graph* g, const char* options_json, char** out_json) {
  return guard([&] {
    need(g, "graph");
    need(out_json, "out_json");
    json j = parse_options(options_json);
    Opts o{j};
    ssg::PoAReport r = ssg::empirical_poa(g->g, types_of(o, g->g.n()), locality_of(o), enum_options(o));
    *out_json = dup(json{{"graph", "file"}, {"empirical", ssg::to_json(r)}}.dump(2));
  });
}

ssg_status ssg_poa_family(const char* family, const char* params_json, const char* options_json, char** out_json,
                          int* verdict) {
  return guard([&] {
    need(family, "family");
    need(out_json, "out_json");
    json pj = parse_options(params_json);
    json oj = parse_options(options_json);
    Opts o{oj};
    ssg::Params params = to_params(pj);
    ssg::Locality loc = locality_of(o);
    ssg::AuditRow row = ssg::audit_instance(family, params, loc, enum_options(o));
    json out{{"graph", std::string(family) + " " + ssg::to_json(params).dump()},
             {"params", ssg::to_json(params)},
             {"empirical", ssg::to_json(*row.report)}};
    out["bound"] = row.bound ? ssg::to_json(*row.bound) : json(nullptr);
    out["verdict"] = row.bound ? json(ssg::verdict_name(row.verdict)) : json(nullptr);
    if (!row.error.empty()) out["bound_error"] = row.error;
    if (verdict)
      *verdict = row.verdict == ssg::Verdict::Pass ? 0 : row.verdict == ssg::Verdict::Fail ? 1 : 2;
    *out_json = dup(out.dump(2));
  });
}

ssg_status ssg_format_poa(const char* report_json, const char* format, char** out) {
  return guard([&] {
    need(report_json, "report");
    need(format, "format");
    need(out, "out");
    json r = json::parse(report_json);
    std::string f = format;
    if (f == "text")
      *out = dup(ssg::poa_text(r));
    else if (f == "csv")
      *out = dup(ssg::poa_csv(r));
    else if (f == "json")
      *out = dup(r.dump(2));
    else
      invalid("format must be json, csv or text");
  });
}

ssg_status ssg_bound(const char* family, const char* params_json, const char* locality, char** out_json) {
  return guard([&] {
    need(family, "family");
    need(out_json, "out_json");
    json pj = parse_options(params_json);
    ssg::BoundSpec b = ssg::theoretical_bound(family, to_params(pj), locality_of(locality ? locality : "global"));
    *out_json = dup(ssg::to_json(b).dump(2));
  });
}

ssg_status ssg_construct(const char* which, const char* params_json, ssg_graph** graph, ssg_coloring** coloring,
                         char** info_json) {
  return guard([&] {
    need(which, "which");
    need(graph, "graph");
    need(coloring, "coloring");
    json pj = parse_options(params_json);
    Opts p{pj};
    std::string w = which;
    ssg::Graph g;
    ssg::Coloring c;
    ssg::Locality loc = ssg::Locality::Global;
    json info{{"which", w}, {"params", pj}};
    if (w == "tree-lse") {
      ssg::Rng rng(static_cast<std::uint64_t>(p.integer("seed", 1)));
      g = pj.contains("graph") ? ssg::parse_graph(pj["graph"].get<std::string>()) : ssg::random_tree(p.small("n"), rng);
      if (!ssg::is_tree(g)) throw ssg::Error(ssg::ErrorCode::NotATree, "graph is not a tree");
      ssg::TypeVector t = pj.contains("types") ? ssg::TypeVector(pj["types"].get<std::vector<int>>())
                                               : ssg::TypeVector::two(g.n(), p.small("o"));
      c = ssg::build_tree_lse(g, t);
      loc = ssg::Locality::Local;
    } else if (w == "grid8") {
      int rows = p.small("rows"), cols = p.small("cols");
      g = ssg::make_grid(rows, cols, ssg::GridKind::Eight);
      ssg::Grid8Equilibrium e = ssg::build_8grid_eq_detailed(rows, cols, p.small("o"));
      c = e.coloring;
      info["method"] = ssg::grid8_method_name(e.method);
      info["detail"] = e.detail;
    } else if (w == "frame") {
      int n = p.small("n");
      g = ssg::make_grid(n, n, ssg::GridKind::Four);
      c = ssg::build_4grid_frame(n);
    } else if (w == "cycle-worst" || w == "path-worst") {
      int n = p.small("n"), o = p.small("o");
      g = w == "cycle-worst" ? ssg::make_cycle(n) : ssg::make_path(n);
      c = w == "cycle-worst" ? ssg::build_cycle_worst(n, o) : ssg::build_path_worst(n, o);
    } else if (w == "regular-gadget") {
      int d = p.small("delta"), q = p.small("q");
      g = ssg::make_regular_gadget(d, q);
      c = ssg::build_regular_gadget_eq(d, q);
      loc = ssg::Locality::Local;
    } else if (w == "pendants") {
      int o = p.small("o"), d = p.small("delta");
      g = ssg::make_cycle_with_pendants(o, d);
      c = ssg::build_pendant_eq(o, d);
      loc = ssg::Locality::Local;
    } else if (w == "double-star") {
      ssg::DoubleStarResult r = ssg::build_double_star_eq(p.small("leaves"));
      g = r.graph;
      c = r.coloring;
      loc = ssg::Locality::Local;
      info["private_leaves"] = {r.private_left, r.private_right};
      info["target_welfare"] = r.target.str();
      info["matches_target"] = r.matches_target;
      info["positive_utility_agents"] = r.positive_utility_agents;
    } else if (w == "2xh") {
      int h = p.small("h");
      g = ssg::make_grid(2, h, ssg::GridKind::Four);
      c = ssg::build_2xh_alternating(h);
      loc = ssg::Locality::Local;
    } else {
      throw ssg::Error(ssg::ErrorCode::UnknownFamily, "unknown construction '" + w + "'");
    }
    info["locality"] = ssg::locality_name(loc);
    info["welfare"] = ssg::social_welfare(g, c).str();
    info["equilibrium"] = ssg::is_equilibrium_fast(g, c, loc);
    if (loc == ssg::Locality::Local) info["global_equilibrium"] = ssg::is_equilibrium_fast(g, c, ssg::Locality::Global);
    *graph = new ssg_graph{std::move(g)};
    *coloring = new ssg_coloring{std::move(c)};
    if (info_json) *info_json = dup(info.dump(2));
  });
}

ssg_status ssg_find_irc(const ssg_graph* g, const char* options_json, char** out_json, int* found) {
  return guard([&] {
    need(g, "graph");
    need(out_json, "out_json");
    json j = parse_options(options_json);
    Opts o{j};
    ssg::IrcOptions io;
    io.max_states = o.integer("max_states", io.max_states);
    if (j.contains("seeded_starts")) io.seeded_starts = o.small("seeded_starts");
    io.seed = static_cast<std::uint64_t>(o.integer("seed", 1));
    ssg::Locality loc = locality_of(o);
    ssg::IrcSearch s = ssg::find_irc(g->g, types_of(o, g->g.n()), loc, io);
    json out{{"locality", ssg::locality_name(loc)},
             {"exhaustive", s.exhaustive},
             {"states_explored", s.states_explored},
             {"found", s.cycle.has_value()}};
    out["cycle"] = s.cycle ? ssg::to_json(*s.cycle) : json(nullptr);
    if (s.cycle) out["verified"] = ssg::verify_cycle(g->g, *s.cycle, loc);
    if (found) *found = s.cycle.has_value();
    *out_json = dup(out.dump(2));
  });
}

ssg_status ssg_experiment_names(char** out_json) {
  return guard([&] {
    need(out_json, "out_json");
    *out_json = dup(json(ssg::experiment_names()).dump());
  });
}

ssg_status ssg_reproduce(const char* name, unsigned jobs, char** out_json, int* passed) {
  return guard([&] {
    need(name, "name");
    need(out_json, "out_json");
    ssg::ExperimentOptions opts;
    opts.jobs = jobs ? jobs : 1;
    ssg::ExperimentResult r = ssg::run_experiment(name, opts);
    if (passed) *passed = r.passed();
    *out_json = dup(r.to_json().dump(2));
  });
}

}  // extern "C"
