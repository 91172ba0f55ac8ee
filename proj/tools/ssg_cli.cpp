#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ssg.h"

using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

// Thrown with the C API status already mapped to an exit code.
struct Failure {
  int code;
  std::string message;
};

int exit_for(ssg_status s) {
  switch (s) {
    case SSG_OK: return kOk;
    case SSG_ERR_BUDGET_EXCEEDED: return kBudget;
    case SSG_ERR_CONSTRUCTION_FAILED: return kViolation;
    default: return kUsage;
  }
}

void check(ssg_status s) {
  if (s != SSG_OK) throw Failure{exit_for(s), std::string(ssg_status_name(s)) + ": " + ssg_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ssg_string_free(s);
  return out;
}

using Graph = std::unique_ptr<ssg_graph, decltype(&ssg_graph_free)>;
using Coloring = std::unique_ptr<ssg_coloring, decltype(&ssg_coloring_free)>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write '" + path + "'"};
  out << text;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

// key=value,key=value with integer or p/q values.
json parse_kv(const std::string& text) {
  json j = json::object();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Failure{kUsage, "expected key=value, got '" + item + "'"};
    std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    if (v.find('/') != std::string::npos) {
      j[k] = v;
    } else if (v.find('.') != std::string::npos) {
      j[k] = std::stod(v);
    } else if (v.find(';') != std::string::npos) {
      std::vector<int> list;
      std::stringstream ls(v);
      std::string x;
      while (std::getline(ls, x, ';')) list.push_back(std::stoi(x));
      j[k] = list;
    } else {
      try {
        j[k] = std::stoll(v);
      } catch (const std::exception&) {
        j[k] = v;
      }
    }
  }
  return j;
}

std::vector<int> parse_types(const std::string& text) {
  std::vector<int> t;
  std::stringstream ss(text);
  std::string x;
  while (std::getline(ss, x, ',')) {
    try {
      t.push_back(std::stoi(x));
    } catch (const std::exception&) {
      throw Failure{kUsage, "bad type vector '" + text + "'"};
    }
  }
  return t;
}

// Graph source flags shared by several subcommands.
struct GraphArgs {
  std::string file, family;
  std::optional<long long> n, rows, cols, delta, q, leaves, left, right, graph_seed;
  std::optional<double> p;

  void add(CLI::App* app) {
    app->add_option("--graph", file, "edge-list file");
    app->add_option("--family", family, "path|cycle|grid4|grid8|regular-gadget|pendants|double-star|random-tree|random-graph");
    app->add_option("--n", n);
    app->add_option("--rows", rows);
    app->add_option("--cols", cols);
    app->add_option("--delta", delta);
    app->add_option("--q", q);
    app->add_option("--leaves", leaves);
    app->add_option("--left", left);
    app->add_option("--right", right);
    app->add_option("--p", p, "edge probability for random-graph");
    app->add_option("--graph-seed", graph_seed, "seed for random families");
  }

  json params(std::optional<long long> o) const {
    json j = json::object();
    auto put = [&](const char* k, const std::optional<long long>& v) {
      if (v) j[k] = *v;
    };
    put("n", n);
    put("rows", rows);
    put("cols", cols);
    put("delta", delta);
    put("q", q);
    put("leaves", leaves);
    put("left", left);
    put("right", right);
    put("seed", graph_seed);
    if (p) j["p"] = *p;
    if (family == "pendants") put("o", o);
    return j;
  }

  Graph load(std::optional<long long> o) const {
    ssg_graph* g = nullptr;
    if (!file.empty()) {
      check(ssg_graph_parse(read_file(file).c_str(), &g));
    } else {
      if (family.empty()) throw Failure{kUsage, "need --graph FILE or --family"};
      check(ssg_graph_generate(family.c_str(), params(o).dump().c_str(), &g));
    }
    return Graph(g, ssg_graph_free);
  }

  json echo(std::optional<long long> o) const {
    if (!file.empty()) return json{{"file", file}};
    return json{{"family", family}, {"params", params(o)}};
  }
};

json envelope(const std::string& command, json config, json result) {
  return json{{"tool", "ssg"}, {"version", ssg_version()}, {"command", command}, {"config", std::move(config)},
              {"result", std::move(result)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Swap Schelling games: dynamics, equilibria and price of anarchy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ssg_version());

  unsigned jobs = 1;
  std::string out_path;
  auto add_jobs = [&](CLI::App* sub) { sub->add_option("--jobs", jobs, "worker threads")->envname("SSG_JOBS"); };

  // gen
  GraphArgs gen_graph;
  std::optional<long long> gen_o;
  auto* gen = app.add_subcommand("gen", "write a graph as an edge list");
  gen_graph.add(gen);
  gen->add_option("--o", gen_o, "cycle length for pendants");
  gen->add_option("--out", out_path, "output file (default stdout)");

  // simulate
  GraphArgs sim_graph;
  std::optional<long long> sim_o;
  std::string sim_types, sim_init, sim_locality = "global", sim_scheduler = "first", sim_script;
  std::uint64_t sim_seed = 1;
  long long sim_budget = 100000;
  auto* sim = app.add_subcommand("simulate", "run improving-response dynamics");
  sim_graph.add(sim);
  sim->add_option("--o", sim_o, "agents of the first color (two colors)");
  sim->add_option("--types", sim_types, "type vector, e.g. 3,5");
  sim->add_option("--init", sim_init, "initial coloring file (default: random from --seed)");
  sim->add_option("--locality", sim_locality)->check(CLI::IsMember({"global", "local"}));
  sim->add_option("--scheduler", sim_scheduler)->check(CLI::IsMember({"first", "best-gain", "random", "scripted"}));
  sim->add_option("--script", sim_script, "JSON file: [[u,v],...] or an irc report");
  sim->add_option("--seed", sim_seed);
  sim->add_option("--budget", sim_budget);
  sim->add_option("--out", out_path);

  // check
  GraphArgs chk_graph;
  std::string chk_coloring, chk_locality = "global", chk_method = "direct";
  auto* chk = app.add_subcommand("check", "test whether a coloring is a swap equilibrium");
  chk_graph.add(chk);
  chk->add_option("--coloring", chk_coloring, "coloring file")->required();
  chk->add_option("--locality", chk_locality)->check(CLI::IsMember({"global", "local"}));
  chk->add_option("--method", chk_method)->check(CLI::IsMember({"direct", "characterization"}));
  chk->add_option("--out", out_path);

  // poa
  GraphArgs poa_graph;
  std::optional<long long> poa_o;
  std::string poa_types, poa_locality = "global", poa_format = "json";
  bool poa_symmetry = false;
  std::optional<long long> poa_budget;
  auto* poa = app.add_subcommand("poa", "exact price of anarchy by enumeration");
  poa_graph.add(poa);
  poa->add_option("--o", poa_o);
  poa->add_option("--types", poa_types);
  poa->add_option("--locality", poa_locality)->check(CLI::IsMember({"global", "local"}));
  poa->add_option("--format", poa_format)->check(CLI::IsMember({"json", "csv", "text"}));
  poa->add_flag("--symmetry", poa_symmetry, "also count equilibria up to grid symmetry");
  poa->add_option("--budget", poa_budget, "max colorings x n");
  add_jobs(poa);
  poa->add_option("--out", out_path);

  // construct
  std::string con_which, con_params, con_graph_out, con_coloring_out;
  auto* con = app.add_subcommand("construct", "build an equilibrium profile");
  con->add_option("--which", con_which, "tree-lse|grid8|frame|cycle-worst|path-worst|regular-gadget|pendants|double-star|2xh")
      ->required();
  con->add_option("--params", con_params, "key=value,... (lists as a;b;c)");
  con->add_option("--graph-out", con_graph_out);
  con->add_option("--coloring-out", con_coloring_out);
  con->add_option("--out", out_path, "info JSON");

  // reproduce
  std::string rep_name, rep_format = "text";
  bool rep_list = false;
  auto* rep = app.add_subcommand("reproduce", "run a named experiment");
  rep->add_option("name", rep_name);
  rep->add_flag("--list", rep_list);
  rep->add_option("--format", rep_format)->check(CLI::IsMember({"json", "text"}));
  add_jobs(rep);
  rep->add_option("--out", out_path, "full JSON report");

  // irc
  GraphArgs irc_graph;
  std::optional<long long> irc_o;
  std::string irc_types, irc_locality = "global";
  long long irc_states = 1'000'000, irc_starts = 0;
  std::uint64_t irc_seed = 1;
  auto* irc = app.add_subcommand("irc", "search for an improving response cycle");
  irc_graph.add(irc);
  irc->add_option("--o", irc_o);
  irc->add_option("--types", irc_types);
  irc->add_option("--locality", irc_locality)->check(CLI::IsMember({"global", "local"}));
  irc->add_option("--max-states", irc_states);
  irc->add_option("--seeded-starts", irc_starts, "0 = exhaustive");
  irc->add_option("--seed", irc_seed);
  irc->add_option("--out", out_path);

  // bound
  std::string bnd_family, bnd_params, bnd_locality = "global";
  auto* bnd = app.add_subcommand("bound", "closed-form bound for a family");
  bnd->add_option("--family", bnd_family)->required();
  bnd->add_option("--params", bnd_params, "key=value,...");
  bnd->add_option("--locality", bnd_locality)->check(CLI::IsMember({"global", "local"}));
  bnd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      Graph g = gen_graph.load(gen_o);
      char* text = nullptr;
      check(ssg_graph_serialize(g.get(), &text));
      write_output(out_path, take(text));
      return kOk;
    }

    if (*sim) {
      Graph g = sim_graph.load(sim_o);
      const int n = ssg_graph_vertices(g.get());
      ssg_coloring* c = nullptr;
      json config{{"graph", sim_graph.echo(sim_o)}, {"locality", sim_locality}, {"scheduler", sim_scheduler},
                  {"seed", sim_seed}, {"budget", sim_budget}};
      std::vector<int> types;
      if (!sim_types.empty()) types = parse_types(sim_types);
      else if (sim_o) types = {static_cast<int>(*sim_o), n - static_cast<int>(*sim_o)};
      if (!sim_init.empty()) {
        check(ssg_coloring_parse(read_file(sim_init).c_str(), &c));
        config["init"] = sim_init;
      } else {
        if (types.empty()) throw Failure{kUsage, "need --init, --types or --o"};
        check(ssg_coloring_random(types.data(), static_cast<int>(types.size()), sim_seed, &c));
        config["init"] = "random";
      }
      Coloring init(c, ssg_coloring_free);
      json opts{{"locality", sim_locality}, {"scheduler", sim_scheduler}, {"seed", sim_seed}, {"budget", sim_budget}};
      if (!types.empty()) {
        opts["types"] = types;
        config["types"] = types;
      }
      if (!sim_script.empty()) {
        json s = json::parse(read_file(sim_script));
        // Accept an irc report directly.
        if (s.is_object() && s.contains("result")) s = s["result"]["cycle"]["swaps"];
        json pairs = json::array();
        for (const auto& e : s) pairs.push_back(e.is_array() ? e : json::array({e["u"], e["v"]}));
        opts["script"] = pairs;
        config["script"] = sim_script;
      }
      char* out = nullptr;
      int outcome = 0;
      check(ssg_simulate(g.get(), init.get(), opts.dump().c_str(), &out, &outcome));
      write_output(out_path, envelope("simulate", config, json::parse(take(out))).dump(2) + "\n");
      return outcome == 0 ? kOk : outcome == 1 ? kViolation : kBudget;
    }

    if (*chk) {
      Graph g = chk_graph.load(std::nullopt);
      ssg_coloring* c = nullptr;
      check(ssg_coloring_parse(read_file(chk_coloring).c_str(), &c));
      Coloring col(c, ssg_coloring_free);
      char* out = nullptr;
      int eq = 0;
      json opts{{"locality", chk_locality}, {"method", chk_method}};
      check(ssg_check(g.get(), col.get(), opts.dump().c_str(), &out, &eq));
      json config{{"graph", chk_graph.echo(std::nullopt)}, {"coloring", chk_coloring}, {"locality", chk_locality},
                  {"method", chk_method}};
      write_output(out_path, envelope("check", config, json::parse(take(out))).dump(2) + "\n");
      return eq ? kOk : kViolation;
    }

    if (*poa) {
      json opts{{"locality", poa_locality}, {"jobs", jobs}, {"symmetry", poa_symmetry}};
      if (poa_budget) opts["budget"] = *poa_budget;
      if (!poa_types.empty()) opts["types"] = parse_types(poa_types);
      json config{{"graph", poa_graph.echo(poa_o)}, {"locality", poa_locality}, {"symmetry", poa_symmetry}};
      if (poa_o) config["o"] = *poa_o;
      if (!poa_types.empty()) config["types"] = opts["types"];
      static const std::vector<std::string> bounded{"cycle", "path", "grid4", "grid8", "regular-gadget"};
      std::string result;
      int verdict = 2;
      if (poa_graph.file.empty() && poa_o && poa_types.empty() &&
          std::find(bounded.begin(), bounded.end(), poa_graph.family) != bounded.end()) {
        json params = poa_graph.params(poa_o);
        params["o"] = *poa_o;
        char* out = nullptr;
        check(ssg_poa_family(poa_graph.family.c_str(), params.dump().c_str(), opts.dump().c_str(), &out, &verdict));
        result = take(out);
      } else {
        Graph g = poa_graph.load(poa_o);
        if (poa_o) opts["o"] = *poa_o;
        char* out = nullptr;
        check(ssg_poa(g.get(), opts.dump().c_str(), &out));
        result = take(out);
      }
      json doc = envelope("poa", config, json::parse(result));
      if (poa_format == "json") {
        write_output(out_path, doc.dump(2) + "\n");
      } else {
        char* text = nullptr;
        check(ssg_format_poa(result.c_str(), poa_format.c_str(), &text));
        std::string header = poa_format == "text" ? std::string("ssg ") + ssg_version() + "\n" : "";
        write_output(out_path, header + take(text));
      }
      return verdict == 1 ? kViolation : kOk;
    }

    if (*con) {
      json params = parse_kv(con_params);
      ssg_graph* g = nullptr;
      ssg_coloring* c = nullptr;
      char* info = nullptr;
      check(ssg_construct(con_which.c_str(), params.dump().c_str(), &g, &c, &info));
      Graph graph(g, ssg_graph_free);
      Coloring col(c, ssg_coloring_free);
      json result = json::parse(take(info));
      char* gtext = nullptr;
      char* ctext = nullptr;
      check(ssg_graph_serialize(graph.get(), &gtext));
      check(ssg_coloring_serialize(col.get(), &ctext));
      std::string gs = take(gtext), cs = with_newline(take(ctext));
      if (!con_graph_out.empty()) write_output(con_graph_out, gs);
      if (!con_coloring_out.empty()) write_output(con_coloring_out, cs);
      if (con_graph_out.empty()) result["graph"] = gs;
      result["coloring"] = cs.substr(0, cs.size() - 1);
      write_output(out_path, envelope("construct", json{{"which", con_which}, {"params", params}}, result).dump(2) + "\n");
      return result["equilibrium"].get<bool>() ? kOk : kViolation;
    }

    if (*rep) {
      if (rep_list || rep_name.empty()) {
        char* names = nullptr;
        check(ssg_experiment_names(&names));
        for (const auto& n : json::parse(take(names))) std::cout << n.get<std::string>() << "\n";
        return rep_name.empty() && !rep_list ? kUsage : kOk;
      }
      char* out = nullptr;
      int passed = 0;
      check(ssg_reproduce(rep_name.c_str(), jobs, &out, &passed));
      json doc = envelope("reproduce", json{{"experiment", rep_name}, {"jobs", jobs}}, json::parse(take(out)));
      if (rep_format == "json") {
        write_output(out_path, doc.dump(2) + "\n");
      } else {
        const json& r = doc["result"];
        std::cout << r["experiment"].get<std::string>() << ": " << r["citation"].get<std::string>() << "\n";
        for (const auto& c : r["checks"]) {
          std::cout << (c["result"] == "PASS" ? "PASS " : "FAIL ") << c["check"].get<std::string>();
          if (!c["detail"].get<std::string>().empty()) std::cout << " (" << c["detail"].get<std::string>() << ")";
          std::cout << "\n";
        }
        std::cout << r["result"].get<std::string>() << "\n";
        if (!out_path.empty()) write_output(out_path, doc.dump(2) + "\n");
      }
      return passed ? kOk : kViolation;
    }

    if (*irc) {
      Graph g = irc_graph.load(irc_o);
      json opts{{"locality", irc_locality}, {"max_states", irc_states}, {"seeded_starts", irc_starts}, {"seed", irc_seed}};
      if (!irc_types.empty()) opts["types"] = parse_types(irc_types);
      if (irc_o) opts["o"] = *irc_o;
      char* out = nullptr;
      int found = 0;
      check(ssg_find_irc(g.get(), opts.dump().c_str(), &out, &found));
      json result = json::parse(take(out));
      json config = opts;
      config["graph"] = irc_graph.echo(irc_o);
      write_output(out_path, envelope("irc", config, result).dump(2) + "\n");
      return found && !result["verified"].get<bool>() ? kViolation : kOk;
    }

    if (*bnd) {
      json params = parse_kv(bnd_params);
      char* out = nullptr;
      check(ssg_bound(bnd_family.c_str(), params.dump().c_str(), bnd_locality.c_str(), &out));
      write_output(out_path, envelope("bound", json{{"family", bnd_family}, {"params", params}, {"locality", bnd_locality}},
                                      json::parse(take(out)))
                                 .dump(2) +
                                 "\n");
      return kOk;
    }
  } catch (const Failure& f) {
    std::cerr << "ssg: " << f.message << "\n";
    return f.code;
  } catch (const json::exception& e) {
    std::cerr << "ssg: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "ssg: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
