// Command-line driver. Talks to the library only through amalgam.h.
//
// Exit codes: 0 all checks pass, 1 a check fails, 2 bad input or unmet
// hypotheses, 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amalgam/amalgam.h"

namespace {

struct Leaf {
  std::string group;  // empty for top-level commands
  std::string name;
  std::string help;
  std::vector<std::pair<std::string, std::string>> options;  // key, help
};

const std::vector<Leaf>& leaves() {
  static const std::vector<Leaf> table = {
      {"amalgam", "coherent-dim", "dimension of truncated coherent elements",
       {{"preset", "presentation preset (default c2-star-c2)"},
        {"presentation", "presentation file"},
        {"degree", "truncation degree N (default 2)"}}},
      {"amalgam", "verify-hopf", "coherence, antipode identity and S^2 = id",
       {{"element", "element file"}, {"va", "parameter a of V_a (default 2)"}, {"degree", "truncation degree (default 4)"}}},
      {"amalgam", "rank", "representativity rank from evaluation blocks",
       {{"element", "element file"},
        {"va", "parameter a of V_a (default 2)"},
        {"entry", "matrix coefficient i,j (1-based)"},
        {"degree", "truncation degree (default 4)"},
        {"bound", "expected upper bound"}}},
      {"reps", "glue", "glue (V1, V2, c) and split back",
       {{"va", "glue V_a (default 2)"},
        {"preset", "presentation preset"},
        {"presentation", "presentation file"},
        {"rep1", "representation file of G1"},
        {"rep2", "representation file of G2"},
        {"gluing", "matrix file for c (default identity)"}}},
      {"reps", "hom", "Hom dimensions, directly and through triples",
       {{"va", "left V_a (default 2)"},
        {"vb", "right V_b (default 3)"},
        {"left", "representation file"},
        {"right", "representation file"}}},
      {"reps", "sl2-cert", "infinite-order certificate in Z/4 * Z/6", {{"powers", "powers to test (default 12)"}}},
      {"frobplus", "check", "Fr+ dimension, t map and functoriality",
       {{"group", "corpus group: trivial, c3 or s3 (default s3)"},
        {"rep", "representation file instead of the corpus"},
        {"samples", "random samples for t (default 20)"}}},
      {"frobplus", "faithful", "Hom -> Hom(Fr+, Fr+) on a corpus and symmetry choices",
       {{"group", "corpus group (default c3)"}, {"rep", "representation file instead of the corpus"}}},
      {"topo", "monodromy", "loops of a local system and change of spanning tree",
       {{"system", "local system file"},
        {"model", "model or poset file (default pseudo-circle)"},
        {"loops", "comma-separated rank-1 loop values"},
        {"base", "base point name"},
        {"base2", "second base point name"}}},
      {"topo", "svk", "gluing local systems along a two-set cover",
       {{"model", "model or poset file (default wedge)"},
        {"u1", "comma-separated points of U1"},
        {"u2", "comma-separated points of U2"},
        {"base", "base point in U1 and U2"},
        {"rank", "comma-separated ranks (default 1,2)"},
        {"samples", "samples per field and rank (default 5)"}}},
      {"topo", "models", "local systems on two models of the circle",
       {{"first", "first model (default pseudo-circle)"},
        {"second", "second model (default hexagon)"},
        {"samples", "random monodromies (default 10)"}}},
      {"", "suite", "all acceptance scenarios", {{"only", "run a single scenario"}}},
  };
  return table;
}

struct Options {
  std::map<std::string, std::string> values;
  std::string format = "text";
  std::string out;
};

int emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  f << body;
  return 0;
}

int run(const std::string& command, const Options& opts) {
  amg_options* raw = nullptr;
  if (amg_options_new(&raw) != AMG_OK) {
    std::cerr << "error: " << amg_last_error() << "\n";
    return 3;
  }
  std::unique_ptr<amg_options, decltype(&amg_options_free)> options(raw, amg_options_free);
  for (const auto& [k, v] : opts.values) amg_options_set(options.get(), k.c_str(), v.c_str());

  amg_report* report = nullptr;
  const amg_status status = amg_run(command.c_str(), options.get(), &report);
  std::unique_ptr<amg_report, decltype(&amg_report_free)> guard(report, amg_report_free);
  if (status == AMG_EINPUT || status == AMG_EINTERNAL) {
    std::cerr << "error: " << amg_last_error() << "\n";
    return int(status);
  }
  const char* body = opts.format == "structured" ? amg_report_json(report) : amg_report_text(report);
  if (const int rc = emit(body, opts.out)) return rc;
  return status == AMG_OK ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for amalgamated free products, Fr+ and finite local systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", amg_version());

  Options opts;
  std::string command;
  std::map<std::string, CLI::App*> groups;
  // Values live here so each leaf can bind its own flags.
  std::map<std::string, std::map<std::string, std::string>> bound;

  for (const auto& leaf : leaves()) {
    CLI::App* parent = &app;
    if (!leaf.group.empty()) {
      auto& g = groups[leaf.group];
      if (!g) {
        g = app.add_subcommand(leaf.group, leaf.group + " commands");
        g->require_subcommand(1);
      }
      parent = g;
    }
    const std::string full = leaf.group.empty() ? leaf.name : leaf.group + " " + leaf.name;
    CLI::App* sub = parent->add_subcommand(leaf.name, leaf.help);
    auto& store = bound[full];
    sub->add_option("--field", store["field"], "q, p or p^m");
    sub->add_option("--seed", store["seed"], "sampling seed (default 1)");
    for (const auto& [key, help] : leaf.options) sub->add_option("--" + key, store[key], help);
    sub->add_option("--format", opts.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--out", opts.out, "write the report to a file");
    sub->callback([&command, full] { command = full; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  for (const auto& [k, v] : bound[command])
    if (!v.empty()) opts.values[k] = v;
  return run(command, opts);
}
