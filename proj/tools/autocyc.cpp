#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "autocyc/catalog.hpp"
#include "autocyc/delta_graph.hpp"
#include "autocyc/error.hpp"
#include "autocyc/io.hpp"
#include "autocyc/theorems.hpp"

using namespace autocyc;
namespace fs = std::filesystem;

namespace {

struct RunConfig
{
  std::string group_source;
  std::string action_source = "trivial";
  std::string format = "json";
  std::string out;
  std::size_t order_bound = kDefaultOrderBound;
  std::size_t action_cap = kDefaultActionCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
};

struct Loaded
{
  std::shared_ptr<const FiniteGroup> group;
  std::optional<CatalogEntry> entry;
  AutAction action;
};

std::size_t default_order_bound()
{
  if (const char *env = std::getenv("AUTOCYC_ORDER_BOUND")) {
    try {
      auto v = std::stoull(env);
      if (v > 0)
        return v;
    } catch (const std::exception &) {
    }
    throw Error(ErrorKind::BadParameters, std::string("bad AUTOCYC_ORDER_BOUND '") + env + "'");
  }
  return kDefaultOrderBound;
}

Loaded load(const RunConfig &cfg)
{
  Loaded res;
  if (cfg.group_source.rfind("catalog:", 0) == 0) {
    res.entry = catalog::load(cfg.group_source.substr(8));
    res.group = res.entry->group_ptr();
  } else {
    res.group = std::make_shared<const FiniteGroup>(
      io::group_from_json(io::read_json_file(cfg.group_source), cfg.order_bound));
  }
  auto const &G = *res.group;

  auto const &a = cfg.action_source;
  if (a.rfind("file:", 0) == 0) {
    res.action = io::action_from_json(G, io::read_json_file(a.substr(5)), cfg.action_cap);
  } else if (res.entry && res.entry->has_action(a)) {
    res.action = res.entry->action(a, cfg.action_cap);
  } else if (a == "trivial") {
    res.action = trivial_action(G);
  } else if (a == "inner") {
    res.action = inner_generators(G);
  } else if (a == "full") {
    res.action = full_aut_brute(G, kDefaultBruteForceBound, cfg.action_cap);
  } else {
    throw Error(ErrorKind::UnknownKey, "unknown action '" + a + "'");
  }
  return res;
}

void emit(const RunConfig &cfg, const std::string &text)
{
  if (!cfg.out.empty())
    io::write_text_file(cfg.out, text);
}

std::string summary_line(const DeltaGraph &D, const AnalysisReport &R)
{
  auto d = R.diameter();
  return D.group_name() + " / " + D.action_label() + ": " + std::to_string(D.vertex_count()) +
         " vertices, " + std::to_string(D.edge_count()) + " edges, " +
         std::to_string(R.components.size()) + " components" +
         (d ? ", diameter " + std::to_string(*d) : "");
}

int cmd_build(const RunConfig &cfg)
{
  auto L = load(cfg);
  auto D = build_delta(*L.group, L.action);
  std::cout << summary_line(D, analyze(D)) << "\n";

  if (cfg.format == "json")
    emit(cfg, io::graph_to_json(*L.group, D).dump(2) + "\n");
  else if (cfg.format == "dot")
    emit(cfg, io::to_dot(*L.group, D));
  else
    emit(cfg, io::to_graphml(*L.group, D));
  return 0;
}

std::string vertex_list(const FiniteGroup &G, const DeltaGraph &D, const std::vector<VertexId> &vs)
{
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i)
      s += ", ";
    s += G.word_string(D.vertex(vs[i]).representative);
  }
  return s + "}";
}

int cmd_analyze(const RunConfig &cfg)
{
  auto L = load(cfg);
  auto const &G = *L.group;
  auto D = build_delta(G, L.action);
  auto R = analyze(D);

  std::cout << summary_line(D, R) << "\n";
  for (std::size_t c = 0; c < R.components.size(); ++c) {
    std::cout << "  component " << c << ": " << vertex_list(G, D, R.components[c]) << ", diameter "
              << R.diameters[c] << (R.clique_components[c] ? ", clique" : "") << "\n";
  }
  std::cout << "  universal: " << vertex_list(G, D, R.universal_vertices) << "\n";
  std::cout << "  isolated: " << vertex_list(G, D, R.isolated_vertices) << "\n";
  std::cout << "  complete: " << (R.is_complete ? "yes" : "no") << ", empty: " << (R.is_empty ? "yes" : "no")
            << "\n";
  emit(cfg, io::report_to_json(G, D, R).dump(2) + "\n");
  return 0;
}

int cmd_verify(const RunConfig &cfg, const std::string &theorem, bool all, const std::string &corpus_name)
{
  if (all == !theorem.empty())
    throw Error(ErrorKind::BadParameters, "give exactly one of --theorem and --all");
  auto selector = all ? std::string("all") : theorem;

  std::vector<SuiteCase> corpus;
  if (!corpus_name.empty()) {
    if (corpus_name != "catalog")
      throw Error(ErrorKind::UnknownKey, "unknown corpus '" + corpus_name + "'");
    corpus = catalog_corpus(cfg.action_cap);
  } else {
    if (cfg.group_source.empty())
      throw Error(ErrorKind::BadParameters, "verify needs --group or --corpus");
    auto L = load(cfg);
    corpus.push_back(SuiteCase{L.group, L.action});
  }

  VerifyOptions options;
  options.action_cap = cfg.action_cap;
  options.lattice_cap = cfg.lattice_cap;

  std::vector<TheoremVerdict> verdicts;
  if (corpus.size() == 1 && !all) {
    // a single explicit request surfaces ActionNotInner instead of skipping
    verdicts.push_back(verify(selector, corpus[0].group, corpus[0].action, options));
  } else {
    verdicts = run_suite(corpus, selector, options);
  }

  std::size_t with_hyp = 0;
  for (auto const &v : verdicts) {
    with_hyp += v.hypotheses_hold;
    if (corpus.size() == 1 || v.failed()) {
      std::cout << (v.failed() ? "FAIL " : v.hypotheses_hold ? "ok   " : "n/a  ") << v.theorem_id << "  "
                << v.group << " / " << v.action << ": " << v.detail;
      if (v.witness && v.failed())
        std::cout << " [" << *v.witness << "]";
      std::cout << "\n";
    }
  }
  auto failures = count_failures(verdicts);
  std::cout << verdicts.size() << " verdicts, " << with_hyp << " with hypotheses holding, " << failures
            << " failures\n";
  emit(cfg, io::verdicts_to_json(verdicts).dump(2) + "\n");
  return failures == 0 ? 0 : 1;
}

int cmd_catalog_list(const RunConfig &cfg)
{
  io::json listing = io::json::array();
  for (auto const &key : catalog::keys()) {
    auto e = catalog::load(key);
    std::cout << key << "  order " << e.group().order() << "  actions:";
    for (auto const &a : e.action_names())
      std::cout << " " << a;
    std::cout << "\n";
    listing.push_back(io::metadata_to_json(e));
  }
  emit(cfg, listing.dump(2) + "\n");
  return 0;
}

std::string file_stem(std::string key)
{
  for (auto &c : key) {
    if (c == '(' || c == ')' || c == ',' || c == '+')
      c = '_';
  }
  while (!key.empty() && key.back() == '_')
    key.pop_back();
  return key;
}

int cmd_catalog_dump(const RunConfig &cfg, const std::string &key, const std::string &dir)
{
  auto e = catalog::load(key);
  fs::create_directories(dir);
  auto stem = file_stem(e.key());

  auto group_path = fs::path(dir) / (stem + ".group.json");
  io::write_text_file(group_path, io::group_to_json(e.group()).dump(2) + "\n");
  std::cout << group_path.string() << "\n";

  for (auto const &name : e.action_names()) {
    auto A = e.action(name, cfg.action_cap);
    auto path = fs::path(dir) / (stem + ".action." + file_stem(name) + ".json");
    io::write_text_file(path, io::action_to_json(e.group(), A).dump(2) + "\n");
    std::cout << path.string() << "\n";
  }
  io::write_text_file(fs::path(dir) / (stem + ".metadata.json"), io::metadata_to_json(e).dump(2) + "\n");
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"automorphic cyclic graphs of finite permutation groups"};
  app.require_subcommand(1);

  RunConfig cfg;
  try {
    cfg.order_bound = default_order_bound();
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto add_common = [&](CLI::App *cmd, bool group_required) {
    auto g = cmd->add_option("--group", cfg.group_source, "catalog:KEY or path to a group JSON file");
    if (group_required)
      g->required();
    cmd->add_option("--aut", cfg.action_source, "trivial | inner | full | NAME | file:PATH");
    cmd->add_option("--out", cfg.out, "write machine-readable output here");
    cmd->add_option("--order-bound", cfg.order_bound, "largest group order to enumerate")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--action-cap", cfg.action_cap, "largest automorphism group to close")
      ->check(CLI::PositiveNumber);
    cmd->add_option("--lattice-cap", cfg.lattice_cap, "largest normal subgroup lattice")
      ->check(CLI::PositiveNumber);
  };

  auto *build = app.add_subcommand("build", "build the graph and optionally export it");
  add_common(build, true);
  build->add_option("--format", cfg.format, "json | dot | graphml")
    ->check(CLI::IsMember({"json", "dot", "graphml"}));

  auto *analyze_cmd = app.add_subcommand("analyze", "components, diameters, universal and isolated vertices");
  add_common(analyze_cmd, true);

  std::string theorem, corpus;
  bool all = false;
  auto *verify_cmd = app.add_subcommand("verify", "check theorem statements on instances");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--theorem", theorem, "A..H, lemmas, or a lemma id");
  verify_cmd->add_flag("--all", all, "every theorem and lemma");
  verify_cmd->add_option("--corpus", corpus, "catalog");

  auto *catalog_cmd = app.add_subcommand("catalog", "list or dump catalog entries");
  catalog_cmd->require_subcommand(1);
  auto *list_cmd = catalog_cmd->add_subcommand("list", "list catalog keys");
  list_cmd->add_option("--out", cfg.out, "write the JSON listing here");
  std::string dump_key, dump_dir = ".";
  auto *dump_cmd = catalog_cmd->add_subcommand("dump", "write group and action files for a key");
  dump_cmd->add_option("key", dump_key, "catalog key")->required();
  dump_cmd->add_option("--out-dir", dump_dir, "directory for the files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build)
      return cmd_build(cfg);
    if (*analyze_cmd)
      return cmd_analyze(cfg);
    if (*verify_cmd)
      return cmd_verify(cfg, theorem, all, corpus);
    if (*list_cmd)
      return cmd_catalog_list(cfg);
    if (*dump_cmd)
      return cmd_catalog_dump(cfg, dump_key, dump_dir);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
