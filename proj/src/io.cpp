#include "autocyc/io.hpp"

#include <fstream>
#include <sstream>

#include "autocyc/error.hpp"

namespace autocyc::io {

json read_json_file(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception &e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
}

FiniteGroup group_from_json(const json &j, std::size_t order_bound)
{
  try {
    auto degree = j.at("degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (auto const &g : j.at("generators")) {
      if (g.is_string())
        gens.push_back(Permutation::from_cycles(degree, g.get<std::string>()));
      else
        gens.emplace_back(g.get<std::vector<Permutation::Point>>());
    }
    auto G = FiniteGroup::enumerate(std::move(gens), degree, order_bound, j.value("name", std::string{}));
    if (j.contains("generator_names"))
      G.set_generator_names(j.at("generator_names").get<std::vector<std::string>>());
    return G;
  } catch (const json::exception &e) {
    throw Error(ErrorKind::ParseError, std::string("group file: ") + e.what());
  }
}

json group_to_json(const FiniteGroup &G)
{
  json gens = json::array();
  for (auto const &g : G.generators())
    gens.push_back(g.images());
  json j{{"name", G.name()}, {"degree", G.degree()}, {"generators", gens}};
  if (!G.generator_names().empty())
    j["generator_names"] = G.generator_names();
  return j;
}

AutAction action_from_json(const FiniteGroup &G, const json &j, std::size_t cap)
{
  try {
    if (j.contains("group_hash") && j.at("group_hash").get<std::string>() != G.hash())
      throw Error(ErrorKind::HashMismatch,
                  "action file was written for group hash " + j.at("group_hash").get<std::string>() +
                    ", this group has " + G.hash());

    auto kind_name = j.value("kind", std::string("explicit"));
    auto kind = action_kind_from_string(kind_name);
    if (!kind)
      throw Error(ErrorKind::ParseError, "unknown action kind '" + kind_name + "'");

    AutAction A;
    switch (*kind) {
    case ActionKind::trivial:
      A = trivial_action(G);
      break;
    case ActionKind::inner:
      A = inner_generators(G);
      break;
    case ActionKind::full:
      A = full_aut_brute(G, kDefaultBruteForceBound, cap);
      break;
    case ActionKind::explicit_:
      A.kind = ActionKind::explicit_;
      A.label = "explicit";
      if (j.contains("conjugators")) {
        for (auto const &c : j.at("conjugators")) {
          auto perm = c.is_string() ? Permutation::from_cycles(G.degree(), c.get<std::string>())
                                    : Permutation(c.get<std::vector<Permutation::Point>>());
          A.generators.push_back(from_conjugator(G, perm));
        }
      }
      if (j.contains("tables")) {
        for (auto const &t : j.at("tables"))
          A.generators.push_back(validated_automorphism(G, t.get<std::vector<ElementId>>()));
      }
      if (j.contains("generator_images")) {
        for (auto const &im : j.at("generator_images")) {
          auto images = im.get<std::vector<ElementId>>();
          A.generators.push_back(explicit_automorphism(G, images));
        }
      }
      break;
    }
    if (j.contains("label"))
      A.label = j.at("label").get<std::string>();
    return A;
  } catch (const json::exception &e) {
    throw Error(ErrorKind::ParseError, std::string("action file: ") + e.what());
  }
}

json action_to_json(const FiniteGroup &G, const AutAction &A)
{
  json j{{"kind", std::string(to_string(A.kind))}, {"label", A.label}, {"group_hash", G.hash()}};
  if (A.kind == ActionKind::explicit_) {
    json tables = json::array();
    for (auto const &a : A.generators)
      tables.push_back(a.table());
    j["tables"] = tables;
  }
  return j;
}

json graph_to_json(const FiniteGroup &G, const DeltaGraph &D)
{
  json vertices = json::array();
  for (VertexId v = 0; v < D.vertex_count(); ++v) {
    auto const &vx = D.vertex(v);
    vertices.push_back({{"id", v},
                        {"representative", vx.representative},
                        {"word", G.word_string(vx.representative)},
                        {"order", vx.element_order},
                        {"orbit_size", vx.orbit_size},
                        {"members", D.members(v)}});
  }
  json edges = json::array();
  for (auto [u, v] : D.edges())
    edges.push_back({u, v});
  return json{{"group", D.group_name()},
              {"action", D.action_label()},
              {"group_hash", G.hash()},
              {"vertices", vertices},
              {"edges", edges}};
}

json report_to_json(const FiniteGroup &G, const DeltaGraph &D, const AnalysisReport &R)
{
  json rep{{"components", R.components},
           {"diameters", R.diameters},
           {"universal_vertices", R.universal_vertices},
           {"isolated_vertices", R.isolated_vertices},
           {"is_complete", R.is_complete},
           {"is_empty", R.is_empty},
           {"clique_components", R.clique_components},
           {"connected", R.connected()}};
  auto d = R.diameter();
  rep["diameter"] = d ? json(*d) : json(nullptr);
  return json{{"graph", graph_to_json(G, D)}, {"report", rep}, {"profile", profile_to_json(profile(G))}};
}

json profile_to_json(const GroupProfile &P)
{
  json fact = json::object();
  for (auto [p, e] : P.factorization)
    fact[std::to_string(p)] = e;
  return json{{"order", P.order},
              {"factorization", fact},
              {"exponent", P.exponent},
              {"abelian", P.abelian},
              {"nilpotent", P.nilpotent},
              {"cyclic", P.cyclic},
              {"center_size", P.center_size}};
}

json verdict_to_json(const TheoremVerdict &v)
{
  json j{{"theorem", v.theorem_id},
         {"group", v.group},
         {"action", v.action},
         {"hypotheses_hold", v.hypotheses_hold},
         {"detail", v.detail},
         {"failed", v.failed()}};
  j["conclusion_holds"] = v.conclusion_holds ? json(*v.conclusion_holds) : json(nullptr);
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  return j;
}

json verdicts_to_json(const std::vector<TheoremVerdict> &verdicts)
{
  json arr = json::array();
  for (auto const &v : verdicts)
    arr.push_back(verdict_to_json(v));
  return arr;
}

json metadata_to_json(const CatalogEntry &e)
{
  auto const &m = e.metadata();
  json j{{"key", e.key()},
         {"parameters", e.parameters()},
         {"generators", e.generator_names()},
         {"actions", e.action_names()},
         {"tags", e.tags()},
         {"order", m.order},
         {"exponent", m.exponent},
         {"abelian", m.abelian},
         {"nilpotent", m.nilpotent},
         {"cyclic", m.cyclic}};
  if (m.homocyclic)
    j["homocyclic"] = *m.homocyclic;
  if (m.generalized_quaternion)
    j["generalized_quaternion"] = *m.generalized_quaternion;
  if (m.frobenius_known) {
    j["frobenius"] = m.frobenius ? json{{"kernel_size", m.frobenius->first},
                                        {"complement_order", m.frobenius->second}}
                                 : json(nullptr);
  }
  if (m.field_polynomial)
    j["field_polynomial"] = *m.field_polynomial;
  return j;
}

std::string to_dot(const FiniteGroup &G, const DeltaGraph &D)
{
  std::ostringstream out;
  out << "graph delta {\n";
  out << "  label=\"" << D.group_name() << " / " << D.action_label() << "\";\n";
  for (VertexId v = 0; v < D.vertex_count(); ++v) {
    auto const &vx = D.vertex(v);
    out << "  v" << v << " [label=\"" << G.word_string(vx.representative) << "\\no=" << vx.element_order
        << " |X|=" << vx.orbit_size << "\"];\n";
  }
  for (auto [u, v] : D.edges())
    out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_graphml(const FiniteGroup &G, const DeltaGraph &D)
{
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      << "  <key id=\"rep\" for=\"node\" attr.name=\"representative\" attr.type=\"int\"/>\n"
      << "  <key id=\"word\" for=\"node\" attr.name=\"word\" attr.type=\"string\"/>\n"
      << "  <key id=\"order\" for=\"node\" attr.name=\"order\" attr.type=\"int\"/>\n"
      << "  <key id=\"size\" for=\"node\" attr.name=\"orbit_size\" attr.type=\"int\"/>\n"
      << "  <graph id=\"delta\" edgedefault=\"undirected\">\n";
  for (VertexId v = 0; v < D.vertex_count(); ++v) {
    auto const &vx = D.vertex(v);
    out << "    <node id=\"v" << v << "\">"
        << "<data key=\"rep\">" << vx.representative << "</data>"
        << "<data key=\"word\">" << G.word_string(vx.representative) << "</data>"
        << "<data key=\"order\">" << vx.element_order << "</data>"
        << "<data key=\"size\">" << vx.orbit_size << "</data></node>\n";
  }
  std::size_t e = 0;
  for (auto [u, v] : D.edges())
    out << "    <edge id=\"e" << e++ << "\" source=\"v" << u << "\" target=\"v" << v << "\"/>\n";
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

} // namespace autocyc::io
