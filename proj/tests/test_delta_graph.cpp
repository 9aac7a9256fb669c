#include <gtest/gtest.h>

#include <numeric>

#include <autocyc/catalog.hpp>
#include <autocyc/delta_graph.hpp>
#include <autocyc/group_props.hpp>
#include <autocyc/io.hpp>

#include "oracle.hpp"

using namespace autocyc;

namespace {

struct Built
{
  CatalogEntry entry;
  AutAction action;
  DeltaGraph graph;
};

Built build(const std::string &key, const std::string &action)
{
  auto e = catalog::load(key);
  auto A = e.action(action);
  auto D = build_delta(e.group(), A);
  return Built{std::move(e), std::move(A), std::move(D)};
}

std::string safe_name(const std::string &s)
{
  std::string out;
  for (char c : s)
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::vector<std::pair<std::string, std::string>> catalog_pairs(std::size_t max_order)
{
  std::vector<std::pair<std::string, std::string>> out;
  for (auto const &key : catalog::keys()) {
    auto e = catalog::load(key);
    if (e.group().order() > max_order)
      continue;
    for (auto const &a : e.action_names())
      out.emplace_back(key, a);
  }
  return out;
}

} // namespace

TEST(DeltaGraph, G27InnerTau)
{
  auto b = build("g27", "inner+tau");
  auto const &D = b.graph;
  EXPECT_EQ(D.vertex_count(), 6u);
  auto R = analyze(D);
  EXPECT_EQ(R.components.size(), 2u);
  auto v = [&](const char *w) { return D.vertex_of(b.entry.element(w)); };
  EXPECT_EQ(R.component_of[v("b")], R.component_of[v("b^2")]);
  for (auto w : {"a", "ba", "b^2a"})
    EXPECT_EQ(R.component_of[v("a^3")], R.component_of[v(w)]);
  EXPECT_NE(R.component_of[v("b")], R.component_of[v("a")]);
  EXPECT_FALSE(D.adjacent(v("a"), v("ba")));
  EXPECT_FALSE(D.adjacent(v("a"), v("b^2a")));
}

TEST(DeltaGraph, D8FullAut)
{
  // Three orbits: the central involution, the other involutions and the
  // elements of order 4. Only the central involution and the order-4 orbit
  // generate a cyclic group, so there is a single edge.
  auto b = build("d8", "full");
  auto const &D = b.graph;
  ASSERT_EQ(D.vertex_count(), 3u);
  auto const &G = b.entry.group();
  auto r = b.entry.element("r"), s = b.entry.element("s");
  auto vr = D.vertex_of(r), vr2 = D.vertex_of(G.pow(r, 2)), vs = D.vertex_of(s);
  EXPECT_TRUE(D.adjacent(vr, vr2));
  EXPECT_FALSE(D.adjacent(vr, vs));
  EXPECT_FALSE(D.adjacent(vr2, vs));
  EXPECT_EQ(D.edge_count(), 1u);
  auto R = analyze(D);
  EXPECT_TRUE(R.universal_vertices.empty());
  EXPECT_EQ(R.isolated_vertices, std::vector<VertexId>{vs});
}

TEST(DeltaGraph, SingerSingleVertex)
{
  for (auto key : {"singer(3,2)", "singer(2,3)"}) {
    auto b = build(key, "singer");
    EXPECT_EQ(b.graph.vertex_count(), 1u);
    EXPECT_EQ(b.graph.edge_count(), 0u);
    auto R = analyze(b.graph);
    EXPECT_TRUE(R.is_complete);
    EXPECT_TRUE(R.is_empty);
  }
}

TEST(DeltaGraph, EnhancedPowerExamples)
{
  auto z6 = catalog::load("z6");
  auto D = build_enhanced_power(z6.group());
  EXPECT_EQ(D.vertex_count(), 5u);
  EXPECT_EQ(D.edge_count(), 10u);
  EXPECT_TRUE(analyze(D).is_complete);

  auto k = catalog::load("z2xz2");
  auto K = build_enhanced_power(k.group());
  EXPECT_EQ(K.vertex_count(), 3u);
  EXPECT_EQ(K.edge_count(), 0u);
  EXPECT_EQ(analyze(K).isolated_vertices.size(), 3u);

  auto b = build("z6_x_frob42", "trivial");
  auto x = b.entry.tagged("x"), y = b.entry.tagged("y");
  EXPECT_EQ(distance(b.graph, b.graph.vertex_of(x), b.graph.vertex_of(y)), 4u);
}

TEST(DeltaGraph, ConjugacyClassExamples)
{
  auto s3 = catalog::load("frobenius(3,2)");
  auto D = build_ccc_cyclic(s3.group());
  EXPECT_EQ(D.vertex_count(), 2u);
  EXPECT_TRUE(analyze(D).is_empty);

  auto a5 = catalog::load("a5");
  auto A = build_ccc_cyclic(a5.group());
  ASSERT_EQ(A.vertex_count(), 4u);
  ASSERT_EQ(A.edge_count(), 1u);
  auto [u, v] = A.edges()[0];
  EXPECT_EQ(A.vertex(u).element_order, 5u);
  EXPECT_EQ(A.vertex(v).element_order, 5u);

  auto b = catalog::load("z6_x_frob42");
  auto C = build_ccc_cyclic(b.group());
  auto vx = C.vertex_of(b.tagged("x")), vy = C.vertex_of(b.tagged("y"));
  EXPECT_EQ(vx, vy);
  EXPECT_EQ(distance(C, vx, vy), 0u);
}

TEST(DeltaGraph, QuotientOracleExamples)
{
  auto z12 = catalog::load("z12");
  EXPECT_TRUE(quotient_of_enhanced(z12.group(), trivial_action(z12.group()))
                .same_structure(build_enhanced_power(z12.group())));
  auto g = build("g27", "inner+tau");
  EXPECT_TRUE(quotient_of_enhanced(g.entry.group(), g.action).same_structure(g.graph));
  auto a = build("a5", "s4");
  EXPECT_TRUE(quotient_of_enhanced(a.entry.group(), a.action).same_structure(a.graph));
}

TEST(DeltaGraph, AnalysisExamples)
{
  auto z6 = catalog::load("z6");
  auto R = analyze(build_enhanced_power(z6.group()));
  EXPECT_EQ(R.diameter(), 1u);
  EXPECT_EQ(R.universal_vertices.size(), 5u);

  auto k = build("klein4_x_extraspecial27", "inner");
  auto RK = analyze(k.graph);
  EXPECT_TRUE(RK.connected());
  EXPECT_EQ(RK.diameter(), 3u);
  EXPECT_EQ(distance(k.graph, k.graph.vertex_of(k.entry.tagged("x")), k.graph.vertex_of(k.entry.tagged("y"))),
            3u);

  auto q = build("q8", "inner");
  auto RQ = analyze(q.graph);
  ElementId minus_one = 0;
  for (ElementId x = 1; x < q.entry.group().order(); ++x)
    if (q.entry.group().element_order(x) == 2)
      minus_one = x;
  EXPECT_EQ(RQ.universal_vertices, std::vector<VertexId>{q.graph.vertex_of(minus_one)});

  auto d = build("g27", "inner+tau");
  EXPECT_EQ(distance(d.graph, 0, 0), 0u);
  auto [u, v] = d.graph.edges().front();
  EXPECT_EQ(distance(d.graph, u, v), 1u);
  EXPECT_FALSE(analyze(d.graph).diameter());
}

TEST(DeltaGraph, TrivialGroupConvention)
{
  auto G = FiniteGroup::enumerate({}, 2, kDefaultOrderBound, "trivial");
  auto D = build_delta(G, trivial_action(G));
  EXPECT_EQ(D.vertex_count(), 0u);
  auto R = analyze(D);
  EXPECT_TRUE(R.is_empty);
  EXPECT_TRUE(R.is_complete);
  EXPECT_TRUE(R.connected());
}

TEST(DeltaGraph, CustomPredicate)
{
  auto e = catalog::load("d12");
  auto const &G = e.group();
  auto A = inner_generators(G);
  auto same = build_delta(G, A, [&](ElementId x, ElementId y) { return is_cyclic_pair(G, x, y); });
  EXPECT_TRUE(same.same_structure(build_delta(G, A)));
  auto none = build_delta(G, A, [](ElementId, ElementId) { return false; });
  EXPECT_EQ(none.edge_count(), 0u);
  EXPECT_EQ(none.vertex_count(), same.vertex_count());
}

TEST(DeltaGraph, Export)
{
  auto e = catalog::load("z6");
  auto D = build_enhanced_power(e.group());
  auto dot = io::to_dot(e.group(), D);
  EXPECT_EQ(dot.rfind("graph delta {", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1))
    ++edges;
  EXPECT_EQ(edges, 10u);
  auto gml = io::to_graphml(e.group(), D);
  EXPECT_NE(gml.find("<graphml"), std::string::npos);
  auto j = io::graph_to_json(e.group(), D);
  EXPECT_EQ(j["vertices"].size(), 5u);
  EXPECT_EQ(j["edges"].size(), 10u);
}

class GraphPairs : public ::testing::TestWithParam<std::pair<std::string, std::string>>
{};

TEST_P(GraphPairs, MatchesDefinition)
{
  auto [key, action] = GetParam();
  auto b = build(key, action);
  auto const &G = b.entry.group();
  auto const &D = b.graph;
  oracle::Table T(G);
  auto O = oracle::delta(T, b.action);

  ASSERT_EQ(D.vertex_count(), O.vertices.size());
  std::vector<VertexId> map(O.vertices.size());
  for (std::size_t i = 0; i < O.vertices.size(); ++i) {
    map[i] = D.vertex_of(*O.vertices[i].begin());
    auto const &m = D.members(map[i]);
    EXPECT_EQ(std::set<std::uint32_t>(m.begin(), m.end()), O.vertices[i]);
    EXPECT_EQ(D.vertex(map[i]).orbit_size, m.size());
    EXPECT_EQ(D.vertex(map[i]).representative, m.front());
  }
  for (std::size_t i = 0; i < O.vertices.size(); ++i)
    for (std::size_t j = 0; j < O.vertices.size(); ++j)
      EXPECT_EQ(D.adjacent(map[i], map[j]), O.adj[i][j]);

  for (VertexId v = 1; v < D.vertex_count(); ++v) {
    auto a = D.vertex(v - 1), c = D.vertex(v);
    EXPECT_TRUE(std::pair(a.element_order, a.representative) < std::pair(c.element_order, c.representative));
  }

  EXPECT_TRUE(quotient_of_enhanced(G, b.action).same_structure(D));

  auto R = analyze(D);
  std::vector<std::vector<bool>> adj(D.vertex_count(), std::vector<bool>(D.vertex_count()));
  for (VertexId u = 0; u < D.vertex_count(); ++u)
    for (VertexId v = 0; v < D.vertex_count(); ++v)
      adj[u][v] = D.adjacent(u, v);
  auto dist = oracle::all_distances(adj);
  std::size_t m = D.vertex_count();
  bool complete = true, empty = D.edge_count() == 0;
  for (VertexId u = 0; u < m; ++u) {
    auto row = distances_from(D, u);
    bool universal = true;
    for (VertexId v = 0; v < m; ++v) {
      if (dist[u][v] == oracle::kInf)
        EXPECT_FALSE(row[v]);
      else
        EXPECT_EQ(row[v], dist[u][v]);
      EXPECT_EQ(R.component_of[u] == R.component_of[v], dist[u][v] != oracle::kInf);
      if (u != v && !adj[u][v]) {
        universal = false;
        complete = false;
      }
    }
    EXPECT_EQ(std::count(R.universal_vertices.begin(), R.universal_vertices.end(), u) == 1, universal);
    EXPECT_EQ(std::count(R.isolated_vertices.begin(), R.isolated_vertices.end(), u) == 1, D.degree(u) == 0);
  }
  EXPECT_EQ(R.is_complete, complete);
  EXPECT_EQ(R.is_empty, empty);
  for (std::size_t c = 0; c < R.components.size(); ++c) {
    std::size_t diam = 0;
    bool clique = true;
    for (auto u : R.components[c])
      for (auto v : R.components[c]) {
        diam = std::max(diam, dist[u][v]);
        clique = clique && (u == v || adj[u][v]);
      }
    EXPECT_EQ(R.diameters[c], diam);
    EXPECT_EQ(R.clique_components[c], clique);
  }
}

TEST_P(GraphPairs, EdgesAreActionInvariant)
{
  auto [key, action] = GetParam();
  auto b = build(key, action);
  auto const &G = b.entry.group();
  auto const &D = b.graph;
  for (auto const &a : b.action.generators) {
    for (VertexId v = 0; v < D.vertex_count(); ++v) {
      ElementSet image;
      for (auto x : D.members(v))
        image.push_back(a(x));
      std::sort(image.begin(), image.end());
      EXPECT_EQ(image, D.members(v));
    }
    for (ElementId x = 1; x < G.order(); x += 3)
      for (ElementId y = 1; y < G.order(); y += 5)
        EXPECT_EQ(is_cyclic_pair(G, x, y), is_cyclic_pair(G, a(x), a(y)));
  }
}

TEST_P(GraphPairs, ElementLevelLaws)
{
  auto [key, action] = GetParam();
  auto b = build(key, action);
  auto const &G = b.entry.group();
  auto const &D = b.graph;
  for (ElementId x = 1; x < G.order(); ++x) {
    auto vx = D.vertex_of(x);
    for (ElementId y = 1; y < G.order(); ++y) {
      auto vy = D.vertex_of(y);
      if (vx != vy && G.commute(x, y) && std::gcd(G.element_order(x), G.element_order(y)) == 1)
        EXPECT_TRUE(D.adjacent(vx, vy));
    }
    for (std::uint32_t d = 2; d < G.element_order(x); ++d) {
      auto p = G.pow(x, d);
      if (p != kIdentity && D.vertex_of(p) != vx)
        EXPECT_TRUE(D.adjacent(vx, D.vertex_of(p)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, GraphPairs, ::testing::ValuesIn(catalog_pairs(128)),
                         [](const auto &info) { return safe_name(info.param.first + "_" + info.param.second); });

namespace {

void expect_monotone(const FiniteGroup &G, const DeltaGraph &small, const DeltaGraph &big)
{
  for (auto [u, v] : small.edges()) {
    auto bu = big.vertex_of(small.vertex(u).representative);
    auto bv = big.vertex_of(small.vertex(v).representative);
    EXPECT_TRUE(bu == bv || big.adjacent(bu, bv)) << G.name();
  }
  for (VertexId v = 0; v < small.vertex_count(); ++v) {
    auto target = big.vertex_of(small.vertex(v).representative);
    for (auto x : small.members(v))
      EXPECT_EQ(big.vertex_of(x), target);
  }
}

} // namespace

TEST(DeltaGraphProperty, MonotoneUnderActionGrowth)
{
  for (auto const &key : catalog::keys()) {
    auto e = catalog::load(key);
    auto const &G = e.group();
    auto trivial = build_delta(G, e.action("trivial"));
    auto inner = build_delta(G, e.action("inner"));
    expect_monotone(G, trivial, inner);
    if (e.has_action("full"))
      expect_monotone(G, inner, build_delta(G, e.action("full")));
  }
  auto g = catalog::load("g27");
  auto tau = build_delta(g.group(), g.action("tau"));
  auto inner_tau = build_delta(g.group(), g.action("inner+tau"));
  expect_monotone(g.group(), build_delta(g.group(), g.action("inner")), inner_tau);
  expect_monotone(g.group(), tau, inner_tau);
  expect_monotone(g.group(), inner_tau, build_delta(g.group(), g.action("full")));

  auto a = catalog::load("a5");
  auto s4 = build_delta(a.group(), a.action("s4"));
  expect_monotone(a.group(), build_delta(a.group(), a.action("trivial")), s4);
  expect_monotone(a.group(), s4, build_delta(a.group(), a.action("s5")));
}

TEST(DeltaGraphProperty, QuotientOracleOnWholeCatalog)
{
  for (auto const &key : catalog::keys()) {
    auto e = catalog::load(key);
    for (auto const &name : e.action_names()) {
      auto A = e.action(name);
      EXPECT_TRUE(build_delta(e.group(), A).same_structure(quotient_of_enhanced(e.group(), A)))
        << key << " " << name;
    }
  }
}
