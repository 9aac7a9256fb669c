#include "autocyc/delta_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace autocyc {

namespace {

struct OrderedOrbits
{
  std::vector<Vertex> vertices;
  std::vector<ElementSet> members;
  std::vector<VertexId> vertex_of;
};

OrderedOrbits order_orbits(const FiniteGroup &G, const OrbitPartition &P)
{
  std::vector<std::size_t> perm(P.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    auto ra = P.representatives[a], rb = P.representatives[b];
    auto oa = G.element_order(ra), ob = G.element_order(rb);
    return oa != ob ? oa < ob : ra < rb;
  });

  OrderedOrbits res;
  res.vertex_of.assign(G.order(), static_cast<VertexId>(OrbitPartition::kNone));
  for (std::size_t v = 0; v < perm.size(); ++v) {
    auto const &orbit = P.members[perm[v]];
    auto rep = P.representatives[perm[v]];
    res.vertices.push_back(Vertex{rep, G.element_order(rep), orbit.size()});
    res.members.push_back(orbit);
    for (auto x : orbit)
      res.vertex_of[x] = static_cast<VertexId>(v);
  }
  return res;
}

} // namespace

DeltaGraph::DeltaGraph(std::vector<Vertex> vertices,
                       std::vector<ElementSet> members,
                       std::vector<VertexId> vertex_of,
                       std::string group_name,
                       std::string action_label)
: _vertices(std::move(vertices)),
  _members(std::move(members)),
  _vertex_of(std::move(vertex_of)),
  _adj(_vertices.size() * _vertices.size(), 0),
  _group_name(std::move(group_name)),
  _action_label(std::move(action_label))
{}

void DeltaGraph::connect(VertexId u, VertexId v)
{
  if (u == v)
    return;
  _adj[u * _vertices.size() + v] = 1;
  _adj[v * _vertices.size() + u] = 1;
}

std::size_t DeltaGraph::degree(VertexId u) const
{
  std::size_t d = 0;
  for (VertexId v = 0; v < _vertices.size(); ++v)
    d += adjacent(u, v);
  return d;
}

std::vector<VertexId> DeltaGraph::neighbors(VertexId u) const
{
  std::vector<VertexId> res;
  for (VertexId v = 0; v < _vertices.size(); ++v) {
    if (adjacent(u, v))
      res.push_back(v);
  }
  return res;
}

std::vector<std::pair<VertexId, VertexId>> DeltaGraph::edges() const
{
  std::vector<std::pair<VertexId, VertexId>> res;
  for (VertexId u = 0; u < _vertices.size(); ++u) {
    for (VertexId v = u + 1; v < _vertices.size(); ++v) {
      if (adjacent(u, v))
        res.emplace_back(u, v);
    }
  }
  return res;
}

std::size_t DeltaGraph::edge_count() const
{
  return static_cast<std::size_t>(std::count(_adj.begin(), _adj.end(), 1)) / 2;
}

bool DeltaGraph::same_structure(const DeltaGraph &other) const
{
  return _vertices == other._vertices && _members == other._members && _adj == other._adj;
}

DeltaGraph build_delta(const FiniteGroup &G, const AutAction &A, const CyclicPairTest &cyclic)
{
  auto orbits = order_orbits(G, element_orbits(G, A));
  auto n = orbits.vertices.size();
  DeltaGraph D(orbits.vertices, orbits.members, orbits.vertex_of, G.name(), A.label);

  // Orbits are A-invariant and automorphisms preserve cyclicity, so one
  // fixed representative of X suffices when scanning Y.
  for (VertexId u = 0; u < n; ++u) {
    auto x = D.vertex(u).representative;
    for (VertexId v = u + 1; v < n; ++v) {
      for (auto y : D.members(v)) {
        if (cyclic(x, y)) {
          D.connect(u, v);
          break;
        }
      }
    }
  }
  return D;
}

DeltaGraph build_delta(const FiniteGroup &G, const AutAction &A)
{
  return build_delta(G, A, [&G](ElementId x, ElementId y) { return is_cyclic_pair(G, x, y); });
}

DeltaGraph build_enhanced_power(const FiniteGroup &G)
{
  return build_delta(G, trivial_action(G));
}

DeltaGraph build_ccc_cyclic(const FiniteGroup &G)
{
  return build_delta(G, inner_generators(G));
}

DeltaGraph quotient_of_enhanced(const FiniteGroup &G, const AutAction &A)
{
  auto enhanced = build_enhanced_power(G);
  auto orbits = order_orbits(G, element_orbits(G, A));
  DeltaGraph D(orbits.vertices, orbits.members, orbits.vertex_of, G.name(), A.label);

  for (auto [a, b] : enhanced.edges()) {
    auto x = enhanced.vertex(a).representative;
    auto y = enhanced.vertex(b).representative;
    D.connect(D.vertex_of(x), D.vertex_of(y));
  }
  return D;
}

std::vector<std::optional<std::uint32_t>> distances_from(const DeltaGraph &D, VertexId u)
{
  std::vector<std::optional<std::uint32_t>> dist(D.vertex_count());
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    auto w = queue.front();
    queue.pop_front();
    for (VertexId v = 0; v < D.vertex_count(); ++v) {
      if (!dist[v] && D.adjacent(w, v)) {
        dist[v] = *dist[w] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::optional<std::uint32_t> distance(const DeltaGraph &D, VertexId u, VertexId v)
{
  return distances_from(D, u)[v];
}

std::optional<std::uint32_t> AnalysisReport::diameter() const
{
  if (components.size() > 1)
    return std::nullopt;
  return diameters.empty() ? 0u : diameters.front();
}

AnalysisReport analyze(const DeltaGraph &D)
{
  AnalysisReport R;
  auto n = D.vertex_count();
  R.component_of.assign(n, 0);

  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (VertexId v = 0; v < n; ++v) {
        if (!seen[v] && D.adjacent(comp[head], v)) {
          seen[v] = 1;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    for (auto v : comp)
      R.component_of[v] = static_cast<std::uint32_t>(R.components.size());
    R.components.push_back(std::move(comp));
  }

  R.diameters.assign(R.components.size(), 0);
  for (VertexId u = 0; u < n; ++u) {
    auto dist = distances_from(D, u);
    auto &diam = R.diameters[R.component_of[u]];
    for (auto const &d : dist) {
      if (d)
        diam = std::max(diam, *d);
    }
  }

  for (VertexId u = 0; u < n; ++u) {
    auto deg = D.degree(u);
    if (deg + 1 == n)
      R.universal_vertices.push_back(u);
    if (deg == 0)
      R.isolated_vertices.push_back(u);
  }

  for (auto d : R.diameters)
    R.clique_components.push_back(d <= 1);

  R.is_empty = R.isolated_vertices.size() == n;
  R.is_complete = R.components.size() <= 1 && (R.diameters.empty() || R.diameters.front() <= 1);
  return R;
}

} // namespace autocyc
