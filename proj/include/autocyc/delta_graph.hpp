#ifndef AUTOCYC_DELTA_GRAPH_HPP
#define AUTOCYC_DELTA_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "group.hpp"

namespace autocyc {

using VertexId = std::uint32_t;

struct Vertex
{
  ElementId representative = kIdentity;
  std::uint32_t element_order = 1;
  std::size_t orbit_size = 0;

  friend bool operator==(const Vertex &, const Vertex &) = default;
};

/// The automorphic cyclic graph: one vertex per A-orbit of nonidentity
/// elements, X ~ Y when some x in X and y in Y generate a cyclic subgroup.
/// Vertices are ordered by (element order, representative).
class DeltaGraph
{
public:
  DeltaGraph() = default;
  DeltaGraph(std::vector<Vertex> vertices,
             std::vector<ElementSet> members,
             std::vector<VertexId> vertex_of,
             std::string group_name,
             std::string action_label);

  std::size_t vertex_count() const { return _vertices.size(); }
  const std::vector<Vertex> &vertices() const { return _vertices; }
  const Vertex &vertex(VertexId v) const { return _vertices[v]; }
  const ElementSet &members(VertexId v) const { return _members[v]; }

  // Vertex holding a nonidentity element.
  VertexId vertex_of(ElementId x) const { return _vertex_of[x]; }

  bool adjacent(VertexId u, VertexId v) const { return _adj[u * _vertices.size() + v] != 0; }
  void connect(VertexId u, VertexId v);

  std::size_t degree(VertexId u) const;
  std::vector<VertexId> neighbors(VertexId u) const;
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::size_t edge_count() const;

  const std::string &group_name() const { return _group_name; }
  const std::string &action_label() const { return _action_label; }

  // Same vertices, members and adjacency; provenance is ignored.
  bool same_structure(const DeltaGraph &other) const;

private:
  std::vector<Vertex> _vertices;
  std::vector<ElementSet> _members;
  std::vector<VertexId> _vertex_of;
  std::vector<std::uint8_t> _adj;
  std::string _group_name;
  std::string _action_label;
};

using CyclicPairTest = std::function<bool(ElementId, ElementId)>;

DeltaGraph build_delta(const FiniteGroup &G, const AutAction &A);

// Same construction with a caller-supplied pair predicate in place of
// is_cyclic_pair.
DeltaGraph build_delta(const FiniteGroup &G, const AutAction &A, const CyclicPairTest &cyclic);

DeltaGraph build_enhanced_power(const FiniteGroup &G);
DeltaGraph build_ccc_cyclic(const FiniteGroup &G);

// Builds the enhanced power graph and merges its vertices by A-orbit.
DeltaGraph quotient_of_enhanced(const FiniteGroup &G, const AutAction &A);

struct AnalysisReport
{
  std::vector<std::vector<VertexId>> components;
  std::vector<std::uint32_t> component_of;
  // max eccentricity inside each component
  std::vector<std::uint32_t> diameters;
  std::vector<VertexId> universal_vertices;
  std::vector<VertexId> isolated_vertices;
  // The graph without vertices (trivial group) counts as both complete and
  // empty.
  bool is_complete = true;
  bool is_empty = true;
  std::vector<bool> clique_components;

  bool connected() const { return components.size() <= 1; }
  // Diameter of a connected graph; absent when disconnected.
  std::optional<std::uint32_t> diameter() const;
};

AnalysisReport analyze(const DeltaGraph &D);

std::optional<std::uint32_t> distance(const DeltaGraph &D, VertexId u, VertexId v);

// Breadth-first distances from u; absent entries are unreachable.
std::vector<std::optional<std::uint32_t>> distances_from(const DeltaGraph &D, VertexId u);

} // namespace autocyc

#endif // AUTOCYC_DELTA_GRAPH_HPP
