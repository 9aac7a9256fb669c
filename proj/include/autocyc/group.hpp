#ifndef AUTOCYC_GROUP_HPP
#define AUTOCYC_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "permutation.hpp"

namespace autocyc {

using ElementId = std::uint32_t;

// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<ElementId>;

inline constexpr ElementId kIdentity = 0;
inline constexpr std::size_t kDefaultOrderBound = 4096;
inline constexpr std::size_t kMaxCachedTableOrder = 2048;

struct EnumerateOptions
{
  std::size_t order_bound = kDefaultOrderBound;
  // Materialize the multiplication table when |G| <= kMaxCachedTableOrder.
  bool cache_table = true;
};

/// A fully enumerated permutation group.
///
/// Elements are indexed in Cayley-BFS order: the identity is element 0 and
/// the queue is expanded by right-multiplying each dequeued element with the
/// generators in listed order. Every element therefore carries a canonical
/// word (its BFS parent times one generator), which explicit automorphisms
/// and printed labels rely on. The indexing is part of the file formats and
/// must stay stable for a fixed generator list.
class FiniteGroup
{
public:
  static FiniteGroup enumerate(std::vector<Permutation> generators,
                               std::size_t degree,
                               std::size_t bound = kDefaultOrderBound,
                               std::string name = {});

  static FiniteGroup enumerate(std::vector<Permutation> generators,
                               std::size_t degree,
                               const EnumerateOptions &options,
                               std::string name = {});

  std::size_t order() const { return _elements.size(); }
  std::size_t degree() const { return _degree; }
  const std::string &name() const { return _name; }
  void set_name(std::string name) { _name = std::move(name); }

  const std::vector<Permutation> &generators() const { return _generators; }
  const std::vector<ElementId> &generator_ids() const { return _generator_ids; }

  const Permutation &element(ElementId i) const { return _elements[i]; }
  const std::vector<Permutation> &elements() const { return _elements; }
  std::optional<ElementId> index_of(const Permutation &p) const;

  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return _inverse[a]; }
  ElementId pow(ElementId a, long long e) const;

  // g^-1 x g
  ElementId conjugate(ElementId x, ElementId g) const { return mul(mul(inv(g), x), g); }
  // a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const;
  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  std::uint32_t element_order(ElementId a) const { return _orders[a]; }

  // BFS tree: element i = parent(i) * generators()[parent_generator(i)].
  ElementId parent(ElementId i) const { return _parent[i]; }
  std::size_t parent_generator(ElementId i) const { return _parent_gen[i]; }

  // Labels used by word_string; "g0", "g1", ... when unset.
  const std::vector<std::string> &generator_names() const { return _generator_names; }
  void set_generator_names(std::vector<std::string> names);

  // Generator indices spelling element i, leftmost first.
  std::vector<std::size_t> word(ElementId i) const;
  std::string word_string(ElementId i) const;

  // Stable hex digest of the degree and generator list.
  std::string hash() const;

  bool has_table() const { return !_table.empty(); }

private:
  FiniteGroup() = default;

  std::string _name;
  std::size_t _degree = 0;
  std::vector<Permutation> _generators;
  std::vector<std::string> _generator_names;
  std::vector<ElementId> _generator_ids;
  std::vector<Permutation> _elements;
  std::unordered_map<Permutation, ElementId, PermutationHash> _index;
  std::vector<std::uint16_t> _table;
  std::vector<ElementId> _inverse;
  std::vector<std::uint32_t> _orders;
  std::vector<ElementId> _parent;
  std::vector<std::size_t> _parent_gen;
};

std::uint32_t element_order(const FiniteGroup &G, ElementId i);

// Least subgroup containing the seeds.
ElementSet generated_closure(const FiniteGroup &G, std::span<const ElementId> seeds);

// True iff <x_i, x_j> is cyclic.
bool is_cyclic_pair(const FiniteGroup &G, ElementId i, ElementId j);

ElementSet center(const FiniteGroup &G);
ElementSet centralizer(const FiniteGroup &G, ElementId i);

// Conjugacy classes ordered by least member; each class sorted.
std::vector<ElementSet> conjugacy_classes(const FiniteGroup &G);

// Elements of <x>, sorted.
ElementSet cyclic_subgroup(const FiniteGroup &G, ElementId x);

bool contains(const ElementSet &set, ElementId x);

} // namespace autocyc

#endif // AUTOCYC_GROUP_HPP
