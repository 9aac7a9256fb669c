#ifndef AUTOCYC_AUTOMORPHISM_HPP
#define AUTOCYC_AUTOMORPHISM_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "group.hpp"

namespace autocyc {

inline constexpr std::size_t kDefaultActionCap = 20000;
inline constexpr std::size_t kDefaultBruteForceBound = 128;

/// An automorphism stored as the image of every element index.
class Automorphism
{
public:
  Automorphism() = default;
  explicit Automorphism(std::vector<ElementId> table)
  : _table(std::move(table))
  {}

  static Automorphism identity(std::size_t order);

  ElementId operator()(ElementId x) const { return _table[x]; }
  const std::vector<ElementId> &table() const { return _table; }
  std::size_t size() const { return _table.size(); }
  bool is_identity() const;

  friend bool operator==(const Automorphism &, const Automorphism &) = default;
  friend auto operator<=>(const Automorphism &, const Automorphism &) = default;

private:
  std::vector<ElementId> _table;
};

// Apply a first, then b.
Automorphism compose(const Automorphism &a, const Automorphism &b);
Automorphism inverse(const Automorphism &a);

// Throws NotBijective or NotAHomomorphism unless `table` is an automorphism.
Automorphism validated_automorphism(const FiniteGroup &G, std::vector<ElementId> table);

enum class ActionKind { trivial, inner, full, explicit_ };

std::string_view to_string(ActionKind kind);
std::optional<ActionKind> action_kind_from_string(std::string_view s);

/// A group A <= Aut(G) given by generators; `all` holds the closure once it
/// has been materialized.
struct AutAction
{
  ActionKind kind = ActionKind::trivial;
  std::string label;
  std::vector<Automorphism> generators;
  std::optional<std::vector<Automorphism>> all;

  bool is_closed() const { return all.has_value(); }
};

AutAction trivial_action(const FiniteGroup &G);

// Conjugation by each group generator.
AutAction inner_generators(const FiniteGroup &G);

// Conjugation g -> c^-1 g c by a permutation of the underlying points.
// Throws DoesNotNormalize if the degree differs or an image leaves G.
Automorphism from_conjugator(const FiniteGroup &G, const Permutation &c);

// Extends the images of the group generators along each element's BFS word.
Automorphism explicit_automorphism(const FiniteGroup &G, std::span<const ElementId> images);

// Closure under composition, deduplicated by table.
AutAction close_action(const FiniteGroup &G,
                       std::vector<Automorphism> generators,
                       std::size_t cap = kDefaultActionCap,
                       ActionKind kind = ActionKind::explicit_,
                       std::string label = "explicit");

// Returns a copy of A with its closure materialized.
AutAction closed(const FiniteGroup &G, const AutAction &A, std::size_t cap = kDefaultActionCap);

// All of Aut(G) by extending every order-compatible image of a small
// generating set. Throws GroupTooLarge when |G| > bound.
AutAction full_aut_brute(const FiniteGroup &G,
                         std::size_t bound = kDefaultBruteForceBound,
                         std::size_t cap = kDefaultActionCap);

/// A-orbits on the nonidentity elements.
struct OrbitPartition
{
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  // orbit id per element; kNone for the identity
  std::vector<std::uint32_t> orbit_of;
  // least element of each orbit, ascending
  std::vector<ElementId> representatives;
  std::vector<ElementSet> members;

  std::size_t size() const { return representatives.size(); }
};

OrbitPartition element_orbits(const FiniteGroup &G, const AutAction &A);

struct SubgroupOrbits
{
  std::vector<ElementSet> subgroups;
  // each orbit lists indices into `subgroups`, ascending; orbits ordered by
  // their first member
  std::vector<std::vector<std::size_t>> orbits;
};

SubgroupOrbits subgroup_orbits_order_p(const FiniteGroup &G, const AutAction &A, std::uint64_t p);

// Whether N_A(<x>) is transitive on <x> \ {1}. Uses the closure of A,
// computing it (up to `cap`) if A is not already closed.
bool normalizer_transitive_on_cyclic(const FiniteGroup &G,
                                     const AutAction &A,
                                     ElementId i,
                                     std::size_t cap = kDefaultActionCap);

// All elements of order n lie in one A-orbit. Throws NoSuchOrder.
bool order_class_transitive(const FiniteGroup &G, const AutAction &A, std::uint32_t n);

// All cyclic subgroups of order n lie in one A-orbit. Throws NoSuchOrder.
bool order_subgroup_transitive(const FiniteGroup &G, const AutAction &A, std::uint32_t n);

// Every generator of A is conjugation by some element of G.
bool is_within_inner(const FiniteGroup &G, const AutAction &A);

} // namespace autocyc

#endif // AUTOCYC_AUTOMORPHISM_HPP
