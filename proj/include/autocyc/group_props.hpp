#ifndef AUTOCYC_GROUP_PROPS_HPP
#define AUTOCYC_GROUP_PROPS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "group.hpp"

namespace autocyc {

inline constexpr std::size_t kDefaultLatticeCap = 512;

struct GroupProfile
{
  std::size_t order = 1;
  std::map<std::uint64_t, int> factorization;
  std::uint64_t exponent = 1;
  bool abelian = true;
  bool nilpotent = true;
  bool cyclic = true;
  std::size_t center_size = 1;
};

GroupProfile profile(const FiniteGroup &G);

std::uint64_t exponent(const FiniteGroup &G);
bool is_abelian(const FiniteGroup &G);
bool is_cyclic(const FiniteGroup &G);

// Lower central series reaches the trivial subgroup.
bool is_nilpotent(const FiniteGroup &G);

// The prime p when |G| is a positive power of p.
std::optional<std::uint64_t> is_p_group(const FiniteGroup &G);
// Same question for a subgroup given by its elements.
std::optional<std::uint64_t> is_p_group(const ElementSet &subgroup);

// Subgroups of order p, ordered by their least nonidentity element.
// Throws PrimeNotDividing unless p is a prime dividing |G|.
std::vector<ElementSet> minimal_subgroups(const FiniteGroup &G, std::uint64_t p);

bool unique_subgroup_of_order_p(const FiniteGroup &G, std::uint64_t p);

bool is_generalized_quaternion(const FiniteGroup &G);

// Invariants of an abelian group as prime powers: primes ascending, powers
// descending within each prime. Throws NotAbelian.
std::vector<std::uint64_t> abelian_type(const FiniteGroup &G);
bool is_homocyclic(const FiniteGroup &G);

bool all_elements_prime_order(const FiniteGroup &G);

// lcm of the orders of the given elements
std::uint64_t exponent_of(const FiniteGroup &G, const ElementSet &elements);

// Normal subgroups ordered by (size, elements). Throws LatticeCapExceeded
// when there are more than `cap` of them.
std::vector<ElementSet> normal_subgroups(const FiniteGroup &G,
                                         std::size_t cap = kDefaultLatticeCap);

struct FrobeniusWitness
{
  ElementSet kernel;
  std::size_t complement_order = 0;
};

// A proper nontrivial normal subgroup N with C_G(n) <= N for every
// nonidentity n in N; the largest one if several qualify.
std::optional<FrobeniusWitness> frobenius_witness(const FiniteGroup &G,
                                                  std::size_t cap = kDefaultLatticeCap);

// {y : <x_i, y> cyclic}, which always contains the identity.
ElementSet cyc_set(const FiniteGroup &G, ElementId i);

// Intersection of all cyc_set(x).
ElementSet kernel_K(const FiniteGroup &G);

} // namespace autocyc

#endif // AUTOCYC_GROUP_PROPS_HPP
