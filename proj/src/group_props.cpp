#include "autocyc/group_props.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "autocyc/error.hpp"
#include "autocyc/number_theory.hpp"

namespace autocyc {

namespace {

void require_prime_divisor(const FiniteGroup &G, std::uint64_t p)
{
  if (!nt::is_prime(p) || G.order() % p != 0)
    throw Error(ErrorKind::PrimeNotDividing,
                std::to_string(p) + " is not a prime divisor of " +
                  std::to_string(G.order()));
}

// Number of elements g with g^(q) = 1.
std::size_t count_killed_by(const FiniteGroup &G, std::uint64_t q)
{
  std::size_t count = 0;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (q % G.element_order(g) == 0)
      ++count;
  }
  return count;
}

} // namespace

std::uint64_t exponent(const FiniteGroup &G)
{
  std::uint64_t e = 1;
  for (ElementId g = 0; g < G.order(); ++g)
    e = std::lcm(e, static_cast<std::uint64_t>(G.element_order(g)));
  return e;
}

std::uint64_t exponent_of(const FiniteGroup &G, const ElementSet &elements)
{
  std::uint64_t e = 1;
  for (auto g : elements)
    e = std::lcm(e, static_cast<std::uint64_t>(G.element_order(g)));
  return e;
}

bool is_abelian(const FiniteGroup &G)
{
  auto const &gens = G.generator_ids();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!G.commute(gens[i], gens[j]))
        return false;
    }
  }
  return true;
}

bool is_cyclic(const FiniteGroup &G)
{
  for (ElementId g = 0; g < G.order(); ++g) {
    if (G.element_order(g) == G.order())
      return true;
  }
  return false;
}

bool is_nilpotent(const FiniteGroup &G)
{
  std::vector<ElementId> all(G.order());
  std::iota(all.begin(), all.end(), ElementId{0});

  ElementSet term = all;
  for (;;) {
    if (term.size() == 1)
      return true;

    std::vector<char> seen(G.order(), 0);
    std::vector<ElementId> commutators;
    for (auto x : term) {
      for (auto g : G.generator_ids()) {
        auto c = G.commutator(x, g);
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }
    // [N, G] for normal N is the normal closure of the [x, g] with g
    // ranging over generators; close under conjugation explicitly.
    for (std::size_t head = 0; head < commutators.size(); ++head) {
      for (auto g : G.generator_ids()) {
        auto c = G.conjugate(commutators[head], g);
        if (!seen[c]) {
          seen[c] = 1;
          commutators.push_back(c);
        }
      }
    }

    auto next = generated_closure(G, commutators);
    if (next.size() == term.size())
      return false;
    term = std::move(next);
  }
}

GroupProfile profile(const FiniteGroup &G)
{
  GroupProfile prof;
  prof.order = G.order();
  prof.factorization = nt::factorize(G.order());
  prof.exponent = exponent(G);
  prof.abelian = is_abelian(G);
  prof.cyclic = is_cyclic(G);
  prof.nilpotent = prof.abelian || is_nilpotent(G);
  prof.center_size = center(G).size();
  return prof;
}

std::optional<std::uint64_t> is_p_group(const FiniteGroup &G)
{
  return nt::prime_of_power(G.order());
}

std::optional<std::uint64_t> is_p_group(const ElementSet &subgroup)
{
  return nt::prime_of_power(subgroup.size());
}

std::vector<ElementSet> minimal_subgroups(const FiniteGroup &G, std::uint64_t p)
{
  require_prime_divisor(G, p);

  std::vector<char> covered(G.order(), 0);
  std::vector<ElementSet> res;
  for (ElementId x = 1; x < G.order(); ++x) {
    if (G.element_order(x) != p || covered[x])
      continue;
    auto sub = cyclic_subgroup(G, x);
    for (auto y : sub)
      covered[y] = 1;
    res.push_back(std::move(sub));
  }
  return res;
}

bool unique_subgroup_of_order_p(const FiniteGroup &G, std::uint64_t p)
{
  return minimal_subgroups(G, p).size() == 1;
}

bool is_generalized_quaternion(const FiniteGroup &G)
{
  auto p = is_p_group(G);
  if (p != 2u || G.order() < 8 || is_cyclic(G))
    return false;
  return unique_subgroup_of_order_p(G, 2);
}

std::vector<std::uint64_t> abelian_type(const FiniteGroup &G)
{
  if (!is_abelian(G))
    throw Error(ErrorKind::NotAbelian, "abelian type requested for nonabelian group");

  std::vector<std::uint64_t> res;
  for (auto [p, mult] : nt::factorize(G.order())) {
    // ranks[i] = number of cyclic factors of order >= p^(i+1)
    std::vector<int> ranks;
    std::size_t prev = 1;
    std::uint64_t q = 1;
    for (int i = 0; i < mult; ++i) {
      q *= p;
      auto cur = count_killed_by(G, q);
      if (cur == prev)
        break;
      int r = 0;
      for (auto ratio = cur / prev; ratio > 1; ratio /= p)
        ++r;
      ranks.push_back(r);
      prev = cur;
    }

    std::vector<std::uint64_t> factors;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      int next = i + 1 < ranks.size() ? ranks[i + 1] : 0;
      for (int c = 0; c < ranks[i] - next; ++c)
        factors.push_back(nt::ipow(p, static_cast<unsigned>(i + 1)));
    }
    std::sort(factors.rbegin(), factors.rend());
    res.insert(res.end(), factors.begin(), factors.end());
  }
  return res;
}

bool is_homocyclic(const FiniteGroup &G)
{
  if (!is_abelian(G) || !is_p_group(G))
    return false;
  auto type = abelian_type(G);
  return std::adjacent_find(type.begin(), type.end(), std::not_equal_to<>()) == type.end();
}

bool all_elements_prime_order(const FiniteGroup &G)
{
  for (ElementId x = 1; x < G.order(); ++x) {
    if (!nt::is_prime(G.element_order(x)))
      return false;
  }
  return true;
}

std::vector<ElementSet> normal_subgroups(const FiniteGroup &G, std::size_t cap)
{
  std::set<ElementSet> found;
  auto add = [&](ElementSet s) {
    auto [it, inserted] = found.insert(std::move(s));
    if (found.size() > cap)
      throw Error(ErrorKind::LatticeCapExceeded,
                  "more than " + std::to_string(cap) + " normal subgroups");
    return inserted;
  };

  std::vector<ElementSet> layer;
  for (auto const &cls : conjugacy_classes(G)) {
    auto closure = generated_closure(G, cls);
    if (add(closure))
      layer.push_back(std::move(closure));
  }

  // Every normal subgroup is a join of class closures; join until stable.
  std::vector<ElementSet> generators(found.begin(), found.end());
  while (!layer.empty()) {
    std::vector<ElementSet> next_layer;
    for (auto const &a : layer) {
      for (auto const &b : generators) {
        if (std::includes(a.begin(), a.end(), b.begin(), b.end()))
          continue;
        ElementSet seeds;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(seeds));
        auto join = generated_closure(G, seeds);
        if (add(join))
          next_layer.push_back(std::move(join));
      }
    }
    layer = std::move(next_layer);
  }

  std::vector<ElementSet> res(found.begin(), found.end());
  std::stable_sort(res.begin(), res.end(), [](const ElementSet &a, const ElementSet &b) {
    return a.size() < b.size();
  });
  return res;
}

std::optional<FrobeniusWitness> frobenius_witness(const FiniteGroup &G, std::size_t cap)
{
  std::optional<FrobeniusWitness> best;
  for (auto const &N : normal_subgroups(G, cap)) {
    if (N.size() == 1 || N.size() == G.order())
      continue;

    bool ok = true;
    for (auto n : N) {
      if (n == kIdentity)
        continue;
      for (ElementId g = 0; g < G.order() && ok; ++g) {
        if (G.commute(g, n) && !contains(N, g))
          ok = false;
      }
      if (!ok)
        break;
    }

    if (ok && (!best || N.size() > best->kernel.size()))
      best = FrobeniusWitness{N, G.order() / N.size()};
  }
  return best;
}

ElementSet cyc_set(const FiniteGroup &G, ElementId i)
{
  ElementSet res;
  for (ElementId j = 0; j < G.order(); ++j) {
    if (j == kIdentity || is_cyclic_pair(G, i, j))
      res.push_back(j);
  }
  return res;
}

ElementSet kernel_K(const FiniteGroup &G)
{
  ElementSet res{kIdentity};
  for (ElementId g = 1; g < G.order(); ++g) {
    bool universal = true;
    for (ElementId x = 1; x < G.order() && universal; ++x)
      universal = is_cyclic_pair(G, x, g);
    if (universal)
      res.push_back(g);
  }
  return res;
}

} // namespace autocyc
