#include "autocyc/automorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "autocyc/disjoint_set.hpp"
#include "autocyc/error.hpp"
#include "autocyc/group_props.hpp"

namespace autocyc {

namespace {

struct TableHash
{
  std::size_t operator()(const std::vector<ElementId> &t) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto v : t) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<Automorphism> closure_of(const FiniteGroup &G,
                                     const std::vector<Automorphism> &generators,
                                     std::size_t cap)
{
  std::unordered_set<std::vector<ElementId>, TableHash> seen;
  std::vector<Automorphism> members{Automorphism::identity(G.order())};
  seen.insert(members.front().table());

  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto const &gen : generators) {
      auto next = compose(members[head], gen);
      if (seen.contains(next.table()))
        continue;
      if (members.size() >= cap)
        throw Error(ErrorKind::ActionCapExceeded,
                    "automorphism group larger than cap " + std::to_string(cap));
      seen.insert(next.table());
      members.push_back(std::move(next));
    }
  }
  return members;
}

// Greedy small generating set: repeatedly take the element that enlarges
// the generated subgroup most, preferring fewer same-order candidates.
std::vector<ElementId> small_generating_set(const FiniteGroup &G)
{
  std::vector<std::size_t> order_count(G.order() + 1, 0);
  for (ElementId x = 0; x < G.order(); ++x)
    ++order_count[G.element_order(x)];

  std::vector<ElementId> gens;
  std::size_t current = 1;
  while (current < G.order()) {
    ElementId best = kIdentity;
    std::size_t best_size = current;
    for (ElementId x = 1; x < G.order(); ++x) {
      auto seeds = gens;
      seeds.push_back(x);
      auto size = generated_closure(G, seeds).size();
      bool better = size > best_size ||
                    (size == best_size && best != kIdentity &&
                     order_count[G.element_order(x)] < order_count[G.element_order(best)]);
      if (better) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    current = best_size;
  }
  return gens;
}

} // namespace

Automorphism Automorphism::identity(std::size_t order)
{
  std::vector<ElementId> t(order);
  std::iota(t.begin(), t.end(), ElementId{0});
  return Automorphism(std::move(t));
}

bool Automorphism::is_identity() const
{
  for (std::size_t i = 0; i < _table.size(); ++i) {
    if (_table[i] != i)
      return false;
  }
  return true;
}

Automorphism compose(const Automorphism &a, const Automorphism &b)
{
  std::vector<ElementId> t(a.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[i] = b(a(static_cast<ElementId>(i)));
  return Automorphism(std::move(t));
}

Automorphism inverse(const Automorphism &a)
{
  std::vector<ElementId> t(a.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    t[a(static_cast<ElementId>(i))] = static_cast<ElementId>(i);
  return Automorphism(std::move(t));
}

Automorphism validated_automorphism(const FiniteGroup &G, std::vector<ElementId> table)
{
  if (table.size() != G.order())
    throw Error(ErrorKind::NotBijective,
                "table has " + std::to_string(table.size()) + " entries for a group of order " +
                  std::to_string(G.order()));
  for (auto v : table) {
    if (v >= G.order())
      throw Error(ErrorKind::NotBijective, "table entry out of range");
  }

  for (ElementId x = 0; x < G.order(); ++x) {
    for (auto g : G.generator_ids()) {
      if (table[G.mul(x, g)] != G.mul(table[x], table[g]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "image of " + G.word_string(x) + " * " + G.word_string(g) +
                      " is not the product of the images");
    }
  }
  if (table[kIdentity] != kIdentity)
    throw Error(ErrorKind::NotAHomomorphism, "identity not fixed");

  std::vector<char> hit(G.order(), 0);
  for (auto v : table) {
    if (hit[v])
      throw Error(ErrorKind::NotBijective, "element " + std::to_string(v) + " hit twice");
    hit[v] = 1;
  }

  return Automorphism(std::move(table));
}

std::string_view to_string(ActionKind kind)
{
  switch (kind) {
  case ActionKind::trivial: return "trivial";
  case ActionKind::inner: return "inner";
  case ActionKind::full: return "full";
  case ActionKind::explicit_: return "explicit";
  }
  return "explicit";
}

std::optional<ActionKind> action_kind_from_string(std::string_view s)
{
  if (s == "trivial")
    return ActionKind::trivial;
  if (s == "inner")
    return ActionKind::inner;
  if (s == "full")
    return ActionKind::full;
  if (s == "explicit")
    return ActionKind::explicit_;
  return std::nullopt;
}

AutAction trivial_action(const FiniteGroup &G)
{
  AutAction A;
  A.kind = ActionKind::trivial;
  A.label = "trivial";
  A.all = std::vector<Automorphism>{Automorphism::identity(G.order())};
  return A;
}

AutAction inner_generators(const FiniteGroup &G)
{
  AutAction A;
  A.kind = ActionKind::inner;
  A.label = "inner";
  for (auto g : G.generator_ids()) {
    std::vector<ElementId> t(G.order());
    for (ElementId x = 0; x < G.order(); ++x)
      t[x] = G.conjugate(x, g);
    A.generators.emplace_back(std::move(t));
  }
  return A;
}

Automorphism from_conjugator(const FiniteGroup &G, const Permutation &c)
{
  if (c.degree() != G.degree())
    throw Error(ErrorKind::DoesNotNormalize,
                "conjugator of degree " + std::to_string(c.degree()) +
                  " for a group of degree " + std::to_string(G.degree()));

  auto c_inv = inverse(c);
  std::vector<ElementId> t(G.order());
  for (ElementId x = 0; x < G.order(); ++x) {
    auto image = G.index_of(compose(compose(c_inv, G.element(x)), c));
    if (!image)
      throw Error(ErrorKind::DoesNotNormalize,
                  c.to_cycles() + " does not normalize " + G.name());
    t[x] = *image;
  }
  return Automorphism(std::move(t));
}

Automorphism explicit_automorphism(const FiniteGroup &G, std::span<const ElementId> images)
{
  if (images.size() != G.generators().size())
    throw Error(ErrorKind::BadParameters,
                "expected " + std::to_string(G.generators().size()) + " generator images, got " +
                  std::to_string(images.size()));
  for (auto v : images) {
    if (v >= G.order())
      throw Error(ErrorKind::BadParameters, "generator image out of range");
  }

  std::vector<ElementId> t(G.order());
  t[kIdentity] = kIdentity;
  for (ElementId x = 1; x < G.order(); ++x)
    t[x] = G.mul(t[G.parent(x)], images[G.parent_generator(x)]);

  return validated_automorphism(G, std::move(t));
}

AutAction close_action(const FiniteGroup &G,
                       std::vector<Automorphism> generators,
                       std::size_t cap,
                       ActionKind kind,
                       std::string label)
{
  AutAction A;
  A.kind = kind;
  A.label = std::move(label);
  A.all = closure_of(G, generators, cap);
  A.generators = std::move(generators);
  return A;
}

AutAction closed(const FiniteGroup &G, const AutAction &A, std::size_t cap)
{
  if (A.is_closed())
    return A;
  AutAction res = A;
  res.all = closure_of(G, A.generators, cap);
  return res;
}

AutAction full_aut_brute(const FiniteGroup &G, std::size_t bound, std::size_t cap)
{
  if (G.order() > bound)
    throw Error(ErrorKind::GroupTooLarge,
                "brute-force Aut limited to order " + std::to_string(bound) + ", group has order " +
                  std::to_string(G.order()));

  auto gens = small_generating_set(G);

  // BFS words over the small generating set.
  std::vector<ElementId> parent(G.order(), kIdentity);
  std::vector<std::size_t> via(G.order(), 0);
  std::vector<ElementId> bfs{kIdentity};
  {
    std::vector<char> seen(G.order(), 0);
    seen[kIdentity] = 1;
    for (std::size_t head = 0; head < bfs.size(); ++head) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        auto y = G.mul(bfs[head], gens[s]);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = bfs[head];
          via[y] = s;
          bfs.push_back(y);
        }
      }
    }
  }

  std::vector<std::vector<ElementId>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (ElementId y = 1; y < G.order(); ++y) {
      if (G.element_order(y) == G.element_order(gens[s]))
        candidates[s].push_back(y);
    }
  }

  std::vector<Automorphism> found;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<ElementId> table(G.order());
  std::vector<char> hit(G.order());

  for (;;) {
    table[kIdentity] = kIdentity;
    for (std::size_t k = 1; k < bfs.size(); ++k) {
      auto y = bfs[k];
      table[y] = G.mul(table[parent[y]], candidates[via[y]][pick[via[y]]]);
    }

    bool ok = true;
    for (ElementId x = 0; x < G.order() && ok; ++x) {
      for (std::size_t s = 0; s < gens.size() && ok; ++s)
        ok = table[G.mul(x, gens[s])] == G.mul(table[x], candidates[s][pick[s]]);
    }
    if (ok) {
      std::fill(hit.begin(), hit.end(), 0);
      for (auto v : table) {
        if (hit[v]) {
          ok = false;
          break;
        }
        hit[v] = 1;
      }
    }
    if (ok) {
      if (found.size() >= cap)
        throw Error(ErrorKind::ActionCapExceeded,
                    "automorphism group larger than cap " + std::to_string(cap));
      found.emplace_back(table);
    }

    std::size_t s = 0;
    while (s < gens.size() && ++pick[s] == candidates[s].size())
      pick[s++] = 0;
    if (s == gens.size())
      break;
  }

  std::sort(found.begin(), found.end());

  // Pick a small generating subset of Aut(G).
  std::vector<Automorphism> aut_gens;
  std::unordered_set<std::vector<ElementId>, TableHash> reached;
  reached.insert(Automorphism::identity(G.order()).table());
  for (auto const &a : found) {
    if (reached.contains(a.table()))
      continue;
    aut_gens.push_back(a);
    reached.clear();
    for (auto const &m : closure_of(G, aut_gens, cap))
      reached.insert(m.table());
    if (reached.size() == found.size())
      break;
  }

  AutAction A;
  A.kind = ActionKind::full;
  A.label = "full";
  A.generators = std::move(aut_gens);
  A.all = std::move(found);
  return A;
}

OrbitPartition element_orbits(const FiniteGroup &G, const AutAction &A)
{
  DisjointSet ds(G.order());
  for (auto const &a : A.generators) {
    for (ElementId x = 1; x < G.order(); ++x)
      ds.unite(x, a(x));
  }

  OrbitPartition P;
  P.orbit_of.assign(G.order(), OrbitPartition::kNone);
  std::map<std::size_t, std::uint32_t> root_to_orbit;
  for (ElementId x = 1; x < G.order(); ++x) {
    auto root = ds.find(x);
    auto [it, inserted] =
      root_to_orbit.emplace(root, static_cast<std::uint32_t>(P.representatives.size()));
    if (inserted) {
      P.representatives.push_back(x);
      P.members.emplace_back();
    }
    P.orbit_of[x] = it->second;
    P.members[it->second].push_back(x);
  }
  return P;
}

SubgroupOrbits subgroup_orbits_order_p(const FiniteGroup &G, const AutAction &A, std::uint64_t p)
{
  SubgroupOrbits res;
  res.subgroups = minimal_subgroups(G, p);

  std::map<ElementSet, std::size_t> index;
  for (std::size_t k = 0; k < res.subgroups.size(); ++k)
    index.emplace(res.subgroups[k], k);

  DisjointSet ds(res.subgroups.size());
  for (auto const &a : A.generators) {
    for (std::size_t k = 0; k < res.subgroups.size(); ++k) {
      ElementSet image;
      for (auto x : res.subgroups[k])
        image.push_back(a(x));
      std::sort(image.begin(), image.end());
      ds.unite(k, index.at(image));
    }
  }

  std::map<std::size_t, std::size_t> root_to_orbit;
  for (std::size_t k = 0; k < res.subgroups.size(); ++k) {
    auto [it, inserted] = root_to_orbit.emplace(ds.find(k), res.orbits.size());
    if (inserted)
      res.orbits.emplace_back();
    res.orbits[it->second].push_back(k);
  }
  return res;
}

bool normalizer_transitive_on_cyclic(const FiniteGroup &G,
                                     const AutAction &A,
                                     ElementId i,
                                     std::size_t cap)
{
  auto const &members = A.is_closed() ? *A.all : *closed(G, A, cap).all;

  auto cyc = cyclic_subgroup(G, i);
  ElementSet reached;
  for (auto const &a : members) {
    if (contains(cyc, a(i)))
      reached.push_back(a(i));
  }
  std::sort(reached.begin(), reached.end());
  reached.erase(std::unique(reached.begin(), reached.end()), reached.end());
  return reached.size() + 1 == cyc.size();
}

bool order_class_transitive(const FiniteGroup &G, const AutAction &A, std::uint32_t n)
{
  auto P = element_orbits(G, A);
  std::optional<std::uint32_t> orbit;
  for (ElementId x = 0; x < G.order(); ++x) {
    if (G.element_order(x) != n)
      continue;
    if (x == kIdentity)
      return true;
    if (!orbit)
      orbit = P.orbit_of[x];
    else if (*orbit != P.orbit_of[x])
      return false;
  }
  if (!orbit)
    throw Error(ErrorKind::NoSuchOrder, "no element of order " + std::to_string(n));
  return true;
}

bool order_subgroup_transitive(const FiniteGroup &G, const AutAction &A, std::uint32_t n)
{
  auto P = element_orbits(G, A);
  std::optional<ElementId> first;
  for (ElementId x = 0; x < G.order(); ++x) {
    if (G.element_order(x) != n)
      continue;
    if (x == kIdentity)
      return true;
    if (!first) {
      first = x;
      continue;
    }
    // <x> is A-conjugate to <first> iff some generator of <x> is
    // A-conjugate to first.
    bool conj = false;
    for (std::uint32_t k = 1; k < n && !conj; ++k) {
      if (std::gcd(k, n) == 1)
        conj = P.orbit_of[G.pow(x, k)] == P.orbit_of[*first];
    }
    if (!conj)
      return false;
  }
  if (!first)
    throw Error(ErrorKind::NoSuchOrder, "no element of order " + std::to_string(n));
  return true;
}

bool is_within_inner(const FiniteGroup &G, const AutAction &A)
{
  if (A.kind == ActionKind::trivial || A.kind == ActionKind::inner)
    return true;

  auto const &gens = G.generator_ids();
  for (auto const &a : A.generators) {
    bool inner = false;
    for (ElementId g = 0; g < G.order() && !inner; ++g) {
      inner = std::all_of(gens.begin(), gens.end(),
                          [&](ElementId x) { return a(x) == G.conjugate(x, g); });
    }
    if (!inner)
      return false;
  }
  return true;
}

} // namespace autocyc
