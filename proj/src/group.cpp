#include "autocyc/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "autocyc/error.hpp"

namespace autocyc {

FiniteGroup FiniteGroup::enumerate(std::vector<Permutation> generators,
                                   std::size_t degree,
                                   std::size_t bound,
                                   std::string name)
{
  EnumerateOptions options;
  options.order_bound = bound;
  return enumerate(std::move(generators), degree, options, std::move(name));
}

FiniteGroup FiniteGroup::enumerate(std::vector<Permutation> generators,
                                   std::size_t degree,
                                   const EnumerateOptions &options,
                                   std::string name)
{
  if (options.order_bound < 1)
    throw Error(ErrorKind::BadParameters, "order bound must be positive");

  FiniteGroup G;
  G._name = std::move(name);
  G._degree = degree;

  for (auto &gen : generators) {
    if (gen.degree() != degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator " + gen.to_cycles() + " has degree " +
                    std::to_string(gen.degree()) + ", expected " +
                    std::to_string(degree));
    if (std::find(G._generators.begin(), G._generators.end(), gen) == G._generators.end())
      G._generators.push_back(std::move(gen));
  }

  G._elements.emplace_back(degree);
  G._index.emplace(G._elements.back(), kIdentity);
  G._parent.push_back(kIdentity);
  G._parent_gen.push_back(0);

  auto k = G._generators.size();
  // right[a * k + g] = index of a * generator g
  std::vector<ElementId> right;

  for (std::size_t head = 0; head < G._elements.size(); ++head) {
    for (std::size_t g = 0; g < k; ++g) {
      auto next = compose(G._elements[head], G._generators[g]);
      auto it = G._index.find(next);
      if (it != G._index.end()) {
        right.push_back(it->second);
        continue;
      }
      if (G._elements.size() >= options.order_bound)
        throw Error(ErrorKind::OrderBoundExceeded,
                    "group order exceeds bound " + std::to_string(options.order_bound));
      auto id = static_cast<ElementId>(G._elements.size());
      G._index.emplace(next, id);
      G._elements.push_back(std::move(next));
      G._parent.push_back(static_cast<ElementId>(head));
      G._parent_gen.push_back(g);
      right.push_back(id);
    }
  }

  for (auto const &gen : G._generators)
    G._generator_ids.push_back(G._index.at(gen));

  auto n = G._elements.size();
  if (options.cache_table && n <= kMaxCachedTableOrder) {
    // a * b = (a * parent(b)) * gen(b); parents precede children in BFS order.
    G._table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      auto row = G._table.begin() + static_cast<std::ptrdiff_t>(a * n);
      row[0] = static_cast<std::uint16_t>(a);
      for (std::size_t b = 1; b < n; ++b)
        row[b] = static_cast<std::uint16_t>(right[row[G._parent[b]] * k + G._parent_gen[b]]);
    }
  }

  G._inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    G._inverse[a] = G._index.at(inverse(G._elements[a]));

  G._orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    ElementId x = static_cast<ElementId>(a);
    while (x != kIdentity) {
      x = G.mul(x, static_cast<ElementId>(a));
      ++k;
    }
    G._orders[a] = k;
  }

  return G;
}

std::optional<ElementId> FiniteGroup::index_of(const Permutation &p) const
{
  auto it = _index.find(p);
  if (it == _index.end())
    return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const
{
  if (!_table.empty())
    return _table[static_cast<std::size_t>(a) * _elements.size() + b];
  return _index.at(compose(_elements[a], _elements[b]));
}

ElementId FiniteGroup::pow(ElementId a, long long e) const
{
  auto ord = static_cast<long long>(_orders[a]);
  e %= ord;
  if (e < 0)
    e += ord;
  ElementId res = kIdentity;
  for (long long k = 0; k < e; ++k)
    res = mul(res, a);
  return res;
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const
{
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

std::vector<std::size_t> FiniteGroup::word(ElementId i) const
{
  std::vector<std::size_t> w;
  while (i != kIdentity) {
    w.push_back(_parent_gen[i]);
    i = _parent[i];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

std::string FiniteGroup::word_string(ElementId i) const
{
  auto w = word(i);
  if (w.empty())
    return "1";
  auto name = [&](std::size_t g) {
    return g < _generator_names.size() ? _generator_names[g] : "g" + std::to_string(g);
  };

  // runs of one generator collapse to a power
  std::string s;
  for (std::size_t k = 0; k < w.size();) {
    auto run = k;
    while (run < w.size() && w[run] == w[k])
      ++run;
    if (!s.empty())
      s += '*';
    s += name(w[k]);
    if (run - k > 1)
      s += '^' + std::to_string(run - k);
    k = run;
  }
  return s;
}

void FiniteGroup::set_generator_names(std::vector<std::string> names)
{
  if (!names.empty() && names.size() != _generators.size())
    throw Error(ErrorKind::BadParameters, "generator name count does not match the generators");
  _generator_names = std::move(names);
}

std::string FiniteGroup::hash() const
{
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(_degree);
  feed(_generators.size());
  for (auto const &g : _generators) {
    for (auto img : g.images())
      feed(img);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint32_t element_order(const FiniteGroup &G, ElementId i)
{
  return G.element_order(i);
}

ElementSet generated_closure(const FiniteGroup &G, std::span<const ElementId> seeds)
{
  std::vector<char> seen(G.order(), 0);
  std::vector<ElementId> members{kIdentity};
  seen[kIdentity] = 1;

  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : seeds) {
      auto next = G.mul(members[head], s);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }

  std::sort(members.begin(), members.end());
  return members;
}

bool is_cyclic_pair(const FiniteGroup &G, ElementId i, ElementId j)
{
  if (!G.commute(i, j))
    return false;

  ElementId seeds[] = {i, j};
  auto S = generated_closure(G, seeds);
  return std::any_of(S.begin(), S.end(), [&](ElementId s) {
    return G.element_order(s) == S.size();
  });
}

ElementSet center(const FiniteGroup &G)
{
  ElementSet res;
  for (ElementId z = 0; z < G.order(); ++z) {
    bool central = std::all_of(G.generator_ids().begin(), G.generator_ids().end(),
                               [&](ElementId g) { return G.commute(z, g); });
    if (central)
      res.push_back(z);
  }
  return res;
}

ElementSet centralizer(const FiniteGroup &G, ElementId i)
{
  ElementSet res;
  for (ElementId g = 0; g < G.order(); ++g) {
    if (G.commute(g, i))
      res.push_back(g);
  }
  return res;
}

std::vector<ElementSet> conjugacy_classes(const FiniteGroup &G)
{
  std::vector<char> done(G.order(), 0);
  std::vector<ElementSet> classes;

  for (ElementId x = 0; x < G.order(); ++x) {
    if (done[x])
      continue;

    ElementSet cls{x};
    done[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (auto g : G.generator_ids()) {
        auto y = G.conjugate(cls[head], g);
        if (!done[y]) {
          done[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }

  return classes;
}

ElementSet cyclic_subgroup(const FiniteGroup &G, ElementId x)
{
  ElementSet res{kIdentity};
  for (auto y = x; y != kIdentity; y = G.mul(y, x))
    res.push_back(y);
  std::sort(res.begin(), res.end());
  return res;
}

bool contains(const ElementSet &set, ElementId x)
{
  return std::binary_search(set.begin(), set.end(), x);
}

} // namespace autocyc
