#pragma once

// Brute-force reference computations used as test oracles. Nothing here
// calls into the library except to read raw permutations and automorphism
// tables; groups are re-enumerated from scratch with plain vectors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include <autocyc/automorphism.hpp>
#include <autocyc/group.hpp>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm mul(const Perm &p, const Perm &q)
{
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = q[p[i]];
  return r;
}

inline Perm identity(std::size_t n)
{
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

inline Perm inverse(const Perm &p)
{
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline std::set<Perm> closure(const std::vector<Perm> &gens, std::size_t degree)
{
  std::set<Perm> seen{identity(degree)};
  std::vector<Perm> stack{identity(degree)};
  while (!stack.empty()) {
    Perm p = stack.back();
    stack.pop_back();
    for (auto const &g : gens) {
      Perm q = mul(p, g);
      if (seen.insert(q).second)
        stack.push_back(q);
    }
  }
  return seen;
}

inline std::size_t order(const Perm &p)
{
  Perm id = identity(p.size()), q = p;
  std::size_t n = 1;
  while (q != id) {
    q = mul(q, p);
    ++n;
  }
  return n;
}

// Table view of a library group in its own element order, recomputed from
// the raw permutations.
struct Table
{
  std::size_t n = 0;
  std::vector<Perm> elems;
  std::map<Perm, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> mul;
  std::vector<std::size_t> orders;

  explicit Table(const autocyc::FiniteGroup &G)
  {
    n = G.order();
    for (std::size_t i = 0; i < n; ++i) {
      elems.push_back(G.element(static_cast<autocyc::ElementId>(i)).images());
      index[elems.back()] = static_cast<std::uint32_t>(i);
    }
    mul.assign(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mul[a][b] = index.at(oracle::mul(elems[a], elems[b]));
    for (auto const &p : elems)
      orders.push_back(order(p));
  }

  std::set<std::uint32_t> generated(const std::vector<std::uint32_t> &seeds) const
  {
    std::set<std::uint32_t> s{0};
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto g : seeds) {
        auto y = mul[x][g];
        if (s.insert(y).second)
          stack.push_back(y);
      }
    }
    return s;
  }

  bool cyclic_pair(std::uint32_t x, std::uint32_t y) const
  {
    auto s = generated({x, y});
    return std::any_of(s.begin(), s.end(), [&](auto z) { return orders[z] == s.size(); });
  }

  bool commute(std::uint32_t x, std::uint32_t y) const { return mul[x][y] == mul[y][x]; }

  std::vector<std::uint32_t> centralizer(std::uint32_t x) const
  {
    std::vector<std::uint32_t> c;
    for (std::uint32_t y = 0; y < n; ++y)
      if (commute(x, y))
        c.push_back(y);
    return c;
  }

  std::vector<std::uint32_t> center() const
  {
    std::vector<std::uint32_t> z;
    for (std::uint32_t x = 0; x < n; ++x) {
      bool central = true;
      for (std::uint32_t y = 0; y < n && central; ++y)
        central = commute(x, y);
      if (central)
        z.push_back(x);
    }
    return z;
  }

  std::uint32_t inv(std::uint32_t x) const
  {
    for (std::uint32_t y = 0; y < n; ++y)
      if (mul[x][y] == 0)
        return y;
    return 0;
  }

  bool is_hom(const std::vector<std::uint32_t> &f) const
  {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (f[mul[a][b]] != mul[f[a]][f[b]])
          return false;
    return true;
  }

  // Every automorphism, found by trying all images of a generating set.
  std::set<std::vector<std::uint32_t>> all_automorphisms(const std::vector<std::uint32_t> &gens) const
  {
    // Words for every element along a spanning tree over gens.
    std::vector<std::int64_t> parent(n, -1);
    std::vector<std::size_t> via(n, 0);
    std::vector<std::uint32_t> bfs{0};
    parent[0] = 0;
    for (std::size_t k = 0; k < bfs.size(); ++k)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        auto y = mul[bfs[k]][gens[g]];
        if (parent[y] < 0) {
          parent[y] = bfs[k];
          via[y] = g;
          bfs.push_back(y);
        }
      }
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> images(gens.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == gens.size()) {
        std::vector<std::uint32_t> f(n, 0);
        for (std::size_t i = 1; i < bfs.size(); ++i) {
          auto x = bfs[i];
          f[x] = mul[f[parent[x]]][images[via[x]]];
        }
        std::set<std::uint32_t> im(f.begin(), f.end());
        if (im.size() == n && is_hom(f))
          out.insert(f);
        return;
      }
      for (std::uint32_t y = 0; y < n; ++y)
        if (orders[y] == orders[gens[k]]) {
          images[k] = y;
          rec(k + 1);
        }
    };
    rec(0);
    return out;
  }
};

// Orbits of the nonidentity elements under automorphism tables, found by
// repeated application until nothing new appears.
inline std::vector<std::set<std::uint32_t>> orbits(std::size_t n,
                                                   const std::vector<std::vector<std::uint32_t>> &tables)
{
  std::vector<int> seen(n, 0);
  std::vector<std::set<std::uint32_t>> out;
  for (std::uint32_t x = 1; x < n; ++x) {
    if (seen[x])
      continue;
    std::set<std::uint32_t> orb{x};
    std::vector<std::uint32_t> stack{x};
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      for (auto const &t : tables)
        if (orb.insert(t[y]).second)
          stack.push_back(t[y]);
    }
    for (auto y : orb)
      seen[y] = 1;
    out.push_back(orb);
  }
  return out;
}

inline std::vector<std::vector<std::uint32_t>> tables_of(const autocyc::AutAction &A)
{
  std::vector<std::vector<std::uint32_t>> t;
  for (auto const &a : A.generators)
    t.push_back(a.table());
  return t;
}

// The quotient graph straight from the definition: orbits X, Y adjacent
// when some x in X and y in Y generate a cyclic group.
struct Graph
{
  std::vector<std::set<std::uint32_t>> vertices;
  std::vector<std::vector<bool>> adj;
};

inline Graph delta(const Table &T, const autocyc::AutAction &A)
{
  Graph g;
  g.vertices = orbits(T.n, tables_of(A));
  std::size_t m = g.vertices.size();
  g.adj.assign(m, std::vector<bool>(m, false));
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = u + 1; v < m; ++v) {
      bool e = false;
      for (auto x : g.vertices[u]) {
        for (auto y : g.vertices[v])
          if (T.cyclic_pair(x, y)) {
            e = true;
            break;
          }
        if (e)
          break;
      }
      g.adj[u][v] = g.adj[v][u] = e;
    }
  return g;
}

constexpr std::size_t kInf = static_cast<std::size_t>(-1);

inline std::vector<std::vector<std::size_t>> all_distances(const std::vector<std::vector<bool>> &adj)
{
  std::size_t m = adj.size();
  std::vector<std::vector<std::size_t>> d(m, std::vector<std::size_t>(m, kInf));
  for (std::size_t i = 0; i < m; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (adj[i][j])
        d[i][j] = 1;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (d[i][k] != kInf && d[k][j] != kInf && d[i][k] + d[k][j] < d[i][j])
          d[i][j] = d[i][k] + d[k][j];
  return d;
}

} // namespace oracle
