#ifndef AUTOCYC_DISJOINT_SET_HPP
#define AUTOCYC_DISJOINT_SET_HPP

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace autocyc {

class DisjointSet
{
public:
  explicit DisjointSet(std::size_t n)
  : _parent(n), _rank(n, 0)
  {
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (_rank[a] < _rank[b])
      std::swap(a, b);
    _parent[b] = a;
    if (_rank[a] == _rank[b])
      ++_rank[a];
    return true;
  }

  std::size_t size() const { return _parent.size(); }

private:
  std::vector<std::size_t> _parent;
  std::vector<unsigned> _rank;
};

} // namespace autocyc

#endif // AUTOCYC_DISJOINT_SET_HPP
