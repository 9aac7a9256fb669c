#include "autocyc/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "autocyc/error.hpp"

namespace autocyc {

Permutation::Permutation(std::size_t degree)
: _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (auto img : _images) {
    if (img >= _images.size() || seen[img])
      throw Error(ErrorKind::InvalidPermutation,
                  "image list is not a bijection on " +
                    std::to_string(_images.size()) + " points");
    seen[img] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});

  auto fail = [&](const std::string &why) {
    throw Error(ErrorKind::ParseError,
                "bad cycle notation '" + std::string(text) + "': " + why);
  };

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;

    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("unexpected character");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (value < 1 || value > degree)
        fail("point " + std::to_string(value) + " out of range");
      if (used[value - 1])
        fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
    }

    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }

  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (_images[i] != i)
      return false;
  }
  return true;
}

std::string Permutation::to_cycles() const
{
  std::ostringstream ss;
  std::vector<bool> done(_images.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < _images.size(); ++i) {
    if (done[i] || _images[i] == i)
      continue;
    any = true;
    ss << '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first)
        ss << ' ';
      ss << j + 1;
      first = false;
      j = _images[j];
    }
    ss << ')';
  }
  return any ? ss.str() : "()";
}

Permutation compose(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose permutations of degree " +
                  std::to_string(p.degree()) + " and " + std::to_string(q.degree()));

  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q[p[i]];

  return Permutation(Permutation::Unchecked{}, std::move(images));
}

Permutation inverse(const Permutation &p)
{
  std::vector<Permutation::Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[p[i]] = static_cast<Permutation::Point>(i);
  return Permutation(Permutation::Unchecked{}, std::move(images));
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept
{
  // FNV-1a
  std::size_t h = 1469598103934665603ull;
  for (auto img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace autocyc
