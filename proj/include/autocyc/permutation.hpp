#ifndef AUTOCYC_PERMUTATION_HPP
#define AUTOCYC_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace autocyc {

/// A bijection on the points {0, ..., degree - 1}, stored as its image list.
class Permutation
{
public:
  using Point = std::uint32_t;

  Permutation() = default;

  // The identity on `degree` points.
  explicit Permutation(std::size_t degree);

  // Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  // Parses 1-based cycle notation such as "(1 2 3)(4 5)". Points not
  // mentioned are fixed. "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return _images.size(); }
  Point operator[](std::size_t i) const { return _images[i]; }
  const std::vector<Point> &images() const { return _images; }

  bool is_identity() const;

  // 1-based cycle notation, "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<Point> images)
  : _images(std::move(images))
  {}

  friend Permutation compose(const Permutation &p, const Permutation &q);
  friend Permutation inverse(const Permutation &p);

  std::vector<Point> _images;
};

// Apply p first, then q.
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);

struct PermutationHash
{
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace autocyc

#endif // AUTOCYC_PERMUTATION_HPP
