#ifndef AUTOCYC_NUMBER_THEORY_HPP
#define AUTOCYC_NUMBER_THEORY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>

namespace autocyc::nt {

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

inline std::map<std::uint64_t, int> factorize(std::uint64_t n)
{
  std::map<std::uint64_t, int> res;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++res[d];
      n /= d;
    }
  }
  if (n > 1)
    ++res[n];
  return res;
}

// The prime p when n = p^k with k >= 1.
inline std::optional<std::uint64_t> prime_of_power(std::uint64_t n)
{
  auto f = factorize(n);
  if (f.size() != 1)
    return std::nullopt;
  return f.begin()->first;
}

inline bool is_prime_power(std::uint64_t n)
{
  return prime_of_power(n).has_value();
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
  std::uint64_t r = 1;
  while (exp--)
    r *= base;
  return r;
}

} // namespace autocyc::nt

#endif // AUTOCYC_NUMBER_THEORY_HPP
