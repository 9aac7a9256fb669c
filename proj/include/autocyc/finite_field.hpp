#ifndef AUTOCYC_FINITE_FIELD_HPP
#define AUTOCYC_FINITE_FIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace autocyc {

/// GF(p^k) with elements encoded as integers whose base-p digits are the
/// polynomial coefficients, constant term first.
class FiniteField
{
public:
  // Uses the built-in polynomial for (p, k). Throws BadParameters when the
  // table has no entry or the polynomial does not give a field.
  FiniteField(std::uint32_t p, std::uint32_t k);

  std::uint32_t characteristic() const { return _p; }
  std::uint32_t degree() const { return _k; }
  std::uint32_t size() const { return _q; }

  // Monic modulus, coefficients constant term first (leading 1 omitted).
  const std::vector<std::uint32_t> &modulus() const { return _modulus; }
  std::string modulus_string() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Multiplicative order of a nonzero element.
  std::uint32_t order(std::uint32_t a) const;

  // Least encoded element of order q - 1.
  std::uint32_t primitive() const { return _primitive; }

private:
  std::uint32_t _p;
  std::uint32_t _k;
  std::uint32_t _q;
  std::vector<std::uint32_t> _modulus;
  std::uint32_t _primitive = 0;
};

} // namespace autocyc

#endif // AUTOCYC_FINITE_FIELD_HPP
