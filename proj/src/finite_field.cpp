#include "autocyc/finite_field.hpp"

#include <map>
#include <utility>

#include "autocyc/error.hpp"
#include "autocyc/number_theory.hpp"

namespace autocyc {

namespace {

// Conway polynomials, coefficients of x^0 .. x^(k-1).
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> &polynomials()
{
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table{
    {{2, 2}, {1, 1}},
    {{2, 3}, {1, 1, 0}},
    {{2, 4}, {1, 1, 0, 0}},
    {{2, 5}, {1, 0, 1, 0, 0}},
    {{2, 6}, {1, 1, 0, 1, 1, 0}},
    {{2, 7}, {1, 1, 0, 0, 0, 0, 0}},
    {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0}},
    {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0}},
    {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0}},
    {{3, 2}, {2, 2}},
    {{3, 3}, {1, 2, 0}},
    {{3, 4}, {2, 0, 0, 2}},
    {{3, 5}, {1, 2, 0, 0, 0}},
    {{3, 6}, {2, 2, 1, 0, 2, 0}},
    {{5, 2}, {2, 4}},
    {{5, 3}, {3, 3, 0}},
    {{5, 4}, {2, 4, 4, 0}},
    {{7, 2}, {3, 6}},
    {{7, 3}, {4, 0, 6}},
    {{11, 2}, {2, 7}},
    {{13, 2}, {2, 12}},
    {{17, 2}, {3, 16}},
    {{19, 2}, {2, 18}},
    {{23, 2}, {5, 21}},
    {{29, 2}, {2, 24}},
    {{31, 2}, {3, 29}},
  };
  return table;
}

} // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k)
: _p(p), _k(k), _q(static_cast<std::uint32_t>(nt::ipow(p, k)))
{
  if (!nt::is_prime(p) || k < 1)
    throw Error(ErrorKind::BadParameters,
                "GF(" + std::to_string(p) + "^" + std::to_string(k) + ") is not a field size");

  if (k == 1) {
    _modulus = {0};
  } else {
    auto it = polynomials().find({p, k});
    if (it == polynomials().end())
      throw Error(ErrorKind::BadParameters,
                  "no built-in polynomial for GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
    _modulus = it->second;
  }

  // Some element of order q - 1 exists exactly when the quotient ring is a
  // field.
  for (std::uint32_t a = 1; a < _q; ++a) {
    if (order(a) == _q - 1) {
      _primitive = a;
      break;
    }
  }
  if (_q > 2 && _primitive == 0)
    throw Error(ErrorKind::BadParameters, "polynomial " + modulus_string() + " is reducible");
  if (_q == 2)
    _primitive = 1;
}

std::string FiniteField::modulus_string() const
{
  if (_k == 1)
    return "x";
  std::string s = "x^" + std::to_string(_k);
  for (std::size_t i = _modulus.size(); i-- > 0;) {
    auto c = _modulus[i];
    if (c == 0)
      continue;
    s += " + ";
    if (c != 1 || i == 0)
      s += std::to_string(c);
    if (i >= 1)
      s += "x";
    if (i >= 2)
      s += "^" + std::to_string(i);
  }
  return s;
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const
{
  std::uint32_t res = 0, place = 1;
  for (std::uint32_t i = 0; i < _k; ++i) {
    res += ((a % _p + b % _p) % _p) * place;
    a /= _p;
    b /= _p;
    place *= _p;
  }
  return res;
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const
{
  if (_k == 1)
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % _p);

  std::vector<std::uint32_t> x(_k), y(_k), prod(2 * _k - 1, 0);
  for (std::uint32_t i = 0; i < _k; ++i) {
    x[i] = a % _p;
    y[i] = b % _p;
    a /= _p;
    b /= _p;
  }
  for (std::uint32_t i = 0; i < _k; ++i) {
    for (std::uint32_t j = 0; j < _k; ++j)
      prod[i + j] = (prod[i + j] + x[i] * y[j]) % _p;
  }
  // x^k = -(modulus)
  for (std::size_t d = prod.size() - 1; d >= _k; --d) {
    auto c = prod[d];
    prod[d] = 0;
    for (std::uint32_t i = 0; i < _k; ++i)
      prod[d - _k + i] = (prod[d - _k + i] + (_p - _modulus[i]) % _p * c) % _p;
  }

  std::uint32_t res = 0;
  for (std::uint32_t i = _k; i-- > 0;)
    res = res * _p + prod[i];
  return res;
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const
{
  std::uint32_t res = 1;
  while (e > 0) {
    if (e & 1)
      res = mul(res, a);
    a = mul(a, a);
    e >>= 1;
  }
  return res;
}

std::uint32_t FiniteField::order(std::uint32_t a) const
{
  if (a == 0)
    throw Error(ErrorKind::BadParameters, "zero has no multiplicative order");
  std::uint32_t x = a, k = 1;
  while (x != 1) {
    x = mul(x, a);
    if (++k > _q)
      return 0; // a is a zero divisor
  }
  return k;
}

} // namespace autocyc
