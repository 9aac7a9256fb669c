#ifndef AUTOCYC_ERROR_HPP
#define AUTOCYC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace autocyc {

enum class ErrorKind {
  DegreeMismatch,
  InvalidPermutation,
  OrderBoundExceeded,
  PrimeNotDividing,
  NotAbelian,
  LatticeCapExceeded,
  DoesNotNormalize,
  NotAHomomorphism,
  NotBijective,
  ActionCapExceeded,
  GroupTooLarge,
  NoSuchOrder,
  ActionNotInner,
  BadParameters,
  UnknownKey,
  ParseError,
  HashMismatch,
  MetadataMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &what)
  : std::runtime_error(std::string(to_string(kind)) + ": " + what),
    _kind(kind)
  {}

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace autocyc

#endif // AUTOCYC_ERROR_HPP
