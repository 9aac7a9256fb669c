#include "autocyc/error.hpp"

namespace autocyc {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::DegreeMismatch: return "DegreeMismatch";
  case ErrorKind::InvalidPermutation: return "InvalidPermutation";
  case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
  case ErrorKind::PrimeNotDividing: return "PrimeNotDividing";
  case ErrorKind::NotAbelian: return "NotAbelian";
  case ErrorKind::LatticeCapExceeded: return "LatticeCapExceeded";
  case ErrorKind::DoesNotNormalize: return "DoesNotNormalize";
  case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
  case ErrorKind::NotBijective: return "NotBijective";
  case ErrorKind::ActionCapExceeded: return "ActionCapExceeded";
  case ErrorKind::GroupTooLarge: return "GroupTooLarge";
  case ErrorKind::NoSuchOrder: return "NoSuchOrder";
  case ErrorKind::ActionNotInner: return "ActionNotInner";
  case ErrorKind::BadParameters: return "BadParameters";
  case ErrorKind::UnknownKey: return "UnknownKey";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::HashMismatch: return "HashMismatch";
  case ErrorKind::MetadataMismatch: return "MetadataMismatch";
  }
  return "Unknown";
}

} // namespace autocyc
