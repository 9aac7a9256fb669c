#ifndef AUTOCYC_CATALOG_HPP
#define AUTOCYC_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "group.hpp"

namespace autocyc {

/// Structure known in advance for a catalog group. Absent fields are not
/// asserted.
struct CatalogMetadata
{
  std::size_t order = 1;
  std::uint64_t exponent = 1;
  bool abelian = true;
  bool nilpotent = true;
  bool cyclic = true;
  std::optional<bool> homocyclic;
  std::optional<bool> generalized_quaternion;
  // (kernel size, complement order); nullopt asserts "not Frobenius" only
  // when `frobenius_known` is set
  std::optional<std::pair<std::size_t, std::size_t>> frobenius;
  bool frobenius_known = false;
  // set when the construction goes through a finite field
  std::optional<std::string> field_polynomial;
};

using ActionBuilder = std::function<AutAction(const FiniteGroup &, std::size_t cap)>;

class CatalogEntry
{
public:
  CatalogEntry(std::string key,
               std::map<std::string, std::string> parameters,
               FiniteGroup group,
               std::vector<std::string> generator_names,
               CatalogMetadata metadata);

  const std::string &key() const { return _key; }
  const std::map<std::string, std::string> &parameters() const { return _parameters; }
  const FiniteGroup &group() const { return *_group; }
  std::shared_ptr<const FiniteGroup> group_ptr() const { return _group; }
  const std::vector<std::string> &generator_names() const { return _names; }
  const CatalogMetadata &metadata() const { return _metadata; }
  CatalogMetadata &metadata() { return _metadata; }

  // Evaluates a word such as "b^2 a", "u^-1 x u" or "ac" over the generator
  // names. Throws ParseError.
  ElementId element(std::string_view word) const;

  void add_action(std::string name, ActionBuilder builder);
  std::vector<std::string> action_names() const;
  bool has_action(std::string_view name) const;
  // Throws UnknownKey.
  AutAction action(std::string_view name, std::size_t cap = kDefaultActionCap) const;

  // Example-specific elements, stored as words.
  void tag(std::string name, std::string word);
  const std::map<std::string, std::string> &tags() const { return _tags; }
  ElementId tagged(std::string_view name) const;

  // Recomputes the metadata from the group; throws MetadataMismatch.
  void validate() const;

private:
  std::string _key;
  std::map<std::string, std::string> _parameters;
  std::shared_ptr<const FiniteGroup> _group;
  std::vector<std::string> _names;
  CatalogMetadata _metadata;
  std::vector<std::pair<std::string, ActionBuilder>> _actions;
  std::map<std::string, std::string> _tags;
};

// Builds the right regular representation of a group given by its
// multiplication table (element 0 must be the identity). The generators are
// the listed table elements.
FiniteGroup regular_representation(const std::vector<std::vector<std::uint32_t>> &table,
                                   const std::vector<std::uint32_t> &generators,
                                   std::size_t order_bound = kDefaultOrderBound,
                                   std::string name = {});

namespace catalog {

CatalogEntry cyclic(std::uint32_t n);
CatalogEntry elementary_abelian(std::uint32_t p, std::uint32_t k);
CatalogEntry homocyclic(std::uint32_t p, std::uint32_t e, std::uint32_t k);
// symmetries of the n-gon, order 2n
CatalogEntry dihedral(std::uint32_t n);
// generalized quaternion group of the given order 2^m, m >= 3
CatalogEntry generalized_quaternion(std::uint32_t order);
CatalogEntry direct_product(const CatalogEntry &a, const CatalogEntry &b);

CatalogEntry g27_with_tau();
CatalogEntry frobenius(std::uint32_t p, std::uint32_t q);
CatalogEntry frobenius_field(std::uint32_t p, std::uint32_t k, std::uint32_t m);
CatalogEntry z6_x_frob42();
CatalogEntry extraspecial_27();
CatalogEntry klein4_x_extraspecial27();
CatalogEntry a5_with_actions();
CatalogEntry singer(std::uint32_t p, std::uint32_t k);
CatalogEntry sl2_3();

// Canonical keys in listing order.
const std::vector<std::string> &keys();

// Accepts canonical keys and parametric forms such as "frobenius(7,6)",
// "z4xz9", "d8", "q16", "cyclic(5)". Throws UnknownKey. The entry is
// validated before it is returned.
CatalogEntry load(std::string_view key);

} // namespace catalog

} // namespace autocyc

#endif // AUTOCYC_CATALOG_HPP
