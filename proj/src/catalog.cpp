#include "autocyc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>

#include "autocyc/error.hpp"
#include "autocyc/finite_field.hpp"
#include "autocyc/group_props.hpp"
#include "autocyc/number_theory.hpp"

namespace autocyc {

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;

Permutation cycle_on(std::size_t degree, std::size_t start, std::size_t length)
{
  std::vector<Permutation::Point> images(degree);
  std::iota(images.begin(), images.end(), Permutation::Point{0});
  for (std::size_t i = 0; i < length; ++i)
    images[start + i] = static_cast<Permutation::Point>(start + (i + 1) % length);
  return Permutation(std::move(images));
}

std::string letter_name(std::size_t i)
{
  static const std::string letters = "abcdefghijklmnopqrstuvwxyz";
  return i < letters.size() ? std::string(1, letters[i]) : "g" + std::to_string(i);
}

std::vector<std::string> letter_names(std::size_t n, std::string_view letters)
{
  std::vector<std::string> res;
  for (std::size_t i = 0; i < n; ++i)
    res.push_back(i < letters.size() ? std::string(1, letters[i]) : "g" + std::to_string(i));
  return res;
}

void add_standard_actions(CatalogEntry &e)
{
  e.add_action("trivial", [](const FiniteGroup &G, std::size_t) { return trivial_action(G); });
  e.add_action("inner", [](const FiniteGroup &G, std::size_t) { return inner_generators(G); });
  if (e.group().order() <= kDefaultBruteForceBound) {
    e.add_action("full", [](const FiniteGroup &G, std::size_t cap) {
      return full_aut_brute(G, kDefaultBruteForceBound, cap);
    });
  }
}

AutAction conjugation_action(const FiniteGroup &G,
                             const std::vector<Permutation> &conjugators,
                             std::string label,
                             std::size_t cap)
{
  std::vector<Automorphism> gens;
  for (auto const &c : conjugators)
    gens.push_back(from_conjugator(G, c));
  AutAction A;
  A.kind = ActionKind::explicit_;
  A.label = std::move(label);
  A.generators = std::move(gens);
  (void)cap;
  return A;
}

CatalogMetadata abelian_metadata(std::size_t order, std::uint64_t exp)
{
  CatalogMetadata m;
  m.order = order;
  m.exponent = exp;
  m.abelian = true;
  m.nilpotent = true;
  m.cyclic = exp == order;
  m.generalized_quaternion = false;
  m.frobenius_known = true;
  return m;
}

std::uint32_t least_primitive_root(std::uint32_t p)
{
  for (std::uint32_t g = 1; g < p; ++g) {
    std::uint64_t x = g;
    std::uint32_t k = 1;
    while (x != 1) {
      x = x * g % p;
      ++k;
    }
    if (k == p - 1)
      return g;
  }
  return 1;
}

std::uint32_t parse_uint(std::string_view s)
{
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::UnknownKey, "bad number '" + std::string(s) + "' in catalog key");
  return v;
}

std::string strip_spaces(std::string_view s)
{
  std::string res;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      res += c;
  }
  return res;
}

// "name(1,2,3)" -> ("name", {1,2,3}); plain keys give empty arguments.
std::pair<std::string, std::vector<std::uint32_t>> split_call(const std::string &key)
{
  auto open = key.find('(');
  if (open == std::string::npos)
    return {key, {}};
  if (key.back() != ')')
    throw Error(ErrorKind::UnknownKey, "malformed catalog key '" + key + "'");

  std::vector<std::uint32_t> args;
  std::string_view inner(key.data() + open + 1, key.size() - open - 2);
  while (!inner.empty()) {
    auto comma = inner.find(',');
    args.push_back(parse_uint(inner.substr(0, comma)));
    if (comma == std::string_view::npos)
      break;
    inner.remove_prefix(comma + 1);
  }
  return {key.substr(0, open), args};
}

void require_args(const std::string &key, const std::vector<std::uint32_t> &args, std::size_t n)
{
  if (args.size() != n)
    throw Error(ErrorKind::UnknownKey,
                "catalog key '" + key + "' takes " + std::to_string(n) + " arguments");
}

// z<n>xz<m>x... with metadata from the primary decomposition.
CatalogEntry abelian_product(const std::string &key)
{
  std::vector<std::uint32_t> factors;
  std::string_view rest(key);
  while (!rest.empty()) {
    if (rest.front() != 'z')
      throw Error(ErrorKind::UnknownKey, "unknown catalog key '" + key + "'");
    rest.remove_prefix(1);
    auto x = rest.find('x');
    factors.push_back(parse_uint(rest.substr(0, x)));
    if (x == std::string_view::npos)
      break;
    rest.remove_prefix(x + 1);
    if (rest.empty())
      throw Error(ErrorKind::UnknownKey, "unknown catalog key '" + key + "'");
  }

  CatalogEntry e = catalog::cyclic(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i)
    e = catalog::direct_product(e, catalog::cyclic(factors[i]));

  std::map<std::uint64_t, std::vector<std::uint64_t>> primary;
  std::size_t order = 1;
  std::uint64_t exp = 1;
  for (auto n : factors) {
    order *= n;
    exp = std::lcm(exp, std::uint64_t{n});
    for (auto [p, a] : nt::factorize(n))
      primary[p].push_back(nt::ipow(p, static_cast<unsigned>(a)));
  }
  auto m = abelian_metadata(order, exp);
  if (primary.size() == 1) {
    auto const &powers = primary.begin()->second;
    m.homocyclic = std::all_of(powers.begin(), powers.end(),
                               [&](std::uint64_t q) { return q == powers.front(); });
  } else if (primary.size() > 1) {
    m.homocyclic = false;
  }
  e = CatalogEntry(key, {{"factors", key}}, e.group(), e.generator_names(), m);
  add_standard_actions(e);
  return e;
}

} // namespace

CatalogEntry::CatalogEntry(std::string key,
                           std::map<std::string, std::string> parameters,
                           FiniteGroup group,
                           std::vector<std::string> generator_names,
                           CatalogMetadata metadata)
: _key(std::move(key)),
  _parameters(std::move(parameters)),
  _names(std::move(generator_names)),
  _metadata(std::move(metadata))
{
  if (_names.size() != group.generators().size())
    throw Error(ErrorKind::BadParameters,
                "catalog entry " + _key + " names " + std::to_string(_names.size()) +
                  " generators but has " + std::to_string(group.generators().size()));
  group.set_generator_names(_names);
  group.set_name(_key);
  _group = std::make_shared<const FiniteGroup>(std::move(group));
}

ElementId CatalogEntry::element(std::string_view word) const
{
  auto const &G = *_group;
  auto generator = [&](std::string_view name) -> std::optional<ElementId> {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name)
        return G.generator_ids()[i];
    }
    return std::nullopt;
  };
  auto fail = [&](const std::string &why) {
    return Error(ErrorKind::ParseError, "word '" + std::string(word) + "': " + why);
  };

  ElementId result = kIdentity;
  std::size_t pos = 0;
  bool any = false;
  while (pos < word.size()) {
    char c = word[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++pos;
      continue;
    }
    if (c == '1') {
      ++pos;
      any = true;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
      throw fail(std::string("unexpected '") + c + "'");

    auto start = pos;
    while (pos < word.size() &&
           (std::isalnum(static_cast<unsigned char>(word[pos])) || word[pos] == '_'))
      ++pos;
    auto ident = word.substr(start, pos - start);

    std::vector<ElementId> factors;
    if (auto g = generator(ident)) {
      factors.push_back(*g);
    } else {
      // concatenated single-letter names, as in "ac"
      for (std::size_t i = 0; i < ident.size(); ++i) {
        auto g1 = generator(ident.substr(i, 1));
        if (!g1)
          throw fail("unknown generator '" + std::string(ident) + "'");
        factors.push_back(*g1);
      }
    }

    long long e = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      auto num_start = pos;
      if (pos < word.size() && (word[pos] == '-' || word[pos] == '+'))
        ++pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos])))
        ++pos;
      auto digits = word.substr(num_start, pos - num_start);
      if (!digits.empty() && digits.front() == '+')
        digits.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
      if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw fail("bad exponent");
    }
    factors.back() = G.pow(factors.back(), e);
    for (auto f : factors)
      result = G.mul(result, f);
    any = true;
  }
  if (!any)
    throw fail("empty word");
  return result;
}

void CatalogEntry::add_action(std::string name, ActionBuilder builder)
{
  for (auto &[n, b] : _actions) {
    if (n == name) {
      b = std::move(builder);
      return;
    }
  }
  _actions.emplace_back(std::move(name), std::move(builder));
}

std::vector<std::string> CatalogEntry::action_names() const
{
  std::vector<std::string> res;
  for (auto const &[n, b] : _actions)
    res.push_back(n);
  return res;
}

bool CatalogEntry::has_action(std::string_view name) const
{
  return std::any_of(_actions.begin(), _actions.end(),
                     [&](auto const &a) { return a.first == name; });
}

AutAction CatalogEntry::action(std::string_view name, std::size_t cap) const
{
  for (auto const &[n, b] : _actions) {
    if (n == name)
      return b(*_group, cap);
  }
  throw Error(ErrorKind::UnknownKey,
              "catalog entry " + _key + " has no action '" + std::string(name) + "'");
}

void CatalogEntry::tag(std::string name, std::string word)
{
  element(word);
  _tags[std::move(name)] = std::move(word);
}

ElementId CatalogEntry::tagged(std::string_view name) const
{
  auto it = _tags.find(std::string(name));
  if (it == _tags.end())
    throw Error(ErrorKind::UnknownKey,
                "catalog entry " + _key + " has no tagged element '" + std::string(name) + "'");
  return element(it->second);
}

void CatalogEntry::validate() const
{
  auto const &G = *_group;
  auto const &m = _metadata;
  auto check = [&](bool ok, const std::string &what) {
    if (!ok)
      throw Error(ErrorKind::MetadataMismatch, _key + ": " + what);
  };

  check(G.order() == m.order, "order is " + std::to_string(G.order()) + ", metadata says " +
                                std::to_string(m.order));
  check(exponent(G) == m.exponent, "exponent disagrees");
  check(is_abelian(G) == m.abelian, "abelian flag disagrees");
  check(is_nilpotent(G) == m.nilpotent, "nilpotent flag disagrees");
  check(is_cyclic(G) == m.cyclic, "cyclic flag disagrees");
  if (m.homocyclic)
    check(m.abelian && is_homocyclic(G) == *m.homocyclic, "homocyclic flag disagrees");
  if (m.generalized_quaternion)
    check(is_generalized_quaternion(G) == *m.generalized_quaternion,
          "generalized quaternion flag disagrees");

  if (m.frobenius_known) {
    // A nontrivial abelian group centralizes every candidate kernel, so the
    // lattice scan is only needed for nonabelian groups.
    std::optional<std::pair<std::size_t, std::size_t>> actual;
    if (!m.abelian) {
      if (auto w = frobenius_witness(G))
        actual = std::pair{w->kernel.size(), w->complement_order};
    }
    check(actual == m.frobenius, "Frobenius structure disagrees");
  }
}

FiniteGroup regular_representation(const Table &table,
                                   const std::vector<std::uint32_t> &generators,
                                   std::size_t order_bound,
                                   std::string name)
{
  auto n = table.size();
  std::vector<Permutation> perms;
  for (auto g : generators) {
    std::vector<Permutation::Point> images(n);
    for (std::size_t x = 0; x < n; ++x)
      images[x] = table[x][g];
    perms.emplace_back(std::move(images));
  }
  return FiniteGroup::enumerate(std::move(perms), n, order_bound, std::move(name));
}

namespace catalog {

CatalogEntry cyclic(std::uint32_t n)
{
  if (n < 1)
    throw Error(ErrorKind::BadParameters, "cyclic group order must be positive");
  auto key = "z" + std::to_string(n);
  auto G = FiniteGroup::enumerate({cycle_on(n, 0, n)}, n, kDefaultOrderBound, key);
  auto m = abelian_metadata(n, n);
  if (n > 1)
    m.homocyclic = nt::is_prime_power(n);
  CatalogEntry e(key, {{"n", std::to_string(n)}}, std::move(G), {"a"}, m);
  add_standard_actions(e);
  return e;
}

CatalogEntry homocyclic(std::uint32_t p, std::uint32_t e, std::uint32_t k)
{
  if (!nt::is_prime(p) || e < 1 || k < 1)
    throw Error(ErrorKind::BadParameters, "homocyclic group needs a prime and positive e, k");
  auto q = static_cast<std::size_t>(nt::ipow(p, e));
  auto degree = q * k;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i)
    gens.push_back(cycle_on(degree, i * q, q));

  auto key = "homocyclic(" + std::to_string(p) + "," + std::to_string(e) + "," + std::to_string(k) + ")";
  auto G = FiniteGroup::enumerate(std::move(gens), degree, kDefaultOrderBound, key);
  auto m = abelian_metadata(static_cast<std::size_t>(nt::ipow(q, k)), q);
  m.homocyclic = true;
  CatalogEntry entry(key,
                     {{"p", std::to_string(p)}, {"e", std::to_string(e)}, {"k", std::to_string(k)}},
                     std::move(G), letter_names(k, "abcdefghijklmnopqrstuvwxyz"), m);
  add_standard_actions(entry);
  return entry;
}

CatalogEntry elementary_abelian(std::uint32_t p, std::uint32_t k)
{
  auto e = homocyclic(p, 1, k);
  auto key = "elementary_abelian(" + std::to_string(p) + "," + std::to_string(k) + ")";
  CatalogEntry res(key, {{"p", std::to_string(p)}, {"k", std::to_string(k)}}, e.group(),
                   e.generator_names(), e.metadata());
  add_standard_actions(res);
  return res;
}

CatalogEntry dihedral(std::uint32_t n)
{
  if (n < 3)
    throw Error(ErrorKind::BadParameters, "dihedral group needs n >= 3");
  std::vector<Permutation::Point> flip(n);
  for (std::uint32_t i = 0; i < n; ++i)
    flip[i] = (n - i) % n;

  auto key = "d" + std::to_string(2 * n);
  auto G = FiniteGroup::enumerate({cycle_on(n, 0, n), Permutation(std::move(flip))}, n,
                                  kDefaultOrderBound, key);
  CatalogMetadata m;
  m.order = 2 * n;
  m.exponent = std::lcm(std::uint64_t{n}, std::uint64_t{2});
  m.abelian = false;
  m.nilpotent = (n & (n - 1)) == 0;
  m.cyclic = false;
  m.generalized_quaternion = false;
  m.frobenius_known = true;
  if (n % 2 == 1)
    m.frobenius = std::pair<std::size_t, std::size_t>{n, 2};
  CatalogEntry e(key, {{"n", std::to_string(n)}}, std::move(G), {"r", "s"}, m);
  add_standard_actions(e);
  return e;
}

CatalogEntry generalized_quaternion(std::uint32_t order)
{
  if (order < 8 || (order & (order - 1)) != 0)
    throw Error(ErrorKind::BadParameters, "generalized quaternion order must be 2^m with m >= 3");

  // a^i b^j with a^n = 1, b^2 = a^(n/2), b^-1 a b = a^-1
  std::uint32_t n = order / 2;
  auto idx = [n](std::uint32_t i, std::uint32_t j) { return i % n + n * j; };
  Table table(order, std::vector<std::uint32_t>(order));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      for (std::uint32_t k = 0; k < n; ++k) {
        for (std::uint32_t l = 0; l < 2; ++l) {
          std::uint32_t power = i + (j ? n - k : k) + (j && l ? n / 2 : 0);
          table[idx(i, j)][idx(k, l)] = idx(power, (j + l) % 2);
        }
      }
    }
  }

  auto key = "q" + std::to_string(order);
  CatalogMetadata m;
  m.order = order;
  m.exponent = n;
  m.abelian = false;
  m.nilpotent = true;
  m.cyclic = false;
  m.generalized_quaternion = true;
  m.frobenius_known = true;
  CatalogEntry e(key, {{"order", std::to_string(order)}},
                 regular_representation(table, {idx(1, 0), idx(0, 1)}, kDefaultOrderBound, key),
                 {"a", "b"}, m);
  add_standard_actions(e);
  return e;
}

CatalogEntry direct_product(const CatalogEntry &a, const CatalogEntry &b)
{
  auto const &G = a.group();
  auto const &H = b.group();
  auto degree = G.degree() + H.degree();

  std::vector<Permutation> gens;
  for (auto const &g : G.generators()) {
    auto images = g.images();
    for (std::size_t i = 0; i < H.degree(); ++i)
      images.push_back(static_cast<Permutation::Point>(G.degree() + i));
    gens.emplace_back(std::move(images));
  }
  for (auto const &h : H.generators()) {
    std::vector<Permutation::Point> images(G.degree());
    std::iota(images.begin(), images.end(), Permutation::Point{0});
    for (auto v : h.images())
      images.push_back(static_cast<Permutation::Point>(G.degree() + v));
    gens.emplace_back(std::move(images));
  }

  auto names = a.generator_names();
  std::set<std::string> used(names.begin(), names.end());
  std::size_t next_letter = 0;
  for (auto name : b.generator_names()) {
    while (used.count(name)) {
      name = letter_name(next_letter++);
    }
    used.insert(name);
    names.push_back(name);
  }

  auto key = a.key() + "x" + b.key();
  auto P = FiniteGroup::enumerate(std::move(gens), degree, kDefaultOrderBound, key);

  auto const &ma = a.metadata();
  auto const &mb = b.metadata();
  CatalogMetadata m;
  m.order = ma.order * mb.order;
  m.exponent = std::lcm(ma.exponent, mb.exponent);
  m.abelian = ma.abelian && mb.abelian;
  m.nilpotent = ma.nilpotent && mb.nilpotent;
  m.cyclic = ma.cyclic && mb.cyclic && std::gcd(ma.order, mb.order) == 1;

  CatalogEntry e(key, {{"left", a.key()}, {"right", b.key()}}, std::move(P), std::move(names), m);
  add_standard_actions(e);
  return e;
}

CatalogEntry g27_with_tau()
{
  // a^i b^j, i mod 9, j mod 3, with b^-1 a b = a^4, so b^j a^k = a^(k 7^j) b^j
  auto idx = [](std::uint32_t i, std::uint32_t j) { return i % 9 + 9 * (j % 3); };
  static constexpr std::uint32_t seven_pow[3] = {1, 7, 49 % 9};
  Table table(27, std::vector<std::uint32_t>(27));
  for (std::uint32_t i = 0; i < 9; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      for (std::uint32_t k = 0; k < 9; ++k) {
        for (std::uint32_t l = 0; l < 3; ++l)
          table[idx(i, j)][idx(k, l)] = idx(i + k * seven_pow[j], j + l);
      }
    }
  }

  CatalogMetadata m;
  m.order = 27;
  m.exponent = 9;
  m.abelian = false;
  m.nilpotent = true;
  m.cyclic = false;
  m.generalized_quaternion = false;
  m.frobenius_known = true;

  CatalogEntry e("g27", {}, regular_representation(table, {idx(1, 0), idx(0, 1)}, kDefaultOrderBound, "g27"),
                 {"a", "b"}, m);
  add_standard_actions(e);

  auto tau = std::vector<ElementId>{e.element("a^-1"), e.element("b")};
  e.add_action("inner+tau", [tau](const FiniteGroup &G, std::size_t) {
    auto A = inner_generators(G);
    A.kind = ActionKind::explicit_;
    A.label = "inner+tau";
    A.generators.push_back(explicit_automorphism(G, tau));
    return A;
  });
  e.add_action("tau", [tau](const FiniteGroup &G, std::size_t) {
    AutAction A;
    A.kind = ActionKind::explicit_;
    A.label = "tau";
    A.generators.push_back(explicit_automorphism(G, tau));
    return A;
  });
  return e;
}

CatalogEntry frobenius_field(std::uint32_t p, std::uint32_t k, std::uint32_t m)
{
  FiniteField F(p, k);
  auto q = F.size();
  if (m < 2 || (q - 1) % m != 0)
    throw Error(ErrorKind::BadParameters,
                std::to_string(m) + " does not divide " + std::to_string(q - 1) + " or is below 2");

  auto multiplier = F.pow(F.primitive(), (q - 1) / m);
  if (F.order(multiplier) != m)
    throw Error(ErrorKind::BadParameters, "field multiplier has the wrong order");

  std::vector<Permutation> gens;
  std::uint32_t basis = 1;
  for (std::uint32_t i = 0; i < k; ++i, basis *= p) {
    std::vector<Permutation::Point> images(q);
    for (std::uint32_t x = 0; x < q; ++x)
      images[x] = F.add(x, basis);
    gens.emplace_back(std::move(images));
  }
  std::vector<Permutation::Point> scale(q);
  for (std::uint32_t x = 0; x < q; ++x)
    scale[x] = F.mul(multiplier, x);
  gens.emplace_back(std::move(scale));

  auto names = letter_names(k, "uvwrstklmn");
  names.push_back("x");

  auto key = k == 1 ? "frobenius(" + std::to_string(p) + "," + std::to_string(m) + ")"
                    : "frobenius_field(" + std::to_string(p) + "," + std::to_string(k) + "," +
                        std::to_string(m) + ")";
  CatalogMetadata md;
  md.order = std::size_t{q} * m;
  md.exponent = std::uint64_t{p} * m;
  md.abelian = false;
  md.nilpotent = false;
  md.cyclic = false;
  md.generalized_quaternion = false;
  md.frobenius_known = true;
  md.frobenius = std::pair<std::size_t, std::size_t>{q, m};
  if (k > 1)
    md.field_polynomial = F.modulus_string();

  std::map<std::string, std::string> params{
    {"p", std::to_string(p)}, {"k", std::to_string(k)}, {"m", std::to_string(m)},
    {"multiplier", std::to_string(multiplier)}};
  CatalogEntry e(key, std::move(params),
                 FiniteGroup::enumerate(std::move(gens), q, kDefaultOrderBound, key),
                 std::move(names), md);
  add_standard_actions(e);
  return e;
}

CatalogEntry frobenius(std::uint32_t p, std::uint32_t q)
{
  if (!nt::is_prime(p) || q < 2 || (p - 1) % q != 0)
    throw Error(ErrorKind::BadParameters,
                "frobenius(p, q) needs a prime p and q >= 2 dividing p - 1");

  // x -> a x with a the matching power of the least primitive root
  std::uint64_t a = 1;
  auto g = least_primitive_root(p);
  for (std::uint32_t i = 0; i < (p - 1) / q; ++i)
    a = a * g % p;

  std::vector<Permutation::Point> shift(p), scale(p);
  for (std::uint32_t x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    scale[x] = static_cast<Permutation::Point>(a * x % p);
  }

  auto key = "frobenius(" + std::to_string(p) + "," + std::to_string(q) + ")";
  CatalogMetadata md;
  md.order = std::size_t{p} * q;
  md.exponent = std::uint64_t{p} * q;
  md.abelian = false;
  md.nilpotent = false;
  md.cyclic = false;
  md.generalized_quaternion = false;
  md.frobenius_known = true;
  md.frobenius = std::pair<std::size_t, std::size_t>{p, q};

  CatalogEntry e(key,
                 {{"p", std::to_string(p)}, {"q", std::to_string(q)}, {"multiplier", std::to_string(a)}},
                 FiniteGroup::enumerate({Permutation(std::move(shift)), Permutation(std::move(scale))}, p,
                                        kDefaultOrderBound, key),
                 {"u", "x"}, md);
  add_standard_actions(e);
  return e;
}

CatalogEntry z6_x_frob42()
{
  auto z6 = cyclic(6);
  z6 = CatalogEntry(z6.key(), z6.parameters(), z6.group(), {"z"}, z6.metadata());
  auto prod = direct_product(z6, frobenius(7, 6));

  auto m = prod.metadata();
  m.frobenius_known = true;
  m.generalized_quaternion = false;
  CatalogEntry e("z6_x_frob42", {}, prod.group(), prod.generator_names(), m);
  add_standard_actions(e);
  // u is the first generator of the kernel F
  e.tag("x", "x");
  e.tag("y", "u^-1 x u");
  return e;
}

CatalogEntry extraspecial_27()
{
  // (x, y, z) for the unitriangular matrix [[1, x, z], [0, 1, y], [0, 0, 1]]
  auto idx = [](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return x % 3 + 3 * (y % 3) + 9 * (z % 3);
  };
  Table table(27, std::vector<std::uint32_t>(27));
  for (std::uint32_t a = 0; a < 27; ++a) {
    for (std::uint32_t b = 0; b < 27; ++b) {
      auto x = a % 3, y = a / 3 % 3, z = a / 9;
      auto x2 = b % 3, y2 = b / 3 % 3, z2 = b / 9;
      table[a][b] = idx(x + x2, y + y2, z + z2 + x * y2);
    }
  }

  CatalogMetadata m;
  m.order = 27;
  m.exponent = 3;
  m.abelian = false;
  m.nilpotent = true;
  m.cyclic = false;
  m.generalized_quaternion = false;
  m.frobenius_known = true;
  CatalogEntry e("extraspecial27", {},
                 regular_representation(table, {idx(1, 0, 0), idx(0, 1, 0)}, kDefaultOrderBound,
                                        "extraspecial27"),
                 {"c", "d"}, m);
  add_standard_actions(e);
  return e;
}

CatalogEntry klein4_x_extraspecial27()
{
  auto prod = direct_product(elementary_abelian(2, 2), extraspecial_27());
  auto m = prod.metadata();
  m.generalized_quaternion = false;
  m.frobenius_known = true;
  CatalogEntry e("klein4_x_extraspecial27", {}, prod.group(), prod.generator_names(), m);
  add_standard_actions(e);
  e.tag("x", "ac");
  e.tag("y", "bd");
  return e;
}

CatalogEntry a5_with_actions()
{
  auto G = FiniteGroup::enumerate({Permutation::from_cycles(5, "(1 2 3 4 5)"),
                                   Permutation::from_cycles(5, "(1 2 3)")},
                                  5, kDefaultOrderBound, "a5");
  CatalogMetadata m;
  m.order = 60;
  m.exponent = 30;
  m.abelian = false;
  m.nilpotent = false;
  m.cyclic = false;
  m.generalized_quaternion = false;
  m.frobenius_known = true;
  CatalogEntry e("a5", {}, std::move(G), {"a", "b"}, m);
  add_standard_actions(e);

  e.add_action("s4", [](const FiniteGroup &G, std::size_t cap) {
    return conjugation_action(G,
                              {Permutation::from_cycles(5, "(1 2 3 4)"),
                               Permutation::from_cycles(5, "(1 2)")},
                              "s4", cap);
  });
  e.add_action("s5", [](const FiniteGroup &G, std::size_t cap) {
    return conjugation_action(G,
                              {Permutation::from_cycles(5, "(1 2 3 4 5)"),
                               Permutation::from_cycles(5, "(1 2)")},
                              "s5", cap);
  });
  return e;
}

CatalogEntry singer(std::uint32_t p, std::uint32_t k)
{
  if (!nt::is_prime(p) || k < 2)
    throw Error(ErrorKind::BadParameters, "singer(p, k) needs a prime p and k >= 2");
  FiniteField F(p, k);
  auto q = F.size();

  std::vector<Permutation> gens;
  std::uint32_t basis = 1;
  for (std::uint32_t i = 0; i < k; ++i, basis *= p) {
    std::vector<Permutation::Point> images(q);
    for (std::uint32_t x = 0; x < q; ++x)
      images[x] = F.add(x, basis);
    gens.emplace_back(std::move(images));
  }

  auto key = "singer(" + std::to_string(p) + "," + std::to_string(k) + ")";
  auto m = abelian_metadata(q, p);
  m.homocyclic = true;
  m.field_polynomial = F.modulus_string();

  std::vector<Permutation::Point> scale(q);
  for (std::uint32_t x = 0; x < q; ++x)
    scale[x] = F.mul(F.primitive(), x);
  Permutation conjugator(std::move(scale));

  CatalogEntry e(key,
                 {{"p", std::to_string(p)}, {"k", std::to_string(k)},
                  {"primitive", std::to_string(F.primitive())}},
                 FiniteGroup::enumerate(std::move(gens), q, kDefaultOrderBound, key),
                 letter_names(k, "uvwrstklmn"), m);
  add_standard_actions(e);
  e.add_action("singer", [conjugator](const FiniteGroup &G, std::size_t cap) {
    return conjugation_action(G, {conjugator}, "singer", cap);
  });
  return e;
}

CatalogEntry sl2_3()
{
  // nonzero column vectors (v0, v1) of F_3^2, point index v0 + 3 v1 - 1
  auto point = [](std::uint32_t v0, std::uint32_t v1) { return (v0 % 3) + 3 * (v1 % 3) - 1; };
  auto act = [&](std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) {
    std::vector<Permutation::Point> images(8);
    for (std::uint32_t v = 1; v < 9; ++v) {
      auto v0 = v % 3, v1 = v / 3;
      images[v - 1] = point(m00 * v0 + m01 * v1, m10 * v0 + m11 * v1);
    }
    return Permutation(std::move(images));
  };

  CatalogMetadata m;
  m.order = 24;
  m.exponent = 12;
  m.abelian = false;
  m.nilpotent = false;
  m.cyclic = false;
  m.generalized_quaternion = false;
  m.frobenius_known = true;
  CatalogEntry e("sl2_3", {},
                 FiniteGroup::enumerate({act(1, 1, 0, 1), act(0, 1, 2, 0)}, 8, kDefaultOrderBound,
                                        "sl2_3"),
                 {"a", "b"}, m);
  add_standard_actions(e);
  return e;
}

const std::vector<std::string> &keys()
{
  static const std::vector<std::string> list{
    "z4", "z6", "z12", "z2xz2", "z2xz2xz2", "z3xz3", "z4xz2", "z4xz4", "z4xz9",
    "d8", "d12", "q8", "q16", "g27", "extraspecial27", "klein4_x_extraspecial27",
    "frobenius(3,2)", "frobenius(5,4)", "frobenius(7,2)", "frobenius(7,3)", "frobenius(7,6)",
    "frobenius_field(2,2,3)", "frobenius_field(3,2,2)", "frobenius_field(2,3,7)",
    "z6_x_frob42", "a5", "singer(2,2)", "singer(2,3)", "singer(3,2)", "singer(5,2)", "sl2_3",
  };
  return list;
}

CatalogEntry load(std::string_view requested)
{
  auto key = strip_spaces(requested);
  for (auto &c : key)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

  auto build = [&]() -> CatalogEntry {
    auto [name, args] = split_call(key);
    if (name.empty())
      throw Error(ErrorKind::UnknownKey, "empty catalog key");

    if (key == "g27")
      return g27_with_tau();
    if (key == "extraspecial27")
      return extraspecial_27();
    if (key == "klein4_x_extraspecial27")
      return klein4_x_extraspecial27();
    if (key == "z6_x_frob42")
      return z6_x_frob42();
    if (key == "a5")
      return a5_with_actions();
    if (key == "sl2_3")
      return sl2_3();

    if (name == "cyclic") {
      require_args(key, args, 1);
      return cyclic(args[0]);
    }
    if (name == "elementary_abelian") {
      require_args(key, args, 2);
      return elementary_abelian(args[0], args[1]);
    }
    if (name == "homocyclic") {
      require_args(key, args, 3);
      return homocyclic(args[0], args[1], args[2]);
    }
    if (name == "dihedral") {
      require_args(key, args, 1);
      return dihedral(args[0]);
    }
    if (name == "generalized_quaternion") {
      require_args(key, args, 1);
      return generalized_quaternion(args[0]);
    }
    if (name == "frobenius") {
      require_args(key, args, 2);
      return frobenius(args[0], args[1]);
    }
    if (name == "frobenius_field") {
      require_args(key, args, 3);
      return frobenius_field(args[0], args[1], args[2]);
    }
    if (name == "singer") {
      require_args(key, args, 2);
      return singer(args[0], args[1]);
    }

    if (args.empty() && key.size() > 1 && std::isdigit(static_cast<unsigned char>(key[1]))) {
      if (key[0] == 'd') {
        auto n = parse_uint(std::string_view(key).substr(1));
        if (n % 2 != 0)
          throw Error(ErrorKind::UnknownKey, "dihedral key needs an even order: " + key);
        return dihedral(n / 2);
      }
      if (key[0] == 'q')
        return generalized_quaternion(parse_uint(std::string_view(key).substr(1)));
      if (key[0] == 'z') {
        if (key.find('x') == std::string::npos)
          return cyclic(parse_uint(std::string_view(key).substr(1)));
        return abelian_product(key);
      }
    }
    throw Error(ErrorKind::UnknownKey, "unknown catalog key '" + std::string(requested) + "'");
  };

  CatalogEntry e = [&] {
    try {
      return build();
    } catch (const Error &err) {
      if (err.kind() == ErrorKind::BadParameters)
        throw Error(ErrorKind::UnknownKey, err.what());
      throw;
    }
  }();
  e.validate();
  return e;
}

} // namespace catalog

} // namespace autocyc
