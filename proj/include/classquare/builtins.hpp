#ifndef CLASSQUARE_BUILTINS_HPP
#define CLASSQUARE_BUILTINS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "perm.hpp"

/**
 * @file builtins.hpp
 * @brief Named constructors for the groups of the verification corpus.
 *
 *   sym:n  alt:n  cyclic:n  dihedral:2n  quaternion:8  frobenius:21
 *   psl2:q            q prime <= 23, on the projective line {0..q-1, inf}
 *   wr:<name>:<p>     imprimitive wreath product with C_p
 *   prod:<name>:<k>   direct power
 *   diag-alt4cubed    index-3 subgroup of Alt(4)^3 (see below)
 *   extraspecial:27:+ / extraspecial:27:-   exponent 3 / exponent 9
 */

namespace classquare
{

namespace detail
{

inline Perm perm_from_map(std::size_t degree, auto &&f)
{
  std::vector<Perm::point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Perm::point_type>(f(i));
  return Perm(std::move(images));
}

inline std::uint64_t parse_param(std::string_view name, std::string_view text)
{
  if (text.empty() || text.size() > 9)
    throw PreconditionError("bad parameter in builtin \"" + std::string(name) + "\"");
  std::uint64_t v = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw PreconditionError("bad parameter in builtin \"" + std::string(name) + "\"");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

inline void require_degree(std::uint64_t degree, const Limits &limits, std::string_view name)
{
  if (degree < 1 || degree > limits.max_degree)
    throw PreconditionError("builtin \"" + std::string(name) + "\" needs degree " +
                            std::to_string(degree) + ", outside [1, " +
                            std::to_string(limits.max_degree) + "]");
}

/// Coset of the Klein subgroup containing an element of Alt(4): 0, 1 or 2.
inline int alt4_to_c3(const Perm &a)
{
  Perm t(std::vector<Perm::point_type>{1, 2, 0, 3});
  Perm x = a;
  for (int k = 0; k < 3; ++k) {
    auto ct = x.cycle_type();
    if (x.is_identity() || ct == std::vector<std::size_t>{2, 2})
      return k;
    x *= ~t;
  }
  throw PreconditionError(format_cycles(a) + " is not in Alt(4)");
}

} // namespace detail

inline Group symmetric_group(std::size_t n, Limits limits = {})
{
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(detail::perm_from_map(n, [](std::size_t i) { return i < 2 ? 1 - i : i; }));
    gens.push_back(detail::perm_from_map(n, [n](std::size_t i) { return (i + 1) % n; }));
  }
  return Group(n, std::move(gens), limits);
}

inline Group alternating_group(std::size_t n, Limits limits = {})
{
  std::vector<Perm> gens;
  for (std::size_t k = 2; k < n; ++k) {
    gens.push_back(detail::perm_from_map(n, [k](std::size_t i) -> std::size_t {
      if (i == 0) return 1;
      if (i == 1) return k;
      if (i == k) return 0;
      return i;
    }));
  }
  return Group(n, std::move(gens), limits);
}

inline Group cyclic_group(std::size_t n, Limits limits = {})
{
  return Group(n, {detail::perm_from_map(n, [n](std::size_t i) { return (i + 1) % n; })},
               limits);
}

/// Dihedral group of order 2n on n points.
inline Group dihedral_group(std::size_t n, Limits limits = {})
{
  if (n < 3)
    throw PreconditionError("dihedral:2n needs n >= 3");
  return Group(n,
               {detail::perm_from_map(n, [n](std::size_t i) { return (i + 1) % n; }),
                detail::perm_from_map(n, [n](std::size_t i) { return (n - i) % n; })},
               limits);
}

/// Quaternion group of order 8 in its regular action.
inline Group quaternion_group(Limits limits = {})
{
  return Group(8,
               {parse_cycles("(1,2,3,4)(5,6,7,8)", 8), parse_cycles("(1,5,3,7)(2,8,4,6)", 8)},
               limits);
}

/// x -> x + 1 and x -> 2x on Z/7.
inline Group frobenius21(Limits limits = {})
{
  return Group(7,
               {detail::perm_from_map(7, [](std::size_t i) { return (i + 1) % 7; }),
                detail::perm_from_map(7, [](std::size_t i) { return (2 * i) % 7; })},
               limits);
}

/// PSL(2,q), q prime, on {0, ..., q-1, inf}; inf is the last point.
inline Group psl2(std::uint64_t q, Limits limits = {})
{
  if (!is_prime(q) || q > 23)
    throw PreconditionError("psl2:q needs q prime and at most 23");
  std::size_t inf = q;
  auto inverse_mod = [q](std::uint64_t x) {
    for (std::uint64_t y = 1; y < q; ++y) {
      if (x * y % q == 1)
        return y;
    }
    return std::uint64_t{0};
  };
  Perm translate = detail::perm_from_map(q + 1, [q, inf](std::size_t i) {
    return i == inf ? inf : (i + 1) % q;
  });
  Perm invert = detail::perm_from_map(q + 1, [&](std::size_t i) -> std::size_t {
    if (i == inf) return 0;
    if (i == 0) return inf;
    return (q - inverse_mod(i)) % q;
  });
  return Group(q + 1, {translate, invert}, limits);
}

/**
 * Heisenberg group mod 3 (exponent 3) on the affine plane over F_3, or
 * <x -> x+1, x -> 4x> on Z/9 (exponent 9).
 */
inline Group extraspecial27(bool exponent_three, Limits limits = {})
{
  if (exponent_three) {
    // point (x, y) is 3x + y
    Perm tx = detail::perm_from_map(9, [](std::size_t i) { return ((i / 3 + 1) % 3) * 3 + i % 3; });
    Perm shear = detail::perm_from_map(9, [](std::size_t i) {
      std::size_t x = i / 3, y = i % 3;
      return x * 3 + (y + x) % 3;
    });
    return Group(9, {tx, shear}, limits);
  }
  return Group(9,
               {detail::perm_from_map(9, [](std::size_t i) { return (i + 1) % 9; }),
                detail::perm_from_map(9, [](std::size_t i) { return (4 * i) % 9; })},
               limits);
}

/**
 * {(a, b, c) in Alt(4)^3 : psi(a) psi(b) psi(c) = 1}, psi the map onto
 * C_3 with the Klein group as kernel. Generators are taken greedily from
 * the qualifying elements in sorted order.
 */
inline Group diag_alt4_cubed(Limits limits = {})
{
  Group cube = direct_power(alternating_group(4, limits), 3);
  std::vector<Perm> members;
  for (auto const &x : cube.elements()) {
    int total = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      std::vector<Perm::point_type> coord(4);
      for (std::size_t i = 0; i < 4; ++i)
        coord[i] = static_cast<Perm::point_type>(x[4 * c + i] - 4 * c);
      total += detail::alt4_to_c3(Perm(std::move(coord)));
    }
    if (total % 3 == 0)
      members.push_back(x);
  }
  Group g = detail::close_over(12, members, limits, members.size());
  if (g.order() != members.size())
    throw Error("diag-alt4cubed: kernel of the product map is not a subgroup");
  return g;
}

inline Group builtin(std::string_view name, Limits limits = {})
{
  auto starts = [&](std::string_view prefix) { return name.substr(0, prefix.size()) == prefix; };
  auto split_last = [&](std::string_view rest) {
    auto pos = rest.rfind(':');
    if (pos == std::string_view::npos)
      throw PreconditionError("builtin \"" + std::string(name) + "\" is missing a parameter");
    return std::pair{rest.substr(0, pos), detail::parse_param(name, rest.substr(pos + 1))};
  };

  if (starts("wr:")) {
    auto [inner, p] = split_last(name.substr(3));
    if (!is_prime(p))
      throw PreconditionError("wr:<group>:<p> needs p prime");
    return wreath_product(builtin(inner, limits), p);
  }
  if (starts("prod:")) {
    auto [inner, k] = split_last(name.substr(5));
    if (k < 1 || k > 64)
      throw PreconditionError("prod:<group>:<k> needs 1 <= k <= 64");
    return direct_power(builtin(inner, limits), k);
  }
  if (name == "diag-alt4cubed")
    return diag_alt4_cubed(limits);
  if (name == "frobenius:21")
    return frobenius21(limits);
  if (name == "quaternion:8")
    return quaternion_group(limits);
  if (name == "extraspecial:27:+")
    return extraspecial27(true, limits);
  if (name == "extraspecial:27:-")
    return extraspecial27(false, limits);

  auto colon = name.find(':');
  if (colon == std::string_view::npos)
    throw PreconditionError("unknown builtin group \"" + std::string(name) + "\"");
  auto family = name.substr(0, colon);
  auto n = detail::parse_param(name, name.substr(colon + 1));

  if (family == "sym") {
    detail::require_degree(n, limits, name);
    return symmetric_group(n, limits);
  }
  if (family == "alt") {
    detail::require_degree(n, limits, name);
    return alternating_group(n, limits);
  }
  if (family == "cyclic") {
    detail::require_degree(n, limits, name);
    return cyclic_group(n, limits);
  }
  if (family == "dihedral") {
    if (n % 2 != 0 || n < 6)
      throw PreconditionError("dihedral:2n needs an even order of at least 6");
    detail::require_degree(n / 2, limits, name);
    return dihedral_group(n / 2, limits);
  }
  if (family == "psl2")
    return psl2(n, limits);
  throw PreconditionError("unknown builtin group \"" + std::string(name) + "\"");
}

/// The builtin corpus swept by the acceptance and invariant suites.
inline std::vector<std::string> default_corpus()
{
  return {
    "cyclic:1", "cyclic:6", "cyclic:7", "sym:3", "sym:4", "sym:5",
    "alt:4", "alt:5", "alt:6", "dihedral:8", "dihedral:10", "dihedral:16",
    "quaternion:8", "frobenius:21", "psl2:7", "psl2:11", "psl2:13",
    "extraspecial:27:+", "extraspecial:27:-", "wr:cyclic:3:3", "wr:cyclic:2:3",
    "prod:sym:3:2", "prod:alt:4:2", "prod:alt:4:3", "prod:cyclic:3:2",
    "diag-alt4cubed", "wr:sym:3:3", "wr:sym:3:5",
  };
}

} // namespace classquare

#endif // CLASSQUARE_BUILTINS_HPP
