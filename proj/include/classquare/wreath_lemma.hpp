#ifndef CLASSQUARE_WREATH_LEMMA_HPP
#define CLASSQUARE_WREATH_LEMMA_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "perm.hpp"

namespace classquare
{

struct WreathWitness
{
  Perm w;
  Perm product;                 // x^w x
  std::uint64_t product_order = 0;
  bool from_explicit_form = false;

  // Filled when the explicit form w = (a, b^-1, 1, ..., 1) was tried.
  std::optional<std::pair<Perm, Perm>> noncommuting_pair;
  bool commuting_control_is_p_element = false; // same form with a = b
  bool displayed_identity_holds = false;       // x^w x = (a^-1 b^-1, b, 1, ..., 1, a) x^2

  std::uint64_t random_tries = 0;
};

namespace detail
{

inline std::vector<Perm> explicit_form_coords(const Perm &a, const Perm &b, std::size_t p)
{
  std::vector<Perm> coords(p, Perm(a.degree()));
  coords[0] = a;
  coords[1] = ~b;
  return coords;
}

} // namespace detail

/**
 * Finds w in W = H wr C_p with x^w x not a p-element. The explicit form
 * w = (a, b^-1, 1, ..., 1) for a non-commuting pair (a, b) of H is tried
 * first, together with the commuting control a = b, which must give a
 * p-element when x is the top cycle. Uniform random elements of W are the
 * fallback.
 */
inline WreathWitness wreath_witness_search(const WreathProduct &wr, const Perm &x,
                                           std::uint64_t seed = 1,
                                           std::uint64_t max_random_tries = 200000)
{
  const Group &h = wr.factor();
  const Group &w_group = wr.group();
  const std::uint64_t p = wr.prime();

  if (h.is_abelian())
    throw PreconditionError("the wreath lemma needs a non-abelian base group");
  if (h.order() % p == 0)
    throw PreconditionError("p = " + std::to_string(p) + " divides |H| = " +
                            std::to_string(h.order()));
  if (x.degree() != w_group.degree() || !w_group.contains(x))
    throw PreconditionError("x is not an element of the wreath product");
  if (element_order(x) != p)
    throw PreconditionError("x does not have order p");

  WreathWitness res;

  auto try_w = [&](const Perm &w) {
    Perm prod = x.conjugated_by(w) * x;
    if (is_p_element(prod, p))
      return false;
    res.w = w;
    res.product_order = element_order(prod);
    res.product = std::move(prod);
    return true;
  };

  std::vector<Perm> candidates = h.is_enumerable() ? h.elements().elements() : h.generators();
  for (std::size_t i = 0; i < candidates.size() && !res.noncommuting_pair; ++i) {
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (candidates[i] * candidates[j] != candidates[j] * candidates[i]) {
        res.noncommuting_pair.emplace(candidates[i], candidates[j]);
        break;
      }
    }
  }

  if (p > 2) {
    auto const &[a, b] = *res.noncommuting_pair;
    Perm w = wr.base_element(detail::explicit_form_coords(a, b, p));

    Perm control = wr.base_element(detail::explicit_form_coords(a, a, p));
    res.commuting_control_is_p_element = is_p_element(x.conjugated_by(control) * x, p);

    if (x == wr.top_cycle()) {
      std::vector<Perm> coords(p, Perm(h.degree()));
      coords[0] = ~a * ~b;
      coords[1] = b;
      coords[p - 1] = a;
      Perm x2 = x * x;
      res.displayed_identity_holds =
        x.conjugated_by(w) * x == wr.base_element(coords) * x2 &&
        x.conjugated_by(w) * x == ~w * w.conjugated_by(~x) * x2;
    }

    if (try_w(w)) {
      res.from_explicit_form = true;
      return res;
    }
  }

  std::mt19937_64 rng(seed);
  for (res.random_tries = 1; res.random_tries <= max_random_tries; ++res.random_tries) {
    if (try_w(w_group.random_element(rng)))
      return res;
  }
  throw Error("no witness found after " + std::to_string(max_random_tries) + " random elements");
}

} // namespace classquare

#endif // CLASSQUARE_WREATH_LEMMA_HPP
