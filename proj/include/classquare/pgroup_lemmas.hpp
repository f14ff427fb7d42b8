#ifndef CLASSQUARE_PGROUP_LEMMAS_HPP
#define CLASSQUARE_PGROUP_LEMMAS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "perm.hpp"
#include "structure.hpp"

/**
 * @file pgroup_lemmas.hpp
 * @brief Brute-force checks of two lemmas about order-p elements acting on
 *        the elementary abelian subgroups of a p-group.
 */

namespace classquare
{

inline constexpr std::uint64_t kMaxPGroupOrder = 512;

namespace detail
{

/// Multiplication table of a small group, indexed like its ElementSet.
class CayleyTable
{
public:
  explicit CayleyTable(const Group &g)
  {
    auto const &elems = g.elements();
    n_ = elems.size();
    mul_.resize(n_ * n_);
    inv_.resize(n_);
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j)
        mul_[i * n_ + j] = static_cast<std::uint16_t>(*elems.find(elems[i] * elems[j]));
      inv_[i] = static_cast<std::uint16_t>(*elems.find(~elems[i]));
      order_[i] = element_order(elems[i]);
      if (elems[i].is_identity())
        identity_ = static_cast<std::uint16_t>(i);
    }
  }

  std::size_t size() const { return n_; }
  std::uint16_t mul(std::size_t i, std::size_t j) const { return mul_[i * n_ + j]; }
  std::uint16_t inv(std::size_t i) const { return inv_[i]; }
  std::uint16_t conj(std::size_t x, std::size_t w) const { return mul(mul(inv(w), x), w); }
  std::uint64_t order(std::size_t i) const { return order_[i]; }
  std::uint16_t identity() const { return identity_; }
  bool commute(std::size_t i, std::size_t j) const { return mul(i, j) == mul(j, i); }

  /// Sorted element set of the subgroup generated by `gens`.
  std::vector<std::uint16_t> generate(const std::vector<std::uint16_t> &gens) const
  {
    std::vector<bool> in(n_, false);
    std::vector<std::uint16_t> elems{identity_};
    in[identity_] = true;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (auto g : gens) {
        auto y = mul(elems[k], g);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint64_t> order_;
  std::uint16_t identity_ = 0;
};

struct ElemAbelian
{
  std::vector<std::uint16_t> gens;
  std::vector<std::uint16_t> elements; // sorted
};

/// Every elementary abelian subgroup (the trivial one included), by rank.
inline std::vector<ElemAbelian> elementary_abelian_subgroups(const CayleyTable &t, std::uint64_t p)
{
  std::vector<ElemAbelian> res{{{}, {t.identity()}}};
  std::set<std::vector<std::uint16_t>> seen{res[0].elements};
  for (std::size_t k = 0; k < res.size(); ++k) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (t.order(y) != p)
        continue;
      auto const &cur = res[k];
      if (std::binary_search(cur.elements.begin(), cur.elements.end(), y))
        continue;
      bool commutes = std::all_of(cur.gens.begin(), cur.gens.end(),
                                  [&](auto g) { return t.commute(g, y); });
      if (!commutes)
        continue;
      auto gens = cur.gens;
      gens.push_back(static_cast<std::uint16_t>(y));
      auto elems = t.generate(gens);
      if (seen.insert(elems).second)
        res.push_back({std::move(gens), std::move(elems)});
    }
  }
  return res;
}

inline bool normalizes(const CayleyTable &t, std::size_t a, const ElemAbelian &e)
{
  return std::all_of(e.gens.begin(), e.gens.end(), [&](auto g) {
    return std::binary_search(e.elements.begin(), e.elements.end(), t.conj(g, a));
  });
}

inline bool centralizes(const CayleyTable &t, std::size_t a, const ElemAbelian &e)
{
  return std::all_of(e.gens.begin(), e.gens.end(), [&](auto g) { return t.commute(g, a); });
}

/// a normalizes, but does not centralize, some elementary abelian subgroup.
inline bool acts_nontrivially(const CayleyTable &t, std::size_t a,
                              const std::vector<ElemAbelian> &subgroups)
{
  for (auto const &e : subgroups) {
    if (normalizes(t, a, e) && !centralizes(t, a, e))
      return true;
  }
  return false;
}

inline void require_small_p_group(const Group &g, std::uint64_t p)
{
  require_prime(p);
  if (!is_power_of(g.order(), p))
    throw PreconditionError("group of order " + std::to_string(g.order()) +
                            " is not a " + std::to_string(p) + "-group");
  if (g.order() > kMaxPGroupOrder)
    throw PreconditionError("p-group lemma checks are limited to order " +
                            std::to_string(kMaxPGroupOrder));
}

} // namespace detail

struct PGroupLemmaReport
{
  bool holds = true;
  std::size_t elementary_abelian_subgroups = 0;
  std::size_t applicable = 0; // elements (first lemma) or subsets (second lemma) checked
  std::vector<std::string> failures;
};

/**
 * For every a of order p that normalizes but does not centralize some
 * elementary abelian subgroup of P, looks for an elementary abelian X of
 * order p^2 with |a^P n X| = p and X n P' != 1.
 */
inline PGroupLemmaReport verify_pgroup_lemma_abundant(const Group &pg, std::uint64_t p)
{
  detail::require_small_p_group(pg, p);
  detail::CayleyTable t(pg);
  auto subgroups = detail::elementary_abelian_subgroups(t, p);

  auto const &elems = pg.elements();
  std::vector<bool> in_derived(t.size(), false);
  Subgroup derived = derived_subgroup(pg);
  for (auto const &x : derived.group().elements())
    in_derived[*elems.find(x)] = true;

  PGroupLemmaReport rep;
  rep.elementary_abelian_subgroups = subgroups.size();
  for (std::size_t a = 0; a < t.size(); ++a) {
    if (t.order(a) != p || !detail::acts_nontrivially(t, a, subgroups))
      continue;
    ++rep.applicable;

    std::vector<bool> in_class(t.size(), false);
    for (std::size_t w = 0; w < t.size(); ++w)
      in_class[t.conj(a, w)] = true;

    bool found = false;
    for (auto const &x : subgroups) {
      if (x.elements.size() != p * p)
        continue;
      std::uint64_t meet = 0;
      bool meets_derived = false;
      for (auto e : x.elements) {
        if (in_class[e])
          ++meet;
        if (e != t.identity() && in_derived[e])
          meets_derived = true;
      }
      if (meet == p && meets_derived) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.holds = false;
      rep.failures.push_back("no witness subgroup for " + format_cycles(elems[a]));
    }
  }
  return rep;
}

/**
 * For every non-empty normal subset A of order-p elements each of which
 * centralizes every elementary abelian subgroup it normalizes, checks that
 * <A> is elementary abelian and normal. Such A are exactly the unions of
 * qualifying classes; with more than the subset cap of qualifying classes
 * only the single classes and the full union are checked.
 */
inline PGroupLemmaReport verify_pgroup_lemma_gen_abelian(const Group &pg, std::uint64_t p)
{
  detail::require_small_p_group(pg, p);
  detail::CayleyTable t(pg);
  auto subgroups = detail::elementary_abelian_subgroups(t, p);
  ConjClassTable table(pg);

  std::vector<std::size_t> qualifying;
  for (auto id : classes_of_order(table, p)) {
    bool ok = std::none_of(table[id].members.begin(), table[id].members.end(),
                           [&](auto a) { return detail::acts_nontrivially(t, a, subgroups); });
    if (ok)
      qualifying.push_back(id);
  }

  std::vector<std::vector<std::size_t>> unions;
  if (qualifying.size() <= kMaxNormalSubsetClasses) {
    for (std::uint32_t mask = 1; mask < (1u << qualifying.size()); ++mask) {
      std::vector<std::size_t> chosen;
      for (std::size_t b = 0; b < qualifying.size(); ++b) {
        if (mask & (1u << b))
          chosen.push_back(qualifying[b]);
      }
      unions.push_back(std::move(chosen));
    }
  } else {
    for (auto id : qualifying)
      unions.push_back({id});
    unions.push_back(qualifying);
  }

  PGroupLemmaReport rep;
  rep.elementary_abelian_subgroups = subgroups.size();
  for (auto const &ids : unions) {
    ++rep.applicable;
    std::vector<std::uint16_t> gens;
    for (auto id : ids) {
      for (auto m : table[id].members)
        gens.push_back(static_cast<std::uint16_t>(m));
    }
    auto gen = t.generate(gens);
    bool abelian = true;
    for (std::size_t i = 0; i < gens.size() && abelian; ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!t.commute(gens[i], gens[j])) {
          abelian = false;
          break;
        }
      }
    }
    bool exponent_p = std::all_of(gen.begin(), gen.end(), [&](auto e) {
      return t.order(e) == 1 || t.order(e) == p;
    });
    bool normal = true;
    for (auto e : gen) {
      for (std::size_t w = 0; w < t.size() && normal; ++w) {
        if (!std::binary_search(gen.begin(), gen.end(), t.conj(e, w)))
          normal = false;
      }
    }
    if (!abelian || !exponent_p || !normal) {
      rep.holds = false;
      std::string what = "classes {";
      for (std::size_t i = 0; i < ids.size(); ++i)
        what += (i ? "," : "") + std::to_string(ids[i]);
      what += "} generate a subgroup that is not an elementary abelian normal subgroup";
      rep.failures.push_back(std::move(what));
    }
  }
  return rep;
}

} // namespace classquare

#endif // CLASSQUARE_PGROUP_LEMMAS_HPP
