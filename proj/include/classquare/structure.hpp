#ifndef CLASSQUARE_STRUCTURE_HPP
#define CLASSQUARE_STRUCTURE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "numeric.hpp"
#include "perm.hpp"

namespace classquare
{

struct ConjClass
{
  Perm representative;                 // lexicographically least member
  std::vector<std::uint32_t> members;  // indices into the group's ElementSet, sorted
  std::uint64_t element_order = 1;
  std::vector<std::size_t> cycle_type;

  std::size_t size() const { return members.size(); }
};

/**
 * Conjugacy classes of an enumerable group. Classes are numbered in the
 * order their least element appears in the sorted element list, so class
 * 0 is always the identity class.
 */
class ConjClassTable
{
public:
  explicit ConjClassTable(Group g)
  : group_(std::move(g))
  {
    auto const &elems = group_.elements();
    constexpr auto unset = static_cast<std::uint32_t>(-1);
    class_of_.assign(elems.size(), unset);

    auto const &conj_by = group_.generators();

    for (std::size_t start = 0; start < elems.size(); ++start) {
      if (class_of_[start] != unset)
        continue;
      auto id = static_cast<std::uint32_t>(classes_.size());
      ConjClass cls;
      cls.representative = elems[start];
      cls.element_order = element_order(elems[start]);
      cls.cycle_type = elems[start].cycle_type();
      cls.members.push_back(static_cast<std::uint32_t>(start));
      class_of_[start] = id;
      for (std::size_t k = 0; k < cls.members.size(); ++k) {
        Perm x = elems[cls.members[k]];
        for (auto const &g : conj_by) {
          auto idx = *elems.find(x.conjugated_by(g));
          if (class_of_[idx] == unset) {
            class_of_[idx] = id;
            cls.members.push_back(idx);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes_.push_back(std::move(cls));
    }
  }

  const Group &group() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const ConjClass &operator[](std::size_t i) const { return classes_.at(i); }
  auto begin() const { return classes_.begin(); }
  auto end() const { return classes_.end(); }

  const Perm &element(std::uint32_t idx) const { return group_.elements()[idx]; }

  std::size_t class_of_index(std::uint32_t idx) const { return class_of_[idx]; }

  /// Class id of x; throws if x is not in the group.
  std::size_t class_of(const Perm &x) const
  {
    auto idx = group_.elements().find(x);
    if (!idx)
      throw PreconditionError(format_cycles(x) + " is not in the group");
    return class_of_[*idx];
  }

  std::vector<Perm> class_elements(std::size_t i) const
  {
    std::vector<Perm> res;
    for (auto idx : classes_.at(i).members)
      res.push_back(element(idx));
    return res;
  }

  std::vector<std::size_t> sizes() const
  {
    std::vector<std::size_t> res;
    for (auto const &c : classes_)
      res.push_back(c.size());
    return res;
  }

private:
  Group group_;
  std::vector<ConjClass> classes_;
  std::vector<std::uint32_t> class_of_;
};

inline ConjClassTable conjugacy_classes(const Group &g) { return ConjClassTable(g); }

// ---------------------------------------------------------------------------
// Derived series

inline Subgroup derived_subgroup(const Group &g)
{
  std::vector<Perm> comms;
  auto const &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  }
  return normal_closure(g, comms);
}

struct SeriesReport
{
  std::vector<std::uint64_t> derived_orders; // |G|, |G'|, |G''|, ... until stable
  bool soluble = false;
  std::optional<std::uint64_t> fitting_order;
  std::map<std::uint64_t, std::uint64_t> p_core_orders;
};

/// Derived series G = G0 > G1 > ... down to the first repeated term.
inline std::vector<Group> derived_series(const Group &g)
{
  std::vector<Group> series{g};
  for (;;) {
    Group next = derived_subgroup(series.back()).group();
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

inline bool is_soluble(const Group &g) { return derived_series(g).back().order() == 1; }

// ---------------------------------------------------------------------------
// Sylow subgroups, p-cores, Fitting subgroup

/**
 * Sylow p-subgroup by normalizer ascent: start from the cyclic group of the
 * first element of order p and repeatedly adjoin the first p-element of
 * the normalizer that is not yet in the current p-subgroup.
 */
inline Subgroup sylow_subgroup(const Group &g, std::uint64_t p)
{
  require_prime(p);
  auto const &elems = g.elements();
  std::uint64_t target = p_part(g.order(), p);
  if (target == 1)
    return Subgroup(g, Group::trivial(g.degree(), g.limits()));
  if (target == g.order())
    return whole(g);

  std::optional<Perm> first;
  for (auto const &e : elems) {
    if (element_order(e) == p) {
      first = e;
      break;
    }
  }
  Subgroup cur = closure(g, std::vector<Perm>{*first});
  while (cur.order() < target) {
    Subgroup norm = normalizer(g, cur.group());
    std::optional<Perm> ext;
    for (auto const &e : norm.group().elements()) {
      if (!e.is_identity() && is_p_element(e, p) && !cur.group().contains(e)) {
        ext = e;
        break;
      }
    }
    if (!ext)
      throw Error("normalizer ascent stalled below the Sylow order");
    std::vector<Perm> gens = cur.group().generators();
    gens.push_back(*ext);
    cur = closure(g, gens);
  }
  return cur;
}

/**
 * Intersection of all conjugates of a Sylow p-subgroup P, computed as the
 * largest subset of P mapped into itself by conjugation with every
 * generator of G.
 */
inline Subgroup p_core(const Group &g, std::uint64_t p)
{
  require_prime(p);
  Group core = g.cached("p_core:" + std::to_string(p), [&] {
    Subgroup sylow = sylow_subgroup(g, p);
    if (sylow.order() == 1 || sylow.order() == g.order())
      return sylow.group();
    std::vector<Perm> survivors = sylow.group().elements().elements();
    for (bool changed = true; changed && survivors.size() > 1;) {
      std::vector<Perm> keep;
      for (auto const &s : survivors) {
        bool stays = std::all_of(g.generators().begin(), g.generators().end(), [&](auto const &x) {
          return std::binary_search(survivors.begin(), survivors.end(), s.conjugated_by(x));
        });
        if (stays)
          keep.push_back(s);
      }
      changed = keep.size() != survivors.size();
      survivors = std::move(keep);
    }
    return closure(g, survivors).group();
  });
  return Subgroup(g, core);
}

/// Each Sylow subgroup normal and the Sylow orders multiply to |G|.
inline bool is_nilpotent(const Group &g)
{
  std::uint64_t product = 1;
  for (auto p : prime_divisors(g.order())) {
    Subgroup s = sylow_subgroup(g, p);
    if (!is_normal(g, s.group()))
      return false;
    product *= s.order();
  }
  return product == g.order();
}

/// Closure of the union of O_p(G) over the primes dividing |G|.
inline Subgroup fitting_subgroup(const Group &g)
{
  std::vector<Perm> gens;
  for (auto p : prime_divisors(g.order())) {
    Subgroup core = p_core(g, p);
    gens.insert(gens.end(), core.group().generators().begin(),
                core.group().generators().end());
  }
  Subgroup fit = closure(g, gens);
  if (!is_normal(fit) || !is_nilpotent(fit.group()))
    throw Error("Fitting subgroup failed its normal-and-nilpotent check");
  return fit;
}

inline SeriesReport series_report(const Group &g)
{
  SeriesReport rep;
  for (auto const &h : derived_series(g))
    rep.derived_orders.push_back(h.order());
  rep.soluble = rep.derived_orders.back() == 1;
  if (g.is_enumerable()) {
    for (auto p : prime_divisors(g.order()))
      rep.p_core_orders[p] = p_core(g, p).order();
    rep.fitting_order = fitting_subgroup(g).order();
  }
  return rep;
}

/// Abelian with every non-identity element of order p. The trivial group qualifies.
inline bool is_elementary_abelian(const Group &h, std::uint64_t p)
{
  require_prime(p);
  if (!h.is_abelian())
    return false;
  for (auto const &x : h.generators()) {
    auto ord = element_order(x);
    if (ord != 1 && ord != p)
      return false;
  }
  return true;
}

inline bool is_elementary_abelian(const Subgroup &h, std::uint64_t p)
{
  return is_elementary_abelian(h.group(), p);
}

// ---------------------------------------------------------------------------
// Frobenius groups

struct FrobeniusResult
{
  bool is_frobenius = false;
  std::string reason;                 // why the check failed, empty on success
  std::vector<Perm> kernel_elements;  // filled on success
  std::optional<Subgroup> kernel;     // closure of kernel_elements, verified
};

/**
 * Checks H n H^g = 1 for every g outside H. On success the kernel (identity
 * plus elements lying in no conjugate of H) is extracted as an element set
 * and then verified to be a subgroup of order |G:H|.
 */
inline FrobeniusResult is_frobenius_with_complement(const Group &g, const Group &h)
{
  FrobeniusResult res;
  std::uint64_t gorder = g.order();
  std::uint64_t horder = h.order();
  if (horder <= 1 || horder >= gorder) {
    res.reason = "complement must be proper and non-trivial";
    return res;
  }
  for (auto const &x : h.generators()) {
    if (!g.contains(x))
      throw PreconditionError("complement is not a subgroup of the group");
  }

  auto const &gel = g.elements();
  std::vector<Perm> hnon;
  for (auto const &x : h.elements()) {
    if (!x.is_identity())
      hnon.push_back(x);
  }

  std::vector<bool> in_conjugate(gel.size(), false);
  for (auto const &w : gel) {
    bool outside = !h.contains(w);
    for (auto const &x : hnon) {
      Perm c = x.conjugated_by(w);
      if (outside && h.contains(c)) {
        res.reason = "H meets its conjugate by " + format_cycles(w) + " non-trivially";
        return res;
      }
      in_conjugate[*gel.find(c)] = true;
    }
  }

  for (std::size_t i = 0; i < gel.size(); ++i) {
    if (!in_conjugate[i])
      res.kernel_elements.push_back(gel[i]);
  }
  if (res.kernel_elements.size() != gorder / horder) {
    res.reason = "kernel has " + std::to_string(res.kernel_elements.size()) +
                 " elements, expected " + std::to_string(gorder / horder);
    res.kernel_elements.clear();
    return res;
  }
  Subgroup k = closure(g, res.kernel_elements);
  if (k.order() != res.kernel_elements.size()) {
    res.reason = "kernel element set is not closed under multiplication";
    res.kernel_elements.clear();
    return res;
  }
  res.kernel = std::move(k);
  res.is_frobenius = true;
  return res;
}

// ---------------------------------------------------------------------------
// Normal subsets

inline constexpr std::size_t kMaxNormalSubsetClasses = 12;

/// A non-empty union of conjugacy classes of elements of one prime order p.
class NormalSubset
{
public:
  NormalSubset(const ConjClassTable &table, std::vector<std::size_t> class_ids)
  : group_(table.group()), class_ids_(std::move(class_ids))
  {
    if (class_ids_.empty())
      throw PreconditionError("a normal subset must be non-empty");
    std::sort(class_ids_.begin(), class_ids_.end());
    class_ids_.erase(std::unique(class_ids_.begin(), class_ids_.end()), class_ids_.end());
    for (auto id : class_ids_) {
      if (id >= table.size())
        throw PreconditionError("class index " + std::to_string(id) + " out of range");
    }
    p_ = table[class_ids_.front()].element_order;
    if (!is_prime(p_))
      throw PreconditionError("class " + std::to_string(class_ids_.front()) +
                              " has element order " + std::to_string(p_) +
                              ", which is not prime");
    for (auto id : class_ids_) {
      if (table[id].element_order != p_)
        throw PreconditionError("classes of a normal subset must share one element order");
      representatives_.push_back(table[id].representative);
      for (auto idx : table[id].members)
        elements_.push_back(table.element(idx));
    }
    std::sort(elements_.begin(), elements_.end());
  }

  const Group &group() const { return group_; }
  const std::vector<std::size_t> &class_ids() const { return class_ids_; }
  std::uint64_t prime() const { return p_; }
  const std::vector<Perm> &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// One representative per class, in class-id order.
  const std::vector<Perm> &representatives() const { return representatives_; }

private:
  Group group_;
  std::vector<std::size_t> class_ids_;
  std::uint64_t p_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> representatives_;
};

/// Ids of the classes whose elements have order exactly p.
inline std::vector<std::size_t> classes_of_order(const ConjClassTable &table, std::uint64_t p)
{
  std::vector<std::size_t> res;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].element_order == p)
      res.push_back(i);
  }
  return res;
}

/**
 * Every non-empty union of order-p classes, ordered by the bitmask over
 * the order-p classes taken in class-id order.
 */
inline std::vector<NormalSubset> normal_subsets_of_order_p(const ConjClassTable &table,
                                                           std::uint64_t p)
{
  require_prime(p);
  auto ids = classes_of_order(table, p);
  if (ids.size() > kMaxNormalSubsetClasses)
    throw PreconditionError("group has " + std::to_string(ids.size()) + " classes of order " +
                            std::to_string(p) + "; at most " +
                            std::to_string(kMaxNormalSubsetClasses) + " are enumerated");
  std::vector<NormalSubset> res;
  for (std::uint32_t mask = 1; mask < (1u << ids.size()); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t b = 0; b < ids.size(); ++b) {
      if (mask & (1u << b))
        chosen.push_back(ids[b]);
    }
    res.emplace_back(table, std::move(chosen));
  }
  return res;
}

} // namespace classquare

#endif // CLASSQUARE_STRUCTURE_HPP
