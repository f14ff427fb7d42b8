#ifndef CLASSQUARE_GROUP_HPP
#define CLASSQUARE_GROUP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "perm.hpp"
#include "stab_chain.hpp"

namespace classquare
{

struct Limits
{
  std::size_t max_degree = kDefaultMaxDegree;
  std::uint64_t enumeration_bound = 200000;
};

/// Every element of a group, sorted by image array, with an index lookup.
class ElementSet
{
public:
  ElementSet() = default;

  explicit ElementSet(std::vector<Perm> elements)
  : elements_(std::move(elements))
  {
    std::sort(elements_.begin(), elements_.end());
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  }

  std::size_t size() const { return elements_.size(); }
  const Perm &operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const std::vector<Perm> &elements() const { return elements_; }

  std::optional<std::uint32_t> find(const Perm &x) const
  {
    auto it = index_.find(x);
    if (it == index_.end())
      return std::nullopt;
    return it->second;
  }

  bool contains(const Perm &x) const { return index_.count(x) != 0; }

private:
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

/**
 * A permutation group given by generators. The stabilizer chain and the
 * element list are built on first use; both builds are synchronized, so a
 * Group may be shared between threads. Copies share the cached state.
 */
class Group
{
public:
  Group(std::size_t degree, std::vector<Perm> generators, Limits limits = {})
  : state_(std::make_shared<State>())
  {
    if (degree == 0 || degree > limits.max_degree)
      throw DegreeError("group degree " + std::to_string(degree) +
                        " outside [1, " + std::to_string(limits.max_degree) + "]");
    for (auto const &g : generators) {
      if (g.degree() != degree)
        throw DegreeError("generator of degree " + std::to_string(g.degree()) +
                          " in a group of degree " + std::to_string(degree));
    }
    state_->degree = degree;
    state_->generators = std::move(generators);
    state_->limits = limits;
  }

  static Group trivial(std::size_t degree, Limits limits = {})
  {
    return Group(degree, {}, limits);
  }

  std::size_t degree() const { return state_->degree; }
  const std::vector<Perm> &generators() const { return state_->generators; }
  const Limits &limits() const { return state_->limits; }
  Perm identity() const { return Perm(degree()); }

  const StabChain &chain() const
  {
    std::call_once(state_->chain_once, [this] {
      state_->chain = std::make_unique<StabChain>(state_->degree, state_->generators);
    });
    return *state_->chain;
  }

  std::uint64_t order() const { return chain().order(); }

  bool contains(const Perm &x) const { return chain().contains(x); }

  bool is_enumerable() const { return order() <= limits().enumeration_bound; }

  void require_enumerable() const
  {
    if (!is_enumerable())
      throw BoundExceeded(order(), limits().enumeration_bound);
  }

  /// All elements, lexicographically sorted. Throws BoundExceeded above the bound.
  const ElementSet &elements() const
  {
    require_enumerable();
    std::call_once(state_->elements_once, [this] {
      auto const &ch = chain();
      std::vector<Perm> all;
      all.reserve(static_cast<std::size_t>(ch.order()));
      std::vector<std::size_t> digits(ch.depth(), 0);
      for (;;) {
        all.push_back(ch.element_from_digits(digits));
        std::size_t l = 0;
        while (l < digits.size() && ++digits[l] == ch.level(l).orbit.size())
          digits[l++] = 0;
        if (l == digits.size())
          break;
      }
      state_->elements = std::make_unique<ElementSet>(std::move(all));
    });
    return *state_->elements;
  }

  template<typename RNG>
  Perm random_element(RNG &rng) const { return chain().random_element(rng); }

  bool is_trivial() const { return order() == 1; }

  bool is_abelian() const
  {
    auto const &gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (gens[i] * gens[j] != gens[j] * gens[i])
          return false;
      }
    }
    return true;
  }

  /**
   * Group cached on the shared state under `key`. `make` runs without the
   * lock held; when two threads race, the first stored result wins.
   */
  template<typename F>
  Group cached(const std::string &key, F &&make) const
  {
    {
      std::lock_guard lock(state_->cache_mutex);
      auto it = state_->cache.find(key);
      if (it != state_->cache.end())
        return it->second;
    }
    Group made = make();
    std::lock_guard lock(state_->cache_mutex);
    return state_->cache.try_emplace(key, std::move(made)).first->second;
  }

private:
  struct State
  {
    std::size_t degree = 0;
    std::vector<Perm> generators;
    Limits limits;
    std::once_flag chain_once;
    std::unique_ptr<StabChain> chain;
    std::once_flag elements_once;
    std::unique_ptr<ElementSet> elements;
    std::mutex cache_mutex;
    std::map<std::string, Group> cache;
  };

  std::shared_ptr<State> state_;
};

/// A group together with the group containing it.
class Subgroup
{
public:
  Subgroup(Group parent, Group group)
  : parent_(std::move(parent)), group_(std::move(group))
  {
    if (group_.degree() != parent_.degree())
      throw DegreeError("subgroup degree differs from parent degree");
    for (auto const &g : group_.generators()) {
      if (!parent_.contains(g))
        throw PreconditionError("subgroup generator " + format_cycles(g) +
                                " is not in the parent group");
    }
    if (parent_.order() % group_.order() != 0)
      throw Error("Lagrange violated: subgroup order " + std::to_string(group_.order()) +
                  " does not divide " + std::to_string(parent_.order()));
  }

  const Group &group() const { return group_; }
  const Group &parent() const { return parent_; }
  std::uint64_t order() const { return group_.order(); }
  std::uint64_t index() const { return parent_.order() / group_.order(); }

private:
  Group parent_;
  Group group_;
};

namespace detail
{

inline void require_same_degree(const Group &g, const Perm &x)
{
  if (x.degree() != g.degree())
    throw DegreeError("element of degree " + std::to_string(x.degree()) +
                      " used with a group of degree " + std::to_string(g.degree()));
}

/// Greedy generating set for <seed>: keeps an element only if it enlarges the group.
template<typename Range>
Group close_over(std::size_t degree, const Range &seed, Limits limits,
                 std::uint64_t stop_at_order = 0)
{
  std::vector<Perm> gens;
  Group current(degree, {}, limits);
  for (auto const &s : seed) {
    if (stop_at_order != 0 && current.order() == stop_at_order)
      break;
    if (current.contains(s))
      continue;
    gens.push_back(s);
    current = Group(degree, gens, limits);
  }
  return current;
}

} // namespace detail

inline std::uint64_t group_order(const Group &g) { return g.order(); }

inline bool contains(const Group &g, const Perm &x)
{
  detail::require_same_degree(g, x);
  return g.contains(x);
}

inline const ElementSet &enumerate(const Group &g) { return g.elements(); }

/// Smallest subgroup of `parent` containing every element of `seed`.
template<typename Range = std::vector<Perm>>
Subgroup closure(const Group &parent, const Range &seed)
{
  for (auto const &s : seed) {
    detail::require_same_degree(parent, s);
    if (!parent.contains(s))
      throw PreconditionError("seed element " + format_cycles(s) + " is not in the group");
  }
  return Subgroup(parent, detail::close_over(parent.degree(), seed, parent.limits(),
                                             parent.order()));
}

inline Subgroup whole(const Group &g) { return Subgroup(g, g); }

/// True iff h^g lies in H for all generators h of H and g of G.
inline bool is_normal(const Group &g, const Group &h)
{
  for (auto const &x : h.generators()) {
    for (auto const &y : g.generators()) {
      if (!h.contains(x.conjugated_by(y)))
        return false;
    }
  }
  return true;
}

inline bool is_normal(const Subgroup &h) { return is_normal(h.parent(), h.group()); }

/// Smallest normal subgroup of G containing `seed`.
template<typename Range = std::vector<Perm>>
Subgroup normal_closure(const Group &g, const Range &seed)
{
  Subgroup n = closure(g, seed);
  for (;;) {
    std::vector<Perm> extra;
    for (auto const &x : n.group().generators()) {
      for (auto const &y : g.generators()) {
        Perm c = x.conjugated_by(y);
        if (!n.group().contains(c))
          extra.push_back(std::move(c));
      }
    }
    if (extra.empty())
      return n;
    std::vector<Perm> gens = n.group().generators();
    gens.insert(gens.end(), extra.begin(), extra.end());
    n = closure(g, gens);
  }
}

inline Subgroup centralizer(const Group &g, const Perm &x)
{
  detail::require_same_degree(g, x);
  std::vector<Perm> cent;
  for (auto const &e : g.elements()) {
    if (e * x == x * e)
      cent.push_back(e);
  }
  return closure(g, cent);
}

/// N_G(H) by filtering the elements of G.
inline Subgroup normalizer(const Group &g, const Group &h)
{
  std::vector<Perm> norm;
  for (auto const &e : g.elements()) {
    bool ok = true;
    for (auto const &x : h.generators()) {
      if (!h.contains(x.conjugated_by(e))) {
        ok = false;
        break;
      }
    }
    if (ok)
      norm.push_back(e);
  }
  return closure(g, norm);
}

/// Subgroup of G whose elements are exactly `elements` (assumed closed).
inline Subgroup subgroup_from_elements(const Group &g, const std::vector<Perm> &elements)
{
  return closure(g, elements);
}

inline Perm shift_points(const Perm &x, std::size_t offset, std::size_t degree)
{
  std::vector<Perm::point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Perm::point_type>(i);
  for (std::size_t i = 0; i < x.degree(); ++i)
    images[offset + i] = static_cast<Perm::point_type>(offset + x[i]);
  return Perm(std::move(images));
}

/// G x H acting on the disjoint union of their point sets.
inline Group direct_product(const Group &g, const Group &h)
{
  std::size_t degree = g.degree() + h.degree();
  if (degree > g.limits().max_degree)
    throw DegreeError("direct product degree " + std::to_string(degree) +
                      " exceeds the limit " + std::to_string(g.limits().max_degree));
  std::vector<Perm> gens;
  for (auto const &x : g.generators())
    gens.push_back(shift_points(x, 0, degree));
  for (auto const &x : h.generators())
    gens.push_back(shift_points(x, g.degree(), degree));
  return Group(degree, std::move(gens), g.limits());
}

/// G^copies acting on `copies` disjoint blocks.
inline Group direct_power(const Group &g, std::size_t copies)
{
  if (copies == 0)
    throw PreconditionError("direct power needs at least one copy");
  std::size_t degree = g.degree() * copies;
  if (degree > g.limits().max_degree)
    throw DegreeError("direct power degree " + std::to_string(degree) +
                      " exceeds the limit " + std::to_string(g.limits().max_degree));
  std::vector<Perm> gens;
  for (std::size_t c = 0; c < copies; ++c) {
    for (auto const &x : g.generators())
      gens.push_back(shift_points(x, c * g.degree(), degree));
  }
  return Group(degree, std::move(gens), g.limits());
}

/**
 * H wr C_p in its imprimitive action: p blocks of H's points, the base
 * group acting blockwise and a top p-cycle moving point j of block i to
 * point j of block i+1. Conjugating the base by the top cycle therefore
 * shifts coordinates as (h_1, ..., h_p) -> (h_p, h_1, ..., h_{p-1}).
 */
class WreathProduct
{
public:
  WreathProduct(Group h, std::uint64_t p)
  : base_(std::move(h)), p_(p)
  {
    require_prime(p);
    std::size_t degree = base_.degree() * p;
    if (degree > base_.limits().max_degree)
      throw DegreeError("wreath product degree " + std::to_string(degree) +
                        " exceeds the limit " + std::to_string(base_.limits().max_degree));

    std::vector<Perm::point_type> top(degree);
    for (std::size_t b = 0; b < p; ++b) {
      for (std::size_t j = 0; j < base_.degree(); ++j)
        top[b * base_.degree() + j] =
          static_cast<Perm::point_type>(((b + 1) % p) * base_.degree() + j);
    }
    top_ = Perm(std::move(top));

    std::vector<Perm> gens;
    for (auto const &x : base_.generators())
      gens.push_back(shift_points(x, 0, degree));
    gens.push_back(top_);
    group_ = Group(degree, std::move(gens), base_.limits());
  }

  const Group &group() const { return *group_; }
  const Group &factor() const { return base_; }
  std::uint64_t prime() const { return p_; }

  /// The top p-cycle permuting the blocks.
  const Perm &top_cycle() const { return top_; }

  /// Base-group element with coordinates h[0], ..., h[p-1].
  Perm base_element(const std::vector<Perm> &coords) const
  {
    if (coords.size() != p_)
      throw PreconditionError("base element needs one coordinate per block");
    Perm res(group_->degree());
    for (std::size_t b = 0; b < p_; ++b)
      res *= shift_points(coords[b], b * base_.degree(), group_->degree());
    return res;
  }

  /// Base group H^p as a subgroup of the wreath product.
  Subgroup base_group() const
  {
    std::vector<Perm> gens;
    for (std::size_t b = 0; b < p_; ++b) {
      for (auto const &x : base_.generators())
        gens.push_back(shift_points(x, b * base_.degree(), group_->degree()));
    }
    return Subgroup(*group_, Group(group_->degree(), std::move(gens), base_.limits()));
  }

private:
  Group base_;
  std::uint64_t p_;
  Perm top_;
  std::optional<Group> group_;
};

inline Group wreath_product(const Group &h, std::uint64_t p)
{
  return WreathProduct(h, p).group();
}

/**
 * G acting on the right cosets of a normal subgroup N. Cosets are numbered
 * in breadth-first order of discovery from N itself under the generators
 * of G. Requires N to be enumerable.
 */
class QuotientMap
{
public:
  QuotientMap(Group g, Group n)
  : source_(std::move(g)), kernel_(std::move(n))
  {
    if (!is_normal(source_, kernel_))
      throw PreconditionError("quotient by a subgroup that is not normal");
    for (auto const &x : kernel_.generators()) {
      if (!source_.contains(x))
        throw PreconditionError("quotient kernel is not contained in the group");
    }
    std::uint64_t index = source_.order() / kernel_.order();
    if (index > source_.limits().max_degree)
      throw DegreeError("quotient index " + std::to_string(index) +
                        " exceeds the degree limit " +
                        std::to_string(source_.limits().max_degree));

    reps_.push_back(source_.identity());
    keys_.emplace(coset_key(reps_[0]), 0);
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      for (auto const &s : source_.generators()) {
        Perm next = reps_[k] * s;
        if (keys_.emplace(coset_key(next), static_cast<std::uint32_t>(reps_.size())).second)
          reps_.push_back(std::move(next));
      }
    }

    std::vector<Perm> images;
    for (auto const &s : source_.generators())
      images.push_back(image_of(s));
    image_ = Group(reps_.size(), images, source_.limits());

    auto const &gens = source_.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (image_of(gens[i] * gens[j]) != images[i] * images[j])
          throw Error("coset action is not a homomorphism");
      }
    }
  }

  const Group &source() const { return source_; }
  const Group &kernel() const { return kernel_; }
  const Group &image() const { return *image_; }
  const std::vector<Perm> &coset_representatives() const { return reps_; }

  /// Permutation of cosets induced by right multiplication by g.
  Perm image_of(const Perm &g) const
  {
    std::vector<Perm::point_type> images(reps_.size());
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      auto it = keys_.find(coset_key(reps_[k] * g));
      if (it == keys_.end())
        throw PreconditionError("element is not in the quotient's source group");
      images[k] = static_cast<Perm::point_type>(it->second);
    }
    return Perm(std::move(images));
  }

private:
  Perm coset_key(const Perm &g) const
  {
    auto const &elems = kernel_.elements();
    Perm best = elems[0] * g;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      Perm cand = elems[i] * g;
      if (cand < best)
        best = std::move(cand);
    }
    return best;
  }

  Group source_;
  Group kernel_;
  std::vector<Perm> reps_;
  std::unordered_map<Perm, std::uint32_t, PermHash> keys_;
  std::optional<Group> image_;
};

inline QuotientMap quotient_by(const Group &g, const Subgroup &n)
{
  return QuotientMap(g, n.group());
}

} // namespace classquare

#endif // CLASSQUARE_GROUP_HPP
