#ifndef CLASSQUARE_STAB_CHAIN_HPP
#define CLASSQUARE_STAB_CHAIN_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "numeric.hpp"
#include "perm.hpp"

/**
 * @file stab_chain.hpp
 * @brief Deterministic Schreier-Sims.
 *
 * Base points are chosen as the smallest point moved by the element that
 * forces a new level. Every Schreier generator is sifted, so the chain is
 * exact and its shape depends only on the input generator order.
 */

namespace classquare
{

class StabChain
{
public:
  struct Level
  {
    std::size_t base_point;
    std::vector<Perm> generators;       // strong generators fixing earlier base points
    std::vector<std::size_t> orbit;     // orbit of base_point, discovery order
    std::vector<std::int32_t> position; // point -> index into orbit, -1 if absent
    std::vector<Perm> transversal;      // transversal[k] maps base_point to orbit[k]
  };

  StabChain() = default;

  StabChain(std::size_t degree, const std::vector<Perm> &generators)
  : degree_(degree)
  {
    for (auto const &g : generators) {
      if (g.degree() != degree)
        throw DegreeError("generator degree does not match group degree");
      if (!g.is_identity() &&
          std::find(strong_.begin(), strong_.end(), g) == strong_.end())
        strong_.push_back(g);
    }
    build();
  }

  std::size_t degree() const { return degree_; }

  std::size_t depth() const { return levels_.size(); }

  const Level &level(std::size_t i) const { return levels_[i]; }

  std::vector<std::size_t> base() const
  {
    std::vector<std::size_t> res;
    for (auto const &lvl : levels_)
      res.push_back(lvl.base_point);
    return res;
  }

  const std::vector<Perm> &strong_generators() const { return strong_; }

  std::uint64_t order() const
  {
    std::uint64_t res = 1;
    for (auto const &lvl : levels_)
      res = checked_mul(res, lvl.orbit.size());
    return res;
  }

  /// Sifts g from level `start`; returns the residue and the level it stopped at.
  std::pair<Perm, std::size_t> sift(Perm g, std::size_t start = 0) const
  {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      auto const &lvl = levels_[l];
      std::size_t beta = g[lvl.base_point];
      auto pos = lvl.position[beta];
      if (pos < 0)
        return {std::move(g), l};
      g *= ~lvl.transversal[static_cast<std::size_t>(pos)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Perm &g) const
  {
    if (g.degree() != degree_)
      throw DegreeError("membership test with mismatched degree");
    return sift(g).first.is_identity();
  }

  /**
   * The element with transversal choices `digits` (one per level, deepest
   * first in the product). Every element arises exactly once.
   */
  Perm element_from_digits(const std::vector<std::size_t> &digits) const
  {
    Perm res(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;)
      res *= levels_[l].transversal[digits[l]];
    return res;
  }

  template<typename RNG>
  Perm random_element(RNG &rng) const
  {
    Perm res(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::uniform_int_distribution<std::size_t> pick(0, levels_[l].orbit.size() - 1);
      res *= levels_[l].transversal[pick(rng)];
    }
    return res;
  }

private:
  static bool fixes_prefix(const Perm &g, const std::vector<std::size_t> &base, std::size_t n)
  {
    for (std::size_t i = 0; i < n; ++i) {
      if (g[base[i]] != base[i])
        return false;
    }
    return true;
  }

  void refresh_level(std::size_t i, const std::vector<std::size_t> &base)
  {
    Level &lvl = levels_[i];
    lvl.base_point = base[i];
    lvl.generators.clear();
    for (auto const &s : strong_) {
      if (fixes_prefix(s, base, i))
        lvl.generators.push_back(s);
    }

    lvl.orbit.assign(1, lvl.base_point);
    lvl.position.assign(degree_, -1);
    lvl.position[lvl.base_point] = 0;
    lvl.transversal.assign(1, Perm(degree_));
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      for (auto const &s : lvl.generators) {
        std::size_t img = s[lvl.orbit[k]];
        if (lvl.position[img] >= 0)
          continue;
        lvl.position[img] = static_cast<std::int32_t>(lvl.orbit.size());
        lvl.orbit.push_back(img);
        lvl.transversal.push_back(lvl.transversal[k] * s);
      }
    }
  }

  void build()
  {
    if (strong_.empty())
      return;

    std::vector<std::size_t> base;
    for (auto const &s : strong_) {
      if (fixes_prefix(s, base, base.size()))
        base.push_back(s.smallest_moved_point());
    }
    levels_.resize(base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      refresh_level(i, base);

    std::size_t i = base.size();
    while (i-- > 0) {
    restart:
      bool extended = false;
      Level &lvl = levels_[i];
      for (std::size_t k = 0; k < lvl.orbit.size() && !extended; ++k) {
        for (std::size_t si = 0; si < lvl.generators.size(); ++si) {
          auto const &s = lvl.generators[si];
          std::size_t img = s[lvl.orbit[k]];
          auto const &u_img = lvl.transversal[static_cast<std::size_t>(lvl.position[img])];
          Perm schreier = lvl.transversal[k] * s * ~u_img;
          if (schreier.is_identity())
            continue;

          auto [residue, j] = sift(std::move(schreier), i + 1);
          if (residue.is_identity())
            continue;

          if (j == levels_.size()) {
            base.push_back(residue.smallest_moved_point());
            levels_.emplace_back();
          }
          strong_.push_back(std::move(residue));
          for (std::size_t l = i + 1; l <= j; ++l)
            refresh_level(l, base);
          i = j;
          extended = true;
          break;
        }
      }
      if (extended)
        goto restart;
      if (i > 0)
        refresh_level(i - 1, base);
    }
  }

  std::size_t degree_ = 0;
  std::vector<Perm> strong_;
  std::vector<Level> levels_;
};

} // namespace classquare

#endif // CLASSQUARE_STAB_CHAIN_HPP
