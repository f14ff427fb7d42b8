#ifndef CLASSQUARE_CLASS_ALGEBRA_HPP
#define CLASSQUARE_CLASS_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "perm.hpp"
#include "structure.hpp"

namespace classquare
{

struct ClassMultCoefficient
{
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::uint64_t count = 0;
};

/**
 * Number of pairs (x, y) in C_i x C_j with xy = z, for the given z in C_k.
 * Iterates x over C_i and looks up the class of x^-1 z.
 */
inline std::uint64_t class_mult_count(const ConjClassTable &table, std::size_t i,
                                      std::size_t j, const Perm &z)
{
  if (i >= table.size() || j >= table.size())
    throw PreconditionError("class index out of range");
  auto const &elems = table.group().elements();
  std::uint64_t count = 0;
  for (auto idx : table[i].members) {
    auto y = elems.find(~elems[idx] * z);
    if (table.class_of_index(*y) == j)
      ++count;
  }
  return count;
}

inline ClassMultCoefficient class_mult_coefficient(const ConjClassTable &table, std::size_t i,
                                                   std::size_t j, std::size_t k)
{
  if (k >= table.size())
    throw PreconditionError("class index out of range");
  return {i, j, k, class_mult_count(table, i, j, table[k].representative)};
}

struct ClassSquareResult
{
  /// True iff every class of odd prime order p has a non-p-element in its square.
  bool passed = true;
  std::vector<std::size_t> tested;    // classes of odd prime element order
  std::vector<std::size_t> offending; // tested classes whose square consists of p-elements
};

/**
 * For each class C of odd prime order p, collects the classes K whose
 * elements are not p-elements and records C as offending when every such
 * K has coefficient (C, C, K) = 0. The identity counts as a p-element.
 */
inline ClassSquareResult appendix_class_square_test(const ConjClassTable &table)
{
  ClassSquareResult res;
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto ord = table[i].element_order;
    if (!is_prime(ord) || ord == 2)
      continue;
    res.tested.push_back(i);

    std::vector<std::size_t> non_p;
    for (std::size_t k = 0; k < table.size(); ++k) {
      if (!is_power_of(table[k].element_order, ord))
        non_p.push_back(k);
    }
    bool square_is_pure = true;
    for (auto k : non_p) {
      if (class_mult_coefficient(table, i, i, k).count != 0) {
        square_is_pure = false;
        break;
      }
    }
    if (square_is_pure)
      res.offending.push_back(i);
  }
  res.passed = res.offending.empty();
  return res;
}

} // namespace classquare

#endif // CLASSQUARE_CLASS_ALGEBRA_HPP
