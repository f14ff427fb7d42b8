#ifndef CLASSQUARE_TESTS_SUPPORT_HPP
#define CLASSQUARE_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "classquare/builtins.hpp"
#include "classquare/group.hpp"
#include "classquare/perm.hpp"

#include "oracle.hpp"

namespace support
{

/// Fisher-Yates over std::mt19937_64 output, identical on every platform.
inline classquare::Perm random_perm(std::size_t n, std::mt19937_64 &rng)
{
  std::vector<classquare::Perm::point_type> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<classquare::Perm::point_type>(i);
  for (std::size_t i = n; i > 1; --i)
    std::swap(im[i - 1], im[rng() % i]);
  return classquare::Perm(std::move(im));
}

/// Builtin corpus names whose groups have order at most `bound`.
inline std::vector<std::string> corpus_up_to(std::uint64_t bound)
{
  std::vector<std::string> res;
  for (auto const &name : classquare::default_corpus()) {
    if (classquare::builtin(name).order() <= bound)
      res.push_back(name);
  }
  return res;
}

inline oracle::Set oracle_group(const classquare::Group &g)
{
  return oracle::closure(g.degree(), oracle::raw(g.generators()));
}

inline oracle::Set as_set(const std::vector<classquare::Perm> &xs)
{
  oracle::Set res;
  for (auto const &x : xs)
    res.insert(oracle::raw(x));
  return res;
}

inline oracle::Set as_set(const classquare::Group &g) { return as_set(g.elements().elements()); }

} // namespace support

#endif // CLASSQUARE_TESTS_SUPPORT_HPP
