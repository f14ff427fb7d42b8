#ifndef CLASSQUARE_PERM_HPP
#define CLASSQUARE_PERM_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"

/**
 * @file perm.hpp
 * @brief Permutations of {1, ..., n}.
 *
 * Points are 0-based internally and 1-based in cycle text. Products are
 * read left to right: the image of i under x*y is y(x(i)), so that
 * i^(xy) = (i^x)^y and conjugation reads x^w = w^-1 x w.
 */

namespace classquare
{

inline constexpr std::size_t kDefaultMaxDegree = 1024;

class Perm
{
public:
  using point_type = std::uint16_t;

  /// Largest degree the point type can represent.
  static constexpr std::size_t max_degree() { return 0xffff; }

  Perm() = default;

  explicit Perm(std::size_t degree)
  : images_(degree)
  {
    if (degree > max_degree())
      throw DegreeError("degree " + std::to_string(degree) + " not representable");
    for (std::size_t i = 0; i < degree; ++i)
      images_[i] = static_cast<point_type>(i);
  }

  /// Takes 0-based images; throws unless they form a bijection.
  explicit Perm(std::vector<point_type> images)
  : images_(std::move(images))
  {
    std::vector<bool> seen(images_.size(), false);
    for (auto im : images_) {
      if (im >= images_.size() || seen[im])
        throw Error("image array is not a bijection");
      seen[im] = true;
    }
  }

  static Perm identity(std::size_t degree) { return Perm(degree); }

  std::size_t degree() const { return images_.size(); }

  point_type operator[](std::size_t i) const { return images_[i]; }

  std::span<const point_type> images() const { return images_; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i)
        return false;
    }
    return true;
  }

  /// Smallest moved point, or degree() for the identity.
  std::size_t smallest_moved_point() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i)
        return i;
    }
    return images_.size();
  }

  Perm operator*(const Perm &rhs) const
  {
    if (degree() != rhs.degree())
      throw DegreeError("cannot compose permutations of degree " +
                        std::to_string(degree()) + " and " +
                        std::to_string(rhs.degree()));
    Perm res;
    res.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      res.images_[i] = rhs.images_[images_[i]];
    return res;
  }

  Perm &operator*=(const Perm &rhs) { return *this = *this * rhs; }

  Perm operator~() const
  {
    Perm res;
    res.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      res.images_[images_[i]] = static_cast<point_type>(i);
    return res;
  }

  /// w^-1 * this * w.
  Perm conjugated_by(const Perm &w) const { return ~w * *this * w; }

  /// The same permutation on a larger point set, fixing the new points.
  Perm padded(std::size_t degree) const
  {
    if (degree < images_.size())
      throw DegreeError("cannot shrink a permutation by padding");
    Perm res(degree);
    std::copy(images_.begin(), images_.end(), res.images_.begin());
    return res;
  }

  /// Disjoint cycles of length >= 2, 0-based, each starting at its least point.
  std::vector<std::vector<std::size_t>> cycles() const
  {
    std::vector<std::vector<std::size_t>> res;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i)
        continue;
      std::vector<std::size_t> cyc;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      res.push_back(std::move(cyc));
    }
    return res;
  }

  /// Sorted lengths of all cycles, fixed points included.
  std::vector<std::size_t> cycle_type() const
  {
    std::vector<std::size_t> res;
    for_each_cycle_length([&](std::size_t len) {
      res.push_back(len);
      return true;
    });
    std::sort(res.begin(), res.end());
    return res;
  }

  /**
   * Calls f(len) for the length of every cycle, fixed points included,
   * until f returns false. Returns false iff f stopped the walk.
   */
  template<typename F>
  bool for_each_cycle_length(F &&f) const
  {
    constexpr std::size_t small = 256;
    bool stack_seen[small];
    std::vector<bool> heap_seen;
    auto n = images_.size();
    if (n <= small)
      std::fill_n(stack_seen, n, false);
    else
      heap_seen.assign(n, false);
    auto seen = [&](std::size_t i) { return n <= small ? stack_seen[i] : bool(heap_seen[i]); };
    auto mark = [&](std::size_t i) {
      if (n <= small)
        stack_seen[i] = true;
      else
        heap_seen[i] = true;
    };

    for (std::size_t i = 0; i < n; ++i) {
      if (seen(i))
        continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen(j); j = images_[j]) {
        mark(j);
        ++len;
      }
      if (!f(len))
        return false;
    }
    return true;
  }

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

private:
  std::vector<point_type> images_;
};

struct PermHash
{
  std::size_t operator()(const Perm &x) const noexcept
  {
    auto im = x.images();
    std::string_view bytes(reinterpret_cast<const char *>(im.data()),
                           im.size() * sizeof(Perm::point_type));
    return std::hash<std::string_view>{}(bytes);
  }
};

inline Perm compose(const Perm &x, const Perm &y) { return x * y; }

inline Perm inverse(const Perm &x) { return ~x; }

/// [x, y] = x^-1 y^-1 x y.
inline Perm commutator(const Perm &x, const Perm &y)
{
  return ~x * ~y * x * y;
}

/// x^k for k >= 0.
inline Perm power(const Perm &x, std::uint64_t k)
{
  Perm res(x.degree());
  Perm base = x;
  while (k > 0) {
    if (k & 1)
      res *= base;
    base *= base;
    k >>= 1;
  }
  return res;
}

inline std::uint64_t element_order(const Perm &x)
{
  std::uint64_t ord = 1;
  x.for_each_cycle_length([&](std::size_t len) {
    ord = checked_lcm(ord, len);
    return true;
  });
  return ord;
}

/// Order of xy, computed without forming the product.
inline std::uint64_t product_order(const Perm &x, const Perm &y)
{
  if (x.degree() != y.degree())
    throw DegreeError("cannot compose permutations of degree " + std::to_string(x.degree()) +
                      " and " + std::to_string(y.degree()));
  auto n = x.degree();
  if (n > 256)
    return element_order(x * y);
  bool seen[256] = {};
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = y[x[j]]) {
      seen[j] = true;
      ++len;
    }
    ord = checked_lcm(ord, len);
  }
  return ord;
}

/// True iff the order of x is a power of p; the identity qualifies.
inline bool is_p_element(const Perm &x, std::uint64_t p)
{
  require_prime(p);
  return x.for_each_cycle_length([p](std::size_t len) { return is_power_of(len, p); });
}

/**
 * Parses cycle text such as "(1,2,3)(4,5)" or "()" into a permutation of
 * the given degree. Whitespace is ignored.
 */
inline Perm parse_cycles(std::string_view text, std::size_t degree,
                         std::size_t max_degree = kDefaultMaxDegree)
{
  if (degree == 0 || degree > max_degree)
    throw DegreeError("degree " + std::to_string(degree) +
                      " outside [1, " + std::to_string(max_degree) + "]");

  std::vector<Perm::point_type> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<Perm::point_type>(i);
  std::vector<bool> used(degree, false);

  auto fail = [&](const std::string &what) {
    throw ParseError("cycle text \"" + std::string(text) + "\": " + what);
  };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    fail("empty text (use \"()\" for the identity)");

  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '(' at offset " + std::to_string(pos));
    ++pos;
    skip_ws();

    std::vector<std::size_t> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > 0xffffff)
          fail("point out of range");
        ++pos;
      }
      if (pos == start)
        fail("expected a point at offset " + std::to_string(pos));
      if (value < 1 || value > degree)
        fail("point " + std::to_string(value) + " out of range 1.." +
             std::to_string(degree));
      if (used[value - 1])
        fail("repeated point " + std::to_string(value));
      used[value - 1] = true;
      cycle.push_back(value - 1);

      skip_ws();
      if (pos == text.size())
        fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("unexpected character '" + std::string(1, text[pos]) + "'");
    }

    if (cycle.size() < 2)
      fail("cycle of length 1");
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Perm::point_type>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }

  return Perm(std::move(images));
}

inline std::string format_cycles(const Perm &x)
{
  auto cycs = x.cycles();
  if (cycs.empty())
    return "()";
  std::string res;
  for (auto const &cyc : cycs) {
    res += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i > 0)
        res += ',';
      res += std::to_string(cyc[i] + 1);
    }
    res += ')';
  }
  return res;
}

} // namespace classquare

#endif // CLASSQUARE_PERM_HPP
