#ifndef CLASSQUARE_NUMERIC_HPP
#define CLASSQUARE_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace classquare
{

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

/// Distinct prime divisors in increasing order; empty for n <= 1.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      res.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p)
{
  std::uint64_t res = 1;
  while (n != 0 && n % p == 0) {
    n /= p;
    res *= p;
  }
  return res;
}

/// True iff n = p^k for some k >= 0 (so 1 qualifies).
inline bool is_power_of(std::uint64_t n, std::uint64_t p)
{
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t res;
  if (__builtin_mul_overflow(a, b, &res))
    throw Error("integer overflow in group order arithmetic");
  return res;
}

inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b)
{
  return checked_mul(a / std::gcd(a, b), b);
}

inline void require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
}

} // namespace classquare

#endif // CLASSQUARE_NUMERIC_HPP
