#ifndef CLASSQUARE_ERROR_HPP
#define CLASSQUARE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace classquare
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle text or corpus record.
class ParseError : public Error
{
public:
  using Error::Error;
};

/// Operands act on different point sets, or a degree exceeds the limit.
class DegreeError : public Error
{
public:
  using Error::Error;
};

/// A group is too large for an operation that needs its full element list.
class BoundExceeded : public Error
{
public:
  BoundExceeded(std::uint64_t order, std::uint64_t bound)
  : Error("group order " + std::to_string(order) +
          " exceeds the enumeration bound " + std::to_string(bound)),
    order_(order), bound_(bound)
  {}

  std::uint64_t order() const { return order_; }
  std::uint64_t bound() const { return bound_; }

private:
  std::uint64_t order_;
  std::uint64_t bound_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

} // namespace classquare

#endif // CLASSQUARE_ERROR_HPP
