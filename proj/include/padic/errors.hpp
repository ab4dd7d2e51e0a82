#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all arithmetic/model errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error(what) {}
};

class PrimeMismatch : public Error {
 public:
  explicit PrimeMismatch(const std::string& what = "operands have different primes")
      : Error(what) {}
};

class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what = "relative precision exhausted")
      : Error(what) {}
};

/// Raised when a quantity is indistinguishable from zero at the working
/// precision, so its norm (and anything derived from it) is undecidable.
class ZeroAtPrecision : public Error {
 public:
  explicit ZeroAtPrecision(const std::string& what = "value is zero at working precision")
      : Error(what) {}
};

class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(const std::string& what, std::string exact_count)
      : Error(what), count(std::move(exact_count)) {}
  std::string count;  // exact cardinality, decimal string
};

class DegeneratePartitionFunction : public Error {
 public:
  explicit DegeneratePartitionFunction(const std::string& what = "partition function vanishes at precision")
      : Error(what) {}
};

class SingularRecursion : public Error {
 public:
  explicit SingularRecursion(const std::string& what = "recursion denominator vanishes")
      : Error(what) {}
};

class PoleEncountered : public Error {
 public:
  explicit PoleEncountered(const std::string& what = "map evaluated at a pole")
      : Error(what) {}
};

class NotAFixedPoint : public Error {
 public:
  explicit NotAFixedPoint(const std::string& what = "point is not fixed at working precision")
      : Error(what) {}
};

class RegimeMismatch : public Error {
 public:
  explicit RegimeMismatch(const std::string& what = "parameters violate the regime hypotheses")
      : Error(what) {}
};

class NotARecursionSolution : public Error {
 public:
  explicit NotARecursionSolution(const std::string& what = "field does not solve the boundary recursion")
      : Error(what) {}
};

class MeasureUndefined : public Error {
 public:
  explicit MeasureUndefined(const std::string& what = "no fixed point defines this measure")
      : Error(what) {}
};

}  // namespace padic
