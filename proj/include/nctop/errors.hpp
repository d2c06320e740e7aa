#pragma once

#include <stdexcept>
#include <string>

namespace nctop {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A multi-vertex quiver contains a directed cycle.
class CycleError : public Error {
 public:
  explicit CycleError(const std::string& msg) : Error(msg) {}
};

/// Quiver shape outside the supported classes (acyclic, single loop).
class UnsupportedShape : public Error {
 public:
  explicit UnsupportedShape(const std::string& msg) : Error(msg) {}
};

/// An enumeration or search exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// A composition factor is not split over F_p (one-loop model only).
class NonSplitFactor : public Error {
 public:
  explicit NonSplitFactor(const std::string& msg) : Error(msg) {}
};

/// quotient_action: image of the source subspace escapes the target subspace.
class NotInvariant : public Error {
 public:
  explicit NotInvariant(const std::string& msg) : Error(msg) {}
};

/// The supplied line does not span an embedded copy of the simple.
class NotEmbedding : public Error {
 public:
  explicit NotEmbedding(const std::string& msg) : Error(msg) {}
};

/// Contractibility was queried on a non-idempotent element.
class NotIdempotent : public Error {
 public:
  explicit NotIdempotent(const std::string& msg) : Error(msg) {}
};

/// A supplied family does not join to the top element.
class InvalidCover : public Error {
 public:
  explicit InvalidCover(const std::string& msg) : Error(msg) {}
};

/// Malformed input file or word string.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace nctop
