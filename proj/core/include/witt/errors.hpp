#pragma once

#include <stdexcept>
#include <string>

namespace witt {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ZeroElement : Error {
  explicit ZeroElement(const std::string& what = "operation undefined on the zero element")
      : Error(what) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& what = "operands live over different fields")
      : Error(what) {}
};

struct SingularForm : Error {
  explicit SingularForm(const std::string& what = "singular Gram matrix") : Error(what) {}
};

struct NonInvertible : Error {
  explicit NonInvertible(const std::string& what = "element is not invertible") : Error(what) {}
};

struct UnsupportedAlgebraShape : Error {
  explicit UnsupportedAlgebraShape(const std::string& what) : Error(what) {}
};

struct NoReferenceTuple : Error {
  explicit NoReferenceTuple(const std::string& what = "no reference tuple found") : Error(what) {}
};

struct InvalidReferenceTuple : Error {
  explicit InvalidReferenceTuple(const std::string& what = "invalid reference tuple")
      : Error(what) {}
};

struct UndecidableSample : Error {
  explicit UndecidableSample(const std::string& what = "membership undecidable for a sample")
      : Error(what) {}
};

struct NotAMorphism : Error {
  explicit NotAMorphism(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Violation of an internal contract (certification scans, guard assertions).
struct InternalError : Error {
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace witt
