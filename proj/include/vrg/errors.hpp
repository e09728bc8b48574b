#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("not divisible") {}
};

class DegreeUndefined : public Error {
 public:
  DegreeUndefined() : Error("degree undefined for the zero polynomial") {}
};

/// Spec rejected before analysis (syntax, arity, homogeneity).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class NotFinite : public Error {
 public:
  NotFinite() : Error("extension not finite") {}
};

/// An identity that must hold for every finite graded extension failed.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

class ContractionNotPrincipal : public Error {
 public:
  using Error::Error;
};

class CharacterizationMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeCapExceeded : public Error {
 public:
  explicit DegreeCapExceeded(int cap);
};

class IoError : public Error {
 public:
  using Error::Error;
};

class DimensionExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace vrg
