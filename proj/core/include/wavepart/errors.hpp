#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace wavepart {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a scalar argument (size, rank, budget, ...) failed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input data does not satisfy the axioms of the type it claims to be.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The numerical kernel could not produce a trustworthy result.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A relation that must hold mathematically was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Group axiom violated by a Cayley table. The first failing axiom is reported.
class GroupAxiomError : public ValidationError {
 public:
  enum class Axiom { kNotSquare, kEntryOutOfRange, kNotLatinSquare, kNoIdentity, kNotAssociative };

  GroupAxiomError(Axiom axiom, std::string message)
      : ValidationError(std::move(message)), axiom_(axiom) {}

  Axiom axiom() const noexcept { return axiom_; }

 private:
  Axiom axiom_;
};

const char* to_string(GroupAxiomError::Axiom axiom);

/// Representation matrices are not a unitary homomorphism of the group.
class RepError : public ValidationError {
 public:
  enum class Kind { kShape, kNonUnitary, kNonHomomorphism, kIdentityMismatch };

  RepError(Kind kind, std::string message, std::size_t first = 0, std::size_t second = 0)
      : ValidationError(std::move(message)), kind_(kind), first_(first), second_(second) {}

  Kind kind() const noexcept { return kind_; }
  /// Offending element (kNonUnitary) or first element of the offending pair.
  std::size_t element() const noexcept { return first_; }
  std::pair<std::size_t, std::size_t> pair() const noexcept { return {first_, second_}; }

 private:
  Kind kind_;
  std::size_t first_;
  std::size_t second_;
};

/// Matrix is not a density operator. deviation() is the measured violation.
class DensityError : public ValidationError {
 public:
  enum class Kind { kNotSquare, kNotHermitian, kBadTrace, kNotPositive };

  DensityError(Kind kind, std::string message, double deviation)
      : ValidationError(std::move(message)), kind_(kind), deviation_(deviation) {}

  Kind kind() const noexcept { return kind_; }
  double deviation() const noexcept { return deviation_; }

 private:
  Kind kind_;
  double deviation_;
};

}  // namespace wavepart
