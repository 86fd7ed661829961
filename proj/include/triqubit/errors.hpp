#pragma once

#include <stdexcept>
#include <string>

namespace triqubit {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an amplitude vector is numerically zero and cannot be
// normalized.
class ZeroStateError : public Error {
 public:
  explicit ZeroStateError(const std::string& what) : Error(what) {}
};

// Thrown when a 2x2 matrix fails the unitarity check.
class NonUnitaryError : public Error {
 public:
  explicit NonUnitaryError(const std::string& what) : Error(what) {}
};

// Thrown by the two-term decomposition when J4 vanishes (the state is not
// in the GHZ class and no such decomposition exists).
class NotGhzClassError : public Error {
 public:
  explicit NotGhzClassError(const std::string& what) : Error(what) {}
};

// Thrown when the three coefficients that must vanish in the symmetric form
// stay above tolerance after all optimizer retries.
class ResidualTooLargeError : public Error {
 public:
  explicit ResidualTooLargeError(const std::string& what) : Error(what) {}
};

// Thrown when invariant inputs lie outside their admissible ranges.
class RangeViolationError : public Error {
 public:
  explicit RangeViolationError(const std::string& what) : Error(what) {}
};

// Thrown by reality-based constructions when the state has no product basis
// with all-real coordinates.
class NotRealError : public Error {
 public:
  explicit NotRealError(const std::string& what) : Error(what) {}
};

// Thrown when the real-basis construction needs the two-term form but the
// state admits neither route.
class GhzFormRequiredError : public Error {
 public:
  explicit GhzFormRequiredError(const std::string& what) : Error(what) {}
};

// Thrown when a four-term construction is requested for a state that does
// not classify as type 4d.
class NotType4dError : public Error {
 public:
  explicit NotType4dError(const std::string& what) : Error(what) {}
};

// Thrown when a minimal decomposition ends up with more terms than the
// class admits.
class ClassMismatchError : public Error {
 public:
  explicit ClassMismatchError(const std::string& what) : Error(what) {}
};

// Thrown on malformed input files or schema mismatches.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

}  // namespace triqubit
