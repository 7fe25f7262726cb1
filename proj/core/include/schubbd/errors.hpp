#pragma once

#include <stdexcept>
#include <string>

namespace schubbd {

struct NotAPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OddSignCountInTypeD : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TypeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidPosition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotCosetRepresentatives : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnmatchedNumber : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotClassifiable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotSymmetric : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct WrongSignature : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NegativeVNotSupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IncomparablePair : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct TypeDCase5Excluded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when the divided-difference oracle produces a non-integer
// constant; this always indicates a convention or implementation bug.
struct NonIntegerResult : std::logic_error {
  using std::logic_error::logic_error;
};

// Raised when the L-orbit lift encounters a K-edge from a connected
// orbit to a disconnected one, a pattern the weak-order description
// rules out.  It must surface, never be patched over.
struct ForbiddenSplitPattern : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace schubbd
