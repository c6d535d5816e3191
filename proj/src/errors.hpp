// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lathom {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON syntax, wrong shape).
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a semantic precondition: cover cycles,
// indices out of range, a composite field characteristic, unknown element
// labels, size caps.
struct SemanticError : Error {
  using Error::Error;
};

struct CycleError : SemanticError {
  using SemanticError::SemanticError;
};

struct SizeError : SemanticError {
  using SemanticError::SemanticError;
};

// A search exceeded its configured enumeration budget.
struct BudgetError : SemanticError {
  using SemanticError::SemanticError;
};

struct NotALatticeError : SemanticError {
  NotALatticeError(int a_, int b_, const std::string& reason_)
      : SemanticError("not a lattice: " + reason_), a(a_), b(b_), reason(reason_) {}
  int a, b;
  std::string reason;
};

struct NotDistributiveError : SemanticError {
  using SemanticError::SemanticError;
};

struct NotAnAntichainError : SemanticError {
  using SemanticError::SemanticError;
};

struct NotAnIdealError : SemanticError {
  using SemanticError::SemanticError;
};

// A family of vertex spaces and edge maps that fails path independence,
// i.e. two routes through the Hasse diagram compose to different maps.
struct PathIndependenceError : SemanticError {
  using SemanticError::SemanticError;
};

// A scalar presentation matrix has a nonzero entry between summands whose
// vertices are not comparable the right way round.
struct SupportError : SemanticError {
  using SemanticError::SemanticError;
};

// Internal invariant failures (resolution longer than the poset, shape
// mismatches).  Seeing one of these is a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace lathom
