#pragma once

#include <stdexcept>
#include <string>

namespace knotvol {

// Input errors: malformed or non-realizable diagrams and violated
// preconditions. The CLI maps these to exit code 1.
struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : DiagramError {
  using DiagramError::DiagramError;
};

struct LabelError : DiagramError {
  using DiagramError::DiagramError;
};

struct OrientationError : DiagramError {
  using DiagramError::DiagramError;
};

struct RealizabilityError : DiagramError {
  using DiagramError::DiagramError;
};

struct DisconnectedError : DiagramError {
  using DiagramError::DiagramError;
};

struct MultiComponentError : DiagramError {
  using DiagramError::DiagramError;
};

struct PreconditionError : DiagramError {
  using DiagramError::DiagramError;
};

// A Seifert graph with a valency-1 circle was handed to the arc decomposition.
struct NugatoryPresentError : PreconditionError {
  using PreconditionError::PreconditionError;
};

// Raised by the arc decomposition when no Seifert circle meets three or more
// bands; the diagram is then a (2,2n) torus link or a closed 2-braid.
struct TorusTwoBridgeCase : DiagramError {
  using DiagramError::DiagramError;
};

// Internal invariant violations. These indicate a bug, never bad input;
// the CLI maps them to exit code 2.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParityError : InvariantError {
  using InvariantError::InvariantError;
};

struct InconsistencyError : InvariantError {
  using InvariantError::InvariantError;
};

}  // namespace knotvol
