#pragma once

#include <stdexcept>
#include <string>

namespace rqn {

// Base for every error the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. The CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError { using InputError::InputError; };
struct SchemaError : InputError { using InputError::InputError; };
struct DimensionMismatch : InputError { using InputError::InputError; };
struct MissingVariable : InputError { using InputError::InputError; };
struct NotFound : InputError { using InputError::InputError; };
struct AlgebraMismatch : InputError { using InputError::InputError; };
struct ParameterizedAlgebra : InputError { using InputError::InputError; };

// Mathematical rejections of well-formed input.
struct JacobiViolation : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct NotAutomorphism : Error { using Error::Error; };
struct NotAnRMatrix : Error { using Error::Error; };
struct InconsistentSlices : Error { using Error::Error; };
struct PreconditionFailed : Error { using Error::Error; };

}  // namespace rqn
