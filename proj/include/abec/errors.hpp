#pragma once

#include <stdexcept>
#include <string>

namespace abec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid or inconsistent code parameters. The message names the violated
// constraint.
struct ParamError : Error {
  using Error::Error;
};

struct FieldTooSmall : ParamError {
  using ParamError::ParamError;
};

struct ZeroInverse : Error {
  using Error::Error;
};

struct NotMember : Error {
  using Error::Error;
};

struct Uncovered : Error {
  using Error::Error;
};

struct NotPiggybacked : Error {
  using Error::Error;
};

struct NoClassBNodes : Error {
  using Error::Error;
};

struct NotSingleDataFailure : Error {
  using Error::Error;
};

struct NotParityNode : Error {
  using Error::Error;
};

struct AlreadyFailed : Error {
  using Error::Error;
};

struct Undecodable : Error {
  using Error::Error;
};

struct MissingParameter : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace abec
