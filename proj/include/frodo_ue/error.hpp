#pragma once

#include <stdexcept>
#include <string>

namespace frodo_ue {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownParamSet : public Error {
 public:
  explicit UnknownParamSet(const std::string& name) : Error("unknown parameter set: " + name) {}
};

class InvalidParamSet : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class EpochMismatch : public Error {
 public:
  using Error::Error;
};

/// No bit plane of the token separates the secret from the noise at these parameters.
class NoValidPlane : public Error {
 public:
  using Error::Error;
};

class MalformedEnvelope : public Error {
 public:
  using Error::Error;
};

}  // namespace frodo_ue
