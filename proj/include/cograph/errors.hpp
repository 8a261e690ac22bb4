#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cograph {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A size or work cap was exceeded (dense graph ops, canonical forms, images).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised by recognition when a vertex set induces a connected graph whose
/// complement is also connected (so it contains an induced P4).
class NotACograph : public Error {
 public:
  explicit NotACograph(std::vector<int> vertices);
  const std::vector<int>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<int> vertices_;
};

class DisconnectedInput : public Error {
 public:
  using Error::Error;
};

/// The truncated series is too short for the requested numeric computation.
class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

/// A rejection sampler hit its configured attempt cap.
class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cograph
