#pragma once

#include <stdexcept>
#include <string>

namespace zagreb {

/// Base of every error the engine raises. Callers that only need to report
/// a failure catch this; the CLI maps it to exit status 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class IsolatedVertexError : public Error {
public:
  using Error::Error;
};

class SizeLimitError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

class NotATreeError : public Error {
public:
  using Error::Error;
};

class NotBipartiteError : public Error {
public:
  using Error::Error;
};

class NotConnectedError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class InvalidGraphError : public Error {
public:
  using Error::Error;
};

/// Raised when a closed-form bound comes out odd before halving.
class NonIntegralError : public Error {
public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed. Always a bug.
class InternalInconsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace zagreb
