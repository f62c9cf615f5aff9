#pragma once

#include <stdexcept>
#include <string>

namespace cyclicsign {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class InvalidDimension : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class InvalidIndex : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Exact P-matrix enumeration refuses matrices above its size bound.
class SizeLimitExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Malformed matrix text, rational literal or unreadable file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that the theory guarantees was found broken.
// Seeing one of these means a bug in this library, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclicsign
