#pragma once

#include <stdexcept>
#include <string>

namespace permpoly {

/// Precondition violated by a caller-supplied argument (bad vertex, bad size).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is within contract but above a configured computation cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (graph6 text, polynomial text, stream lines).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permpoly
