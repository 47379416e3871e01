#pragma once

#include <stdexcept>
#include <string>

namespace udn {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
  using Error::Error;
};

// A nearest-neighbor style query had nothing to choose from.
class NoCandidate : public Error {
public:
  using Error::Error;
};

class InvalidState : public Error {
public:
  using Error::Error;
};

// Input drives a closed-form expression to infinity.
class DivergentInput : public Error {
public:
  using Error::Error;
};

class NoInteriorMinimum : public Error {
public:
  using Error::Error;
};

class Unattainable : public Error {
public:
  using Error::Error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidParameter(what);
}

}  // namespace detail
}  // namespace udn
