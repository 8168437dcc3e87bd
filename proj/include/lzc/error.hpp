#pragma once

#include <stdexcept>
#include <string>

namespace lzc {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

class CorruptStreamError : public Error {
 public:
  using Error::Error;
};

// Markov chain without a unique stationary distribution.
class DegenerateProcessError : public Error {
 public:
  using Error::Error;
};

}  // namespace lzc
