#pragma once

#include <stdexcept>
#include <string>

namespace grouplat {

// Base of every library error. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input.
class InputError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  using InputError::InputError;
};

class CycleError : public InputError {
public:
  using InputError::InputError;
};

class DuplicateLabel : public InputError {
public:
  using InputError::InputError;
};

class UnknownElement : public InputError {
public:
  using InputError::InputError;
};

class NotALattice : public InputError {
public:
  NotALattice(std::string msg, std::size_t a, std::size_t b)
      : InputError(std::move(msg)), first(a), second(b) {}
  std::size_t first;
  std::size_t second;
};

class ImproperElement : public InputError {
public:
  using InputError::InputError;
};

class NotAnAntichain : public InputError {
public:
  using InputError::InputError;
};

class EmptySummand : public InputError {
public:
  using InputError::InputError;
};

class NotASubcomplex : public InputError {
public:
  using InputError::InputError;
};

class MeetUnavailable : public InputError {
public:
  using InputError::InputError;
};

// Boundary matrices do not compose to zero.
class InvalidComplex : public Error {
public:
  using Error::Error;
};

class OrderCapExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace grouplat
