#pragma once

#include <stdexcept>
#include <string>

namespace camonoid {

/// Process exit codes used by the command-line front end.
enum class ExitCode : int {
  ok = 0,
  input = 1,     // malformed input or violated precondition
  guard = 2,     // an enumeration or closure guard was exceeded
  internal = 3,  // a library invariant failed to hold
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual ExitCode exit_code() const noexcept = 0;
};

class InputError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::input; }
};

class GuardError : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::guard; }
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
  ExitCode exit_code() const noexcept override { return ExitCode::internal; }
};

#define CAMONOID_DEFINE_ERROR(Name, Base) \
  class Name : public Base {              \
   public:                                \
    using Base::Base;                     \
  };

CAMONOID_DEFINE_ERROR(MalformedSpec, InputError)
CAMONOID_DEFINE_ERROR(NotAGroup, InputError)
CAMONOID_DEFINE_ERROR(BadTableLength, InputError)
CAMONOID_DEFINE_ERROR(NotEquivariant, InputError)
CAMONOID_DEFINE_ERROR(StabilizerNotDominated, InputError)
CAMONOID_DEFINE_ERROR(SameOrbit, InputError)
CAMONOID_DEFINE_ERROR(ClassMismatch, InputError)
CAMONOID_DEFINE_ERROR(NotAbelian, InputError)
CAMONOID_DEFINE_ERROR(SpaceTooLarge, GuardError)
CAMONOID_DEFINE_ERROR(CapExceeded, GuardError)

#undef CAMONOID_DEFINE_ERROR

}  // namespace camonoid
