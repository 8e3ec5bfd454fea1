#pragma once

#include <stdexcept>
#include <string>

namespace moonshine {

// Every failure raised by the library derives from Error so callers can
// catch the whole family in one place (the CLI maps them onto exit codes).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when the inputs describe data that cannot be consumed: malformed
// files, missing classes, actions that violate their declared order, etc.
class DataError : public Error {
public:
  using Error::Error;
};

// Raised for mathematically invalid requests (wrong prime, bad residue, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

#define MOONSHINE_DEFINE_ERROR(Name, Base)                                     \
  class Name : public Base {                                                   \
  public:                                                                      \
    using Base::Base;                                                          \
  };

// exactlinalg
MOONSHINE_DEFINE_ERROR(ContainmentError, DomainError)
MOONSHINE_DEFINE_ERROR(InfiniteQuotientError, DomainError)
// cyclotomic
MOONSHINE_DEFINE_ERROR(ModulusMismatch, DomainError)
MOONSHINE_DEFINE_ERROR(DivisionByZero, DomainError)
MOONSHINE_DEFINE_ERROR(NotRational, DomainError)
// tate
MOONSHINE_DEFINE_ERROR(OrderError, DataError)
MOONSHINE_DEFINE_ERROR(NotPreserved, DataError)
// brauer
MOONSHINE_DEFINE_ERROR(NotAFactor, DomainError)
// qseries
MOONSHINE_DEFINE_ERROR(Mod24Error, DataError)
MOONSHINE_DEFINE_ERROR(UnknownClass, DataError)
MOONSHINE_DEFINE_ERROR(NormalizationError, DataError)
MOONSHINE_DEFINE_ERROR(MissingSigma, DomainError)
// leech
MOONSHINE_DEFINE_ERROR(ConstructionError, DataError)
MOONSHINE_DEFINE_ERROR(AxiomError, DataError)
MOONSHINE_DEFINE_ERROR(NotFound, DataError)
MOONSHINE_DEFINE_ERROR(NotAnAutomorphism, DataError)

#undef MOONSHINE_DEFINE_ERROR

// Text-format failure; carries the 1-based line number of the offending line.
class ParseError : public DataError {
public:
  ParseError(const std::string &what, int line)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace moonshine
