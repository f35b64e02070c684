#pragma once

#include <stdexcept>
#include <string>

namespace sincprod {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the domain of a function or identity (pole, non-positive
// Gamma argument, |a| >= 1 for the eta/zeta series, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument is an exact multiple of pi; the regular product formula does not
// apply and the caller should use one of the exceptional-case identities.
class ExceptionalPoint : public DomainError {
 public:
  ExceptionalPoint(const std::string& what, std::string redirect)
      : DomainError(what), redirect_(std::move(redirect)) {}

  const std::string& redirect() const { return redirect_; }

 private:
  std::string redirect_;
};

// Failure inside a user-supplied callable (funceq's g).
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace sincprod
