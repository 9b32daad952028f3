#ifndef SIMPERM_ERROR_HPP
#define SIMPERM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace simperm {

// Operands live in symmetric groups of different degree.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the operation's domain (bad block index, even Stefan order, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input is well formed but violates a documented precondition (e.g. not simple).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DisjointnessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal construction produced something its own invariants reject.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CostBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed text; token() is the offending piece of input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token)
      : std::invalid_argument(what), token_(std::move(token)) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace simperm

#endif  // SIMPERM_ERROR_HPP
