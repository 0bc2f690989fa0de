#pragma once

#include <stdexcept>
#include <string>

namespace dlkb {

// Signals raised while reasoning.  IncoherentError means a concept has been
// found to denote NOTHING; InconsistentError means an A-box update contradicts
// the knowledge base; ResourceLimitError means a fixpoint loop exceeded its
// step budget.  All three unwind to the nearest declared handler (normalize,
// declare, or an assert transaction).  Redundancy is *not* an exception: the
// conjoin skeleton consumes it by skipping the term, and assert operations
// report it as a successful no-op.

class IncoherentError : public std::runtime_error {
 public:
  explicit IncoherentError(const std::string& what)
      : std::runtime_error(what) {}
};

class InconsistentError : public std::runtime_error {
 public:
  InconsistentError(const std::string& site, const std::string& what)
      : std::runtime_error(what), site_(site) {}
  const std::string& site() const { return site_; }

 private:
  std::string site_;
};

class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Raised by the parser; position is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Raised when a command refers to an undeclared identifier, redeclares an
// existing one, or uses an identifier in the wrong namespace.
class ScopeError : public std::runtime_error {
 public:
  explicit ScopeError(const std::string& what) : std::runtime_error(what) {}
};

// Step budget shared by one top-level operation.  Every conjoin step and
// blackboard task spends one unit.
class Budget {
 public:
  static constexpr long kDefault = 10000;

  explicit Budget(long steps = kDefault) : remaining_(steps) {}

  void spend(long n = 1) {
    remaining_ -= n;
    if (remaining_ < 0) {
      throw ResourceLimitError("step budget exceeded");
    }
  }
  long remaining() const { return remaining_; }

 private:
  long remaining_;
};

}  // namespace dlkb
