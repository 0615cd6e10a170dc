#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twodist {

// Input that violates a documented precondition (bad ids, bad params,
// unsatisfied list sizes, ...). The CLI maps it to exit status 2.
class RejectedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive routine was asked to run past its size limit.
class SizeLimitExceeded : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

class ParseError : public RejectedInput {
 public:
  ParseError(std::size_t line, const std::string& what)
      : RejectedInput("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The random generator could not meet its targets within its retry budget.
class GenerationFailure : public RejectedInput {
 public:
  using RejectedInput::RejectedInput;
};

// A step ran out of colors although its preconditions claimed it could not.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A structural guarantee failed (e.g. no reduction on a graph that must
// have one). Always indicates a bug; the CLI maps it to exit status 1.
class InternalInvariantFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twodist
