#pragma once

#include <stdexcept>

namespace vbraid {

// Input text does not conform to the word/diagram/sign-set grammar.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain: index out of range, strand
// counts disagree, or a stated precondition does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internally guaranteed property failed. Seeing this is a finding about
// the underlying machinery, not a usage error.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vbraid
