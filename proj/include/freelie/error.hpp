#pragma once

#include <stdexcept>
#include <string>

namespace freelie {

enum class ErrorCode {
  parse,
  field_mismatch,
  domain,           // value outside the operation's domain (non-member tuples, bad decode input, ...)
  rank,             // generating set too small for the requested operation
  degree_cap,       // product degree would exceed the configured cap
  nonlinear,        // equation system is not linear in its variables
  unbound_variable,
  internal_check,   // an internally verified identity failed; indicates a bug
  invalid,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace freelie
