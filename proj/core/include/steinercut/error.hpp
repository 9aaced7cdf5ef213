#pragma once

#include <stdexcept>
#include <string>

namespace steinercut {

// Coarse error classes; the CLI maps them onto exit codes, library callers can
// branch on kind() without string matching.
enum class errc {
  parse,          // malformed input text / JSON schema violation
  invalid_input,  // structurally valid input violating an operation's precondition
  guard,          // instance exceeds a size guard
  internal,       // broken invariant; indicates a bug, not bad input
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& message) {
  throw error(kind, message);
}

}  // namespace steinercut
