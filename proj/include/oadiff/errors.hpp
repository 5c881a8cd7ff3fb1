// ---------------------------------------------------------------------------
// errors.hpp -- structured error type shared by all modules.
//
// Errors carry a short machine-readable code (e.g. "EmptyArray",
// "NotBalanced", "Budget") plus a human-readable message with the witness
// details.  Tests match on the code; the CLI prints the message.
// ---------------------------------------------------------------------------
#pragma once

#include <stdexcept>
#include <string>

namespace oadiff {

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code,
                              const std::string& message) {
  throw Error(code, message);
}

}  // namespace oadiff
