#pragma once

#include <stdexcept>
#include <string>

namespace sonc {

// Domain-rule violation. `code` is a stable machine-readable name
// (AmbientDimTooLarge, NotSimplicial, ...) used by the CLI and tests.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace sonc
