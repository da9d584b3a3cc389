#pragma once

#include <stdexcept>
#include <string>

namespace elr {

// Every failure the library reports carries a short machine-readable code
// ("invalid-face", "precision-exhausted", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace elr
