#pragma once

#include <stdexcept>
#include <string>

namespace cg {

// Every failure carries a short machine-readable code ("parse", "invalid",
// "budget", "usage", "io", ...).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace cg
