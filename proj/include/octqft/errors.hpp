#pragma once

#include <stdexcept>
#include <string>

namespace octqft {

/// Input errors are malformed or inconsistent data (exit code 1 at the CLI);
/// math errors are violated mathematical preconditions (exit code 2).
enum class ErrorCategory { Input, Math };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail),
        category_(category),
        kind_(std::move(kind)),
        detail_(detail) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCategory category_;
  std::string kind_;
  std::string detail_;
};

inline Error input_error(std::string kind, const std::string& detail) {
  return Error(ErrorCategory::Input, std::move(kind), detail);
}

inline Error math_error(std::string kind, const std::string& detail) {
  return Error(ErrorCategory::Math, std::move(kind), detail);
}

}  // namespace octqft
