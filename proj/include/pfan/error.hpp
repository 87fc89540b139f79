#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

namespace pfan {

/// Module error carrying a stable code and a JSON witness.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, nlohmann::json witness = nullptr)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const noexcept { return code_; }
  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  std::string code_;
  nlohmann::json witness_;
};

}  // namespace pfan
