#pragma once

#include <stdexcept>
#include <string>

namespace gravicat {

// Domain error with a stable machine-readable code ("NotUnimodular", ...).
// The CLI maps these to JSON error objects and exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Parse failure carrying a 1-based source position and the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, int line, int column, std::string token)
      : Error("SyntaxError", message), line(line), column(column), token(std::move(token)) {}

  int line;
  int column;
  std::string token;
};

} // namespace gravicat
