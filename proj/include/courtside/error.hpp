#pragma once

#include <stdexcept>
#include <string>

namespace courtside {

// Every failure the library reports maps onto one of these categories; the
// CLI turns the category into its process exit code.
enum class ErrorKind { config, data, degenerate };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::config, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(ErrorKind::data, what) {}
};

// Raised when a statistic cannot be computed: zero variance, all-zero paired
// differences, empty comparison cells, nothing to pair.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(ErrorKind::degenerate, what) {}
};

}  // namespace courtside
