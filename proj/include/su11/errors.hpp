#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace su11 {

class DeterminantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// |β̄ζ+ᾱ| vanished; only possible for a corrupted element.
class SingularActionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NegativeTError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-fatal numerical diagnostics carried alongside a result.
struct Warning {
  enum class Kind { truncation };
  Kind kind = Kind::truncation;
  std::string message;
};

using Warnings = std::vector<Warning>;

inline const char* to_string(Warning::Kind k) {
  switch (k) {
    case Warning::Kind::truncation:
      return "TruncationWarning";
  }
  return "Warning";
}

}  // namespace su11
