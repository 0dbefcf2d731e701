#ifndef ANTIGRAM_ERRORS_HPP
#define ANTIGRAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace antigram {

/// Unreadable file or other environment failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file content. Messages carry the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally valid input that leaves nothing usable (e.g. an empty word list).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user-supplied word or parameter.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antigram

#endif  // ANTIGRAM_ERRORS_HPP
