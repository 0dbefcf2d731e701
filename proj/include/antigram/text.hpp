#ifndef ANTIGRAM_TEXT_HPP
#define ANTIGRAM_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace antigram {

/// ASCII-only lowercase; bytes outside A-Z pass through unchanged.
inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

/// Strips surrounding spaces, tabs and a trailing carriage return.
inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

/// Splits on a single delimiter byte; keeps empty fields.
inline std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      fields.push_back(s.substr(start));
      break;
    }
    fields.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace antigram

#endif  // ANTIGRAM_TEXT_HPP
