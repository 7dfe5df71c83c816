#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace schubert::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

inline std::optional<int> parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

// Comma-separated integers; nullopt on any malformed entry.
inline std::optional<std::vector<int>> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty())
    return std::nullopt;
  while (true) {
    auto comma = text.find(',');
    auto value = parse_int(text.substr(0, comma));
    if (!value)
      return std::nullopt;
    out.push_back(*value);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

template <typename Range> std::string join(const Range &values, char sep = ',') {
  std::string out;
  bool first = true;
  for (const auto &v : values) {
    if (!first)
      out += sep;
    out += std::to_string(v);
    first = false;
  }
  return out;
}

} // namespace schubert::detail
