#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace coldseq::detail {

// Shortest decimal form that round-trips the exact double.
inline void append_shortest(std::string& out, double x) {
  char buf[32];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  out.append(buf, p);
}

// Whole-string double parse, tolerant of surrounding spaces/tabs.
inline bool parse_double(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  while (b < e && (*b == ' ' || *b == '\t')) ++b;
  while (e > b && (e[-1] == ' ' || e[-1] == '\t')) --e;
  const auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && p == e && b < e;
}

}  // namespace coldseq::detail
