#include "mcsvm/text.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace mcsvm {

std::string fmt_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt_double17(double v) {
  char buf[64];
  auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string fmt_p(double p) {
  if (std::isinf(p)) return "inf";
  return fmt_double(p);
}

double parse_p(std::string_view s) {
  if (s == "inf" || s == "Inf" || s == "INF") {
    return std::numeric_limits<double>::infinity();
  }
  return parse_double_strict(s, "exponent p");
}

double parse_double_strict(std::string_view s, const std::string& what) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + what + ": '" + std::string(s) +
                                "'");
  }
  return v;
}

long long parse_int_strict(std::string_view s, const std::string& what) {
  long long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed " + what + ": '" + std::string(s) +
                                "'");
  }
  return v;
}

std::vector<std::string> split_csv_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) comma = s.size();
    std::string_view tok = s.substr(start, comma - start);
    if (tok.empty()) throw std::invalid_argument("empty item in list");
    out.emplace_back(tok);
    start = comma + 1;
    if (comma == s.size()) break;
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<double> parse_double_list(std::string_view s) {
  std::vector<double> out;
  for (const auto& tok : split_csv_list(s)) {
    out.push_back(parse_double_strict(tok, "list item"));
  }
  return out;
}

std::vector<double> parse_p_list(std::string_view s) {
  std::vector<double> out;
  for (const auto& tok : split_csv_list(s)) out.push_back(parse_p(tok));
  return out;
}

}  // namespace mcsvm
