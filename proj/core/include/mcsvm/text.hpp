#ifndef MCSVM_TEXT_HPP
#define MCSVM_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace mcsvm {

// Shortest decimal string that round-trips the double (to_chars).
std::string fmt_double(double v);

// Fixed 17 significant digits, round-trip safe; used by the model file.
std::string fmt_double17(double v);

// Extended exponent: "inf" maps to +infinity, otherwise plain decimal.
std::string fmt_p(double p);
double parse_p(std::string_view s);

// Strict double parse of the whole token; throws std::invalid_argument.
double parse_double_strict(std::string_view s, const std::string& what);
long long parse_int_strict(std::string_view s, const std::string& what);

// Split "a,b,c" into tokens (no empties allowed).
std::vector<std::string> split_csv_list(std::string_view s);

std::vector<double> parse_double_list(std::string_view s);
std::vector<double> parse_p_list(std::string_view s);

}  // namespace mcsvm

#endif  // MCSVM_TEXT_HPP
