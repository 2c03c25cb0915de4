#ifndef CATNET_CORE_TEXT_HPP
#define CATNET_CORE_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace catnet {

void split_into(std::string_view line, char sep, std::vector<std::string_view>& out);
std::vector<std::string_view> split(std::string_view line, char sep);

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

// Shortest decimal text that round-trips to the same double; integral values
// print without a fractional part ("181", not "181.0").
std::string num_to_str(double v);

// Fraction rendered as a percent with two decimals: 0.9740 -> "97.40".
std::string pct2(double fraction);

// Fraction rendered as a percent with the fewest digits: 0.85 -> "85".
std::string pct_compact(double fraction);

// printf-style formatting into a std::string.
std::string strf(const char* fmt, ...) __attribute__((format(printf, 1, 2)));

} // namespace catnet

#endif
