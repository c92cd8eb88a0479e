#include "dskit/integer.hpp"

#include <limits>

#include "dskit/error.hpp"

namespace dskit {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw DomainError("binomial: negative upper index " + std::to_string(n));
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::string to_decimal(const Integer& value) { return value.str(); }

Integer parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) throw ParseError("empty integer literal", 0);
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw ParseError("invalid integer literal '" + std::string(text) + "'", 0);
    }
  }
  Integer value(std::string(text.substr(pos)));
  return (text[0] == '-') ? Integer(-value) : value;
}

std::int64_t to_int64(const Integer& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("integer " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::int64_t>();
}

}  // namespace dskit
