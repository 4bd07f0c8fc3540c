#include "crn/rational.hpp"

#include <cctype>

namespace crn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;

  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  Rational value(p, q);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_str();  // "p/q", or "p" when the denominator is 1
}

std::string to_string(const Integer& value) {
  return value.get_str();
}

}  // namespace crn
