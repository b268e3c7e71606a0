#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "dunkl/error.hpp"
#include "dunkl/norms.hpp"

namespace dunkl {

Exponent::Exponent(double value) : value_(value), infinite_(false) {
  if (std::isinf(value) && value > 0) {
    infinite_ = true;
    value_ = 0.0;
    return;
  }
  if (!std::isfinite(value) || value < 1.0) throw DomainError("exponent must lie in [1, inf]");
}

Exponent Exponent::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "inf" || lower == "infinity" || lower == "+inf") return infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("cannot parse exponent '" + std::string(text) + "'");
  return Exponent(v);
}

double Exponent::value() const {
  if (infinite_) throw DomainError("infinite exponent has no finite value");
  return value_;
}

std::string Exponent::str() const {
  if (infinite_) return "inf";
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value_);
  return std::string(buf, ptr);
}

}  // namespace dunkl
