#include "shadow/halfint.hpp"

#include <charconv>

namespace shadow {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::optional<HalfInt> HalfInt::parse(std::string_view text) {
  std::string_view num = text;
  bool half = false;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2") return std::nullopt;
    num = text.substr(0, slash);
    half = true;
  }
  if (num.empty()) return std::nullopt;
  std::size_t digits_from = num.front() == '-' ? 1 : 0;
  if (digits_from == num.size()) return std::nullopt;
  for (std::size_t k = digits_from; k < num.size(); ++k) {
    if (num[k] < '0' || num[k] > '9') return std::nullopt;
  }
  // no leading zeros and no negative zero, so every value has one spelling
  if (num.size() - digits_from > 1 && num[digits_from] == '0') return std::nullopt;
  if (digits_from == 1 && num == "-0") return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size()) return std::nullopt;
  if (half) {
    if (value % 2 == 0) return std::nullopt;
    return HalfInt::from_twice(value);
  }
  return HalfInt::integer(value);
}

}  // namespace shadow
