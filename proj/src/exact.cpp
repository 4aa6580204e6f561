#include "zagreb/exact.hpp"

#include <stdexcept>

namespace zagreb {

ExactNat ExactNat::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty decimal string");
  ExactNat out;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid decimal digit in '" + std::string(text) + "'");
    }
    out.value_ *= 10;
    out.value_ += static_cast<unsigned>(c - '0');
  }
  return out;
}

ExactNat ExactNat::pow(const ExactNat& base, unsigned exponent) {
  ExactNat out;
  out.value_ = boost::multiprecision::pow(base.value_, exponent);
  return out;
}

std::string ExactNat::to_decimal() const { return value_.str(); }

}  // namespace zagreb
