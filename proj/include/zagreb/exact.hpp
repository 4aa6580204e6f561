#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace zagreb {

/// Arbitrary-precision nonnegative integer. Only the operations the index
/// computations need are exposed; there is no subtraction.
class ExactNat {
 public:
  ExactNat() = default;
  ExactNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static ExactNat from_decimal(std::string_view text);
  static ExactNat pow(const ExactNat& base, unsigned exponent);

  std::string to_decimal() const;
  bool is_zero() const { return value_.is_zero(); }

  ExactNat& operator*=(const ExactNat& o) {
    value_ *= o.value_;
    return *this;
  }
  ExactNat& operator+=(const ExactNat& o) {
    value_ += o.value_;
    return *this;
  }
  friend ExactNat operator*(ExactNat a, const ExactNat& b) { return a *= b; }
  friend ExactNat operator+(ExactNat a, const ExactNat& b) { return a += b; }

  friend bool operator==(const ExactNat& a, const ExactNat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExactNat& a, const ExactNat& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  boost::multiprecision::cpp_int value_;
};

/// Unreduced nonnegative fraction; ordered by cross-multiplication.
struct ExactRatio {
  ExactNat numerator;
  ExactNat denominator{1};

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
    return a.numerator * b.denominator <=> b.numerator * a.denominator;
  }
};

}  // namespace zagreb
