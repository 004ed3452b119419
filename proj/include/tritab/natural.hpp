#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace tritab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision non-negative integer. Construction and subtraction
/// both reject negative results, so a Natural can never hold one.
class Natural {
 public:
  Natural() = default;

  template <std::unsigned_integral T>
  Natural(T v) : value_(v) {}

  template <std::signed_integral T>
  Natural(T v) : value_(v) {
    if (v < 0) {
      throw std::invalid_argument("Natural: negative value " + std::to_string(v));
    }
  }

  explicit Natural(BigInt v) : value_(std::move(v)) {
    if (value_ < 0) {
      throw std::invalid_argument("Natural: negative value " + value_.str());
    }
  }

  /// Parses a decimal string; rejects signs and non-digit characters.
  static Natural parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Natural: empty string");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("Natural: not a decimal non-negative integer: '" + text + "'");
      }
    }
    return Natural(BigInt(text));
  }

  const BigInt& value() const { return value_; }
  std::string str() const { return value_.str(); }
  bool is_zero() const { return value_.is_zero(); }

  /// Loses precision above 2^64-1; callers guard the range themselves.
  std::uint64_t to_uint64() const { return static_cast<std::uint64_t>(value_); }

  Natural& operator+=(const Natural& o) {
    value_ += o.value_;
    return *this;
  }
  Natural& operator*=(const Natural& o) {
    value_ *= o.value_;
    return *this;
  }
  // Subtraction is checked: going below zero is a caller bug.
  Natural& operator-=(const Natural& o) {
    if (o.value_ > value_) {
      throw std::invalid_argument("Natural: subtraction " + value_.str() + " - " +
                                  o.value_.str() + " would be negative");
    }
    value_ -= o.value_;
    return *this;
  }

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigInt value_;  // invariant: >= 0
};

}  // namespace tritab
