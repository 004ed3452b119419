#include "tritab/digits.hpp"

#include <algorithm>

namespace tritab {

std::string DigitString::str() const { return digits_str(digits, base); }

DigitString to_digits(const Natural& value, Modulus base) {
  std::vector<std::uint64_t> digits;
  BigInt v = value.value();
  const BigInt b = base.value();
  if (v.is_zero()) {
    digits.push_back(0);
  } else {
    BigInt q, r;
    while (!v.is_zero()) {
      boost::multiprecision::divide_qr(v, b, q, r);
      digits.push_back(static_cast<std::uint64_t>(r));
      v = q;
    }
    std::reverse(digits.begin(), digits.end());
  }
  return DigitString{base, std::move(digits)};
}

Natural digits_value(const DigitString& ds) {
  BigInt v = 0;
  for (std::uint64_t d : ds.digits) {
    v *= ds.base.value();
    v += d;
  }
  return Natural(std::move(v));
}

std::vector<std::uint64_t> pad_digits(std::uint64_t value, Modulus base, std::size_t width) {
  std::vector<std::uint64_t> digits(width, 0);
  for (std::size_t pos = width; pos-- > 0 && value != 0;) {
    digits[pos] = value % base.value();
    value /= base.value();
  }
  return digits;
}

std::string digits_str(const std::vector<std::uint64_t>& digits, Modulus base) {
  std::string out;
  const bool dotted = base.value() > 10;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (dotted && k > 0) out += '.';
    out += std::to_string(digits[k]);
  }
  return out;
}

}  // namespace tritab
