#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tritab/modulus.hpp"
#include "tritab/natural.hpp"

namespace tritab {

/// Positional representation of a value, most significant digit first.
/// No leading zero, except that the value 0 is the single digit 0.
struct DigitString {
  Modulus base;
  std::vector<std::uint64_t> digits;

  std::string str() const;
};

DigitString to_digits(const Natural& value, Modulus base);

/// Evaluates the digits positionally; round-trips with to_digits.
Natural digits_value(const DigitString& ds);

/// Fixed-width rendering used for multi-digit residue reports: `value` as
/// exactly `width` base-`base` digits, zero padded on the left.
std::vector<std::uint64_t> pad_digits(std::uint64_t value, Modulus base, std::size_t width);

/// Digits are printed as decimal numerals, never letters: concatenated for
/// base <= 10, dot-separated above so the string stays unambiguous.
std::string digits_str(const std::vector<std::uint64_t>& digits, Modulus base);

}  // namespace tritab
