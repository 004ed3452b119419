#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tritab {

/// Arithmetic-safety backstop: residue streaming and quotient computation
/// stay inside 64/128-bit integers as long as M <= 2^62.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// A numbering-system base L, or a composite modulus such as L^c. Always >= 2.
class Modulus {
 public:
  explicit Modulus(std::uint64_t value) : value_(value) {
    if (value < 2) {
      throw std::invalid_argument("Modulus: must be >= 2, got " + std::to_string(value));
    }
    if (value > kMaxModulus) {
      throw std::invalid_argument("Modulus: " + std::to_string(value) +
                                  " exceeds supported maximum 2^62");
    }
  }

  std::uint64_t value() const { return value_; }
  bool is_even() const { return (value_ & 1) == 0; }
  std::uint64_t half() const { return value_ / 2; }  // meaningful for even moduli

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t value_;
};

}  // namespace tritab
