#pragma once

#include <cstdint>
#include <vector>

#include "tritab/modulus.hpp"
#include "tritab/natural.hpp"

namespace tritab {

/// S_n = n(n+1)/2, the n-th partial sum of the naturals. S_0 = 0.
Natural triangular(std::uint64_t n);

/// T_n = n(n+1)(n+2)/6 = sum of the first n triangular numbers.
Natural tetrahedral(std::uint64_t n);

/// Exact C(n, k); returns 0 when k > n.
Natural binomial(std::uint64_t n, std::uint64_t k);

/// Streams S_n mod M in constant space via S_{n+1} = S_n + (n+1). The
/// recurrence never divides by 2, which would not be invertible mod even M.
class TriangularModStream {
 public:
  explicit TriangularModStream(Modulus m, std::uint64_t start_n = 0);

  /// Returns S_n mod M for the current n, then advances to n + 1.
  std::uint64_t next() {
    std::uint64_t r = residue_;
    step_ += 1;
    if (step_ == modulus_) step_ = 0;
    residue_ += step_;
    if (residue_ >= modulus_) residue_ -= modulus_;
    return r;
  }

  std::uint64_t modulus() const { return modulus_; }

 private:
  std::uint64_t modulus_;
  std::uint64_t residue_;  // S_n mod M
  std::uint64_t step_;     // n mod M; next() adds n+1
};

/// S_n mod M in O(1), through the period 2M of the residue sequence.
std::uint64_t triangular_mod(std::uint64_t n, Modulus m);

/// S_0..S_{n_max} mod M, in order.
std::vector<std::uint64_t> triangular_mod_sequence(Modulus m, std::uint64_t n_max);

}  // namespace tritab
