#pragma once

#include <cstdint>
#include <vector>

#include "tritab/modulus.hpp"

namespace tritab {

/// The M x M grid of values i(i+1)/2 - j for digits i, j of a modulus-M
/// system. Row j = 0 is the triangular numbers themselves; each next row is
/// the previous one minus 1. Entries are generated from the cached triangular
/// column, so memory stays O(M) while the grid is logically M x M.
class DifferenceTable {
 public:
  explicit DifferenceTable(Modulus m);

  Modulus modulus() const { return modulus_; }
  std::uint64_t size() const { return tri_.size(); }  // M

  /// entry(j, i) = i(i+1)/2 - j.
  std::int64_t entry(std::uint64_t j, std::uint64_t i) const {
    return tri_[i] - static_cast<std::int64_t>(j);
  }

  /// A cell is admissible when its value is divisible by M (any k for odd M,
  /// even k for even M) or leaves remainder M/2 (odd k, even M only). The
  /// admissible cells are exactly the witnesses that S_n mod M reaches j.
  bool admissible(std::uint64_t j, std::uint64_t i) const;

  /// The column headers i(i+1)/2, i in [0, M).
  const std::vector<std::int64_t>& column_triangulars() const { return tri_; }

 private:
  Modulus modulus_;
  std::vector<std::int64_t> tri_;
};

}  // namespace tritab
