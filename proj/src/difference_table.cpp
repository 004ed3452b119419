#include "tritab/difference_table.hpp"

#include <stdexcept>

namespace tritab {

DifferenceTable::DifferenceTable(Modulus m) : modulus_(m) {
  const std::uint64_t M = m.value();
  if (M > (std::uint64_t{1} << 31)) {
    throw std::invalid_argument("DifferenceTable: modulus " + std::to_string(M) +
                                " too large for an explicit table");
  }
  tri_.resize(M);
  std::int64_t t = 0;
  for (std::uint64_t i = 0; i < M; ++i) {
    t += static_cast<std::int64_t>(i);
    tri_[i] = t;
  }
}

bool DifferenceTable::admissible(std::uint64_t j, std::uint64_t i) const {
  const std::int64_t M = static_cast<std::int64_t>(modulus_.value());
  std::int64_t r = entry(j, i) % M;
  if (r < 0) r += M;
  if (r == 0) return true;
  return modulus_.is_even() && r == M / 2;
}

}  // namespace tritab
