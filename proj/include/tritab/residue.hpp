#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tritab/detail/bitset.hpp"
#include "tritab/digits.hpp"
#include "tritab/errors.hpp"
#include "tritab/modulus.hpp"

// Reachability of residues j among the triangular numbers S_n mod M.
//
// Writing n = M*k + i with digit i, S_n = (M^2 k^2 + M k (2i+1) + i(i+1)) / 2,
// so S_n = M*m + j holds for a whole m exactly when
//
//     m = k(Mk + 2i + 1)/2  +  (i(i+1)/2 - j)/M
//
// is an integer. For odd M the first term is always whole, so j is reachable
// from column i iff M divides i(i+1)/2 - j. For even M the first term is
// whole for even k but contributes an extra 1/2 for odd k, so the difference
// must be divisible by M exactly (even k) or leave remainder M/2 (odd k).

namespace tritab {

enum class KParity { any, even, odd };

std::string_view to_string(KParity p);

/// Certifies S_{M*k + i} == j (mod M) for every k of the stated parity.
/// quotient_num/quotient_den is (i(i+1)/2 - j)/M in lowest terms: an integer,
/// or a half-integer exactly when k_parity == odd.
struct Witness {
  std::uint64_t i;
  std::uint64_t j;
  KParity k_parity;
  std::int64_t quotient_num;
  std::int64_t quotient_den;  // 1 or 2
};

/// reachable and gaps partition [0, M); every reachable j has a witness.
struct ResidueReport {
  Modulus modulus;
  std::vector<std::uint64_t> reachable;
  std::vector<std::uint64_t> gaps;
  std::vector<Witness> witnesses;  // ordered by column i, even branch first
};

/// Difference-table prediction of the residues S_n mod M attains.
/// Witness collection can be skipped for large moduli; the sets are the same.
ResidueReport predict_reachable(Modulus m, bool collect_witnesses = true);

/// Brute-force oracle: { S_n mod M : 0 <= n <= n_max }, sorted. Requires
/// n_max >= 2M, one guaranteed full period of the residue sequence.
std::vector<std::uint64_t> observe_reachable(Modulus m, std::uint64_t n_max);

/// Serial reference for the (possibly parallel) observer above.
std::vector<std::uint64_t> observe_reachable_serial(Modulus m, std::uint64_t n_max);

/// Least period of (S_n mod M); divides M for odd M, 2M for even M.
std::uint64_t period(Modulus m);

/// Residue frequencies over S_{start_n} .. S_{start_n + count - 1} mod M.
struct Histogram {
  Modulus modulus;
  std::uint64_t start_n;
  std::uint64_t count;
  std::vector<std::uint64_t> freq;  // indexed by residue, size M
};

Histogram histogram(Modulus m, std::uint64_t start_n, std::uint64_t count);

inline constexpr std::uint64_t kDefaultModulusCeiling = std::uint64_t{1} << 20;

/// Reachability of c-digit base-`base` suffixes, i.e. residues mod base^c.
/// novel_gaps are the gaps not already implied by a shorter suffix: their
/// (c-1)-digit suffix is reachable mod base^(c-1). For c = 1 every gap is
/// novel.
struct MultidigitReport {
  Modulus base;
  std::uint32_t digit_count;  // c
  ResidueReport report;       // modulo base^c
  std::vector<std::uint64_t> novel_gaps;

  /// Zero-padded c-digit rendering of a residue.
  std::string render(std::uint64_t residue) const;
};

MultidigitReport multidigit_reachable(Modulus base, std::uint32_t digit_count,
                                      std::uint64_t modulus_limit = kDefaultModulusCeiling);

namespace detail {

// Shared kernels: the scanner consumes bitsets directly instead of sorted
// vectors. observe_bits splits the n-range across threads when OpenMP is
// available; observe_bits_serial is the reference implementation.
Bitset reachable_bits(Modulus m);
Bitset observe_bits(Modulus m, std::uint64_t n_max);
Bitset observe_bits_serial(Modulus m, std::uint64_t n_max);

}  // namespace detail

}  // namespace tritab
