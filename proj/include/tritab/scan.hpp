#pragma once

#include <cstdint>
#include <vector>

#include "tritab/modulus.hpp"

namespace tritab {

struct ScanRecord {
  std::uint64_t base;
  std::uint64_t gap_count;
  bool gap_free;
  bool power_of_two;
};

struct ScanSummary {
  std::uint64_t from;
  std::uint64_t to;
  std::vector<ScanRecord> records;  // ascending by base

  /// gap_free <=> power_of_two on every record. Empirical over the scanned
  /// range; the scan asserts nothing beyond it.
  bool equivalence_holds() const;
};

/// Scans every base in [lo, hi]: difference-table prediction cross-checked
/// against the brute-force oracle over one full period (n <= 2*base). Any
/// mismatch throws internal_inconsistency_error. Bases are evaluated in
/// parallel when OpenMP is available; records are aggregated in ascending
/// base order regardless of evaluation order.
ScanSummary scan_bases(Modulus lo, Modulus hi);

/// Serial reference for scan_bases; identical output.
ScanSummary scan_bases_serial(Modulus lo, Modulus hi);

}  // namespace tritab
