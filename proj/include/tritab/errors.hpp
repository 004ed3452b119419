#pragma once

#include <stdexcept>

namespace tritab {

/// A mathematically guaranteed cross-check failed (predictor vs brute-force
/// oracle). Signals an implementation bug, never a data condition; the CLI
/// maps it to exit status 2.
class internal_inconsistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tritab
