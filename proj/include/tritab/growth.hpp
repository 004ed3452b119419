#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "tritab/natural.hpp"

// Idealized multicellular growth. The population holds a pool of dividing
// cells and a pool of differentiated cells. Each generation every dividing
// cell divides in two (reproduction factor fixed at 2); the recruitment
// policy sets how many of the daughters keep dividing, the rest differentiate
// and never divide again. Totals follow a polynomial in the generation
// number whose degree is 1, 2 or 3 for the constant, linear and triangular
// policies.

namespace tritab {

enum class PolicyKind { constant, linear, triangular };

std::string_view to_string(PolicyKind k);

struct GrowthPolicy {
  PolicyKind kind;
  std::uint64_t increment = 1;  // linear only: dividing-pool growth per generation

  static GrowthPolicy constant() { return {PolicyKind::constant, 0}; }
  static GrowthPolicy linear(std::uint64_t increment = 1) {
    return {PolicyKind::linear, increment};
  }
  static GrowthPolicy triangular() { return {PolicyKind::triangular, 0}; }

  /// Dividing-pool size d_q prescribed for generation q, from the seed m0:
  /// constant m0; linear m0 + increment*q; triangular S_{m0+q}.
  Natural dividing_at(std::uint64_t m0, std::uint64_t q) const;
};

struct GrowthState {
  std::uint64_t generation;
  Natural dividing;
  Natural differentiated;  // non-decreasing across generations
  Natural total;           // dividing + differentiated
};

struct GrowthTrace {
  GrowthPolicy policy;
  Natural initial_differentiated;  // M0
  std::uint64_t m0;
  std::vector<GrowthState> states;  // q = 0 .. q_max

  std::vector<Natural> totals() const;
};

/// Runs the model for q = 0..q_max. Each step the dividing pool doubles to
/// 2*d_{q-1}; d_q of the daughters keep dividing and 2*d_{q-1} - d_q join the
/// differentiated pool. Parameter combinations that would make that flux
/// negative are rejected (constant/linear need m0 >= increment resp. m0 >= 1;
/// triangular needs m0 >= 2).
GrowthTrace simulate(const Natural& M0, std::uint64_t m0, GrowthPolicy policy,
                     std::uint64_t q_max);

/// Constant policy total: M0 + m0 + m0*q.
Natural closed_form_constant(const Natural& M0, std::uint64_t m0, std::uint64_t q);

/// Linear policy (unit increment) total: M0 + m0 + m0*q + (q-1)q/2.
Natural closed_form_linear(const Natural& M0, std::uint64_t m0, std::uint64_t q);

/// Triangular policy total: M0 + S_{m0} + T_{m0+q-1} - T_{m0-1}.
Natural closed_form_triangular(const Natural& M0, std::uint64_t m0, std::uint64_t q);

/// Policy dispatcher used by the CLI; for a non-unit linear increment the
/// formula generalizes to M0 + m0 + m0*q + increment*(q-1)q/2, validated
/// against the simulator.
Natural closed_form(const Natural& M0, std::uint64_t m0, GrowthPolicy policy,
                    std::uint64_t q);

inline constexpr int kDefaultDegreeCap = 16;

/// Least d such that the d-th finite difference of the series is constant
/// (and the (d+1)-th vanishes): the polynomial degree of the series. Needs
/// at least d + 2 points; throws std::domain_error when no d <= max_degree
/// fits.
int detect_degree(std::span<const Natural> series, int max_degree = kDefaultDegreeCap);

}  // namespace tritab
