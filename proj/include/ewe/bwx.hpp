#pragma once

// Backelin-West-Xin maps between transversals containing J_t and F_t.
//
// A forward step locates the canonical J_t occurrence (smallest leading
// letter, then leftmost continuations) and rotates its letters one slot to
// the left, leaving an F_t occurrence in the same columns. A backward step
// locates the canonical F_t occurrence (largest trailing letter, then
// largest letters right to left) and rotates the other way. Each step
// multiplies the permutation by a t-cycle, so it preserves sign iff t is odd.

#include <cstdint>
#include <optional>
#include <vector>

#include "ewe/permutation.hpp"
#include "ewe/shape.hpp"

namespace ewe::bwx {

enum class Direction : std::uint8_t { forward, backward };

/// 1-based columns i_1 < ... < i_t of a canonical occurrence.
struct OccurrenceSelection {
  std::vector<int> columns;
  Direction direction = Direction::forward;

  bool operator==(const OccurrenceSelection&) const = default;
};

struct TraceStep {
  OccurrenceSelection selection;
  Permutation after;
};

struct BijectionTrace {
  std::vector<TraceStep> steps;
  int applications = 0;
  int sign_flips = 0;
};

/// Canonical J_t copy (as a transversal) or nullopt if the transversal avoids J_t.
/// Throws usage_error for t < 2.
std::optional<OccurrenceSelection> find_canonical_J(const Transversal& t, int size);

/// Canonical F_t copy or nullopt. Throws usage_error for t < 2.
std::optional<OccurrenceSelection> find_canonical_F(const Transversal& t, int size);

/// Moves perm(i_1) to column i_t and perm(i_j) to column i_{j-1}. Throws
/// usage_error if the selected letters are not decreasing.
Permutation theta(const Permutation& perm, const OccurrenceSelection& sel);

/// Moves perm(i_t) to column i_1 and perm(i_j) to column i_{j+1}. Throws
/// usage_error if the selection is not an F_t copy.
Permutation theta_prime(const Permutation& perm, const OccurrenceSelection& sel);

/// One forward step; nullopt when no J_t copy remains.
std::optional<std::pair<Permutation, OccurrenceSelection>> phi_step(const Transversal& t, int size);
/// One backward step; nullopt when no F_t copy remains.
std::optional<std::pair<Permutation, OccurrenceSelection>> psi_step(const Transversal& t, int size);

/// Upper bound on the number of steps phi_star / psi_star may take before
/// raising contract_violation.
std::int64_t iteration_cap(int n, int size);

/// Iterates phi_step to a J_t-avoiding transversal.
std::pair<Transversal, BijectionTrace> phi_star(const Transversal& t, int size);
/// Iterates psi_step to an F_t-avoiding transversal.
std::pair<Transversal, BijectionTrace> psi_star(const Transversal& t, int size);

}  // namespace ewe::bwx
