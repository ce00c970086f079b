#pragma once

#include <cstdint>
#include <vector>

#include "ewe/permutation.hpp"
#include "ewe/shape.hpp"

namespace ewe {

struct CountTriple {
  std::uint64_t total = 0;
  std::uint64_t even = 0;
  std::uint64_t odd = 0;

  CountTriple& operator+=(const CountTriple& o) {
    total += o.total;
    even += o.even;
    odd += o.odd;
    return *this;
  }
  std::uint64_t of(Parity p) const { return p == Parity::even ? even : odd; }
  bool operator==(const CountTriple&) const = default;
};

/// Counts for n = 0..N; entries[n] describes S_n(pattern).
struct AvoidanceVector {
  Permutation pattern;
  std::vector<CountTriple> entries;

  int horizon() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const AvoidanceVector&) const = default;
};

struct EnumerationOptions {
  /// Worker threads; 0 means hardware concurrency (or EWE_JOBS when set).
  int jobs = 0;
  /// Largest permutation length accepted before budget_error.
  int max_n = 12;
  /// Largest number of shape rows accepted before budget_error.
  int max_shape_rows = 8;
};

/// Effective worker count for `opts`.
int resolve_jobs(const EnumerationOptions& opts);

/// Parity-split count of permutations of length n avoiding `pattern`.
CountTriple count_avoiders(int n, const Permutation& pattern, const EnumerationOptions& opts = {});

/// Parity-split count of transversals of `shape` avoiding `pattern` as a transversal.
CountTriple count_avoiders_shape(const FerrersShape& shape, const Permutation& pattern,
                                 const EnumerationOptions& opts = {});

/// Counts for every n = 0..max_n from a single search.
AvoidanceVector avoidance_vector(const Permutation& pattern, int max_n, const EnumerationOptions& opts = {});

/// Reference counter: walks all of S_n and tests each permutation. Used to
/// double-check refutations; far too slow for large n.
CountTriple count_avoiders_naive(int n, const Permutation& pattern);

}  // namespace ewe
