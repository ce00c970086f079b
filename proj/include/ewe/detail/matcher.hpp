#pragma once

#include <array>
#include <cstdint>

#include "ewe/permutation.hpp"

namespace ewe::detail {

inline constexpr int max_pattern_length = 64;

// Backtracking occurrence search with value-window pruning. Pattern entries
// are placed right to left; entry j must land strictly between the values
// already assigned to its nearest lower and upper neighbours among j+1..k-1.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Permutation& pattern);

  int length() const { return k_; }

  // Occurrence whose last entry is at index `last` and whose values are all
  // <= cap. `values` need only be distinct, not a permutation.
  bool ends_at(const int* values, int last, int cap) const {
    if (last < k_ - 1) return false;
    const int x = values[last];
    if (x > cap) return false;
    std::array<int, max_pattern_length> assigned;
    assigned[k_ - 1] = x;
    return extend(values, k_ - 2, last, cap, assigned.data());
  }

  bool occurs_in(const int* values, int n, int cap) const {
    for (int last = k_ - 1; last < n; ++last)
      if (ends_at(values, last, cap)) return true;
    return false;
  }

 private:
  bool extend(const int* values, int j, int pos, int cap, int* assigned) const {
    if (j < 0) return true;
    const int lo = lower_[j] >= 0 ? assigned[lower_[j]] : 0;
    const int hi = upper_[j] >= 0 ? assigned[upper_[j]] : cap + 1;
    if (hi - lo - 1 < below_[j]) return false;
    for (int p = pos - 1; p >= j; --p) {
      const int x = values[p];
      if (x > lo && x < hi) {
        assigned[j] = x;
        if (extend(values, j - 1, p, cap, assigned)) return true;
      }
    }
    return false;
  }

  int k_ = 0;
  std::array<std::int8_t, max_pattern_length> lower_{};
  std::array<std::int8_t, max_pattern_length> upper_{};
  // Number of pattern entries 0..j whose value lies between lower_[j] and upper_[j]
  // (inclusive of j itself); the open value window must be at least this wide.
  std::array<std::int8_t, max_pattern_length> below_{};
};

}  // namespace ewe::detail
