#include "ewe/bwx.hpp"

#include <string>

#include "ewe/errors.hpp"

namespace ewe::bwx {

namespace {

void require_size(int size) {
  if (size < 2) throw usage_error("t must be >= 2, got " + std::to_string(size));
}

// Longest decreasing run starting at each column, using only columns <= limit.
// Index 0 unused.
std::vector<int> decreasing_from(const Permutation& perm, int limit) {
  const int n = perm.size();
  std::vector<int> len(n + 1, 0);
  for (int c = limit; c >= 1; --c) {
    int best = 0;
    for (int d = c + 1; d <= limit; ++d)
      if (perm[d - 1] < perm[c - 1] && len[d] > best) best = len[d];
    len[c] = best + 1;
  }
  return len;
}

// Longest decreasing run ending at each column, using only values < ceiling.
// Columns whose own value is >= ceiling get 0.
std::vector<int> decreasing_to(const Permutation& perm, int ceiling) {
  const int n = perm.size();
  std::vector<int> len(n + 1, 0);
  for (int c = 1; c <= n; ++c) {
    if (perm[c - 1] >= ceiling) continue;
    int best = 0;
    for (int d = 1; d < c; ++d)
      if (perm[d - 1] > perm[c - 1] && len[d] > best) best = len[d];
    len[c] = best + 1;
  }
  return len;
}

void check_columns(const Permutation& perm, const OccurrenceSelection& sel) {
  const auto& cols = sel.columns;
  if (cols.size() < 2) throw usage_error("selection must have at least two columns");
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 1 || cols[j] > perm.size()) throw usage_error("selection column out of range");
    if (j > 0 && cols[j] <= cols[j - 1]) throw usage_error("selection columns must increase");
  }
}

}  // namespace

std::optional<OccurrenceSelection> find_canonical_J(const Transversal& tr, int size) {
  require_size(size);
  const Permutation& perm = tr.perm;
  const int n = perm.size();
  if (size > n) return std::nullopt;

  auto limit_of = [&](int col) { return std::min(tr.shape.part(perm[col - 1]), n); };

  // The leading letter is the largest; its row length bounds the last column.
  int lead = 0;
  for (int c = 1; c <= n; ++c) {
    if (lead != 0 && perm[c - 1] >= perm[lead - 1]) continue;
    if (decreasing_from(perm, limit_of(c))[c] >= size) lead = c;
  }
  if (lead == 0) return std::nullopt;

  const int limit = limit_of(lead);
  const auto len = decreasing_from(perm, limit);
  OccurrenceSelection sel{{lead}, Direction::forward};
  for (int j = 2; j <= size; ++j) {
    const int prev = sel.columns.back();
    int next = 0;
    for (int c = prev + 1; c <= limit; ++c) {
      if (perm[c - 1] < perm[prev - 1] && len[c] >= size - j + 1) {
        next = c;
        break;
      }
    }
    if (next == 0) throw contract_violation("canonical J occurrence could not be extended");
    sel.columns.push_back(next);
  }
  return sel;
}

std::optional<OccurrenceSelection> find_canonical_F(const Transversal& tr, int size) {
  require_size(size);
  const Permutation& perm = tr.perm;
  const int n = perm.size();
  if (size > n) return std::nullopt;

  // F_t ends in its largest letter, so the spanned square always fits: the
  // corner is the final point itself.
  int last = 0;
  for (int c = 1; c <= n; ++c) {
    if (last != 0 && perm[c - 1] <= perm[last - 1]) continue;
    const auto len = decreasing_to(perm, perm[c - 1]);
    for (int d = 1; d < c; ++d) {
      if (len[d] >= size - 1) {
        last = c;
        break;
      }
    }
  }
  if (last == 0) return std::nullopt;

  const int ceiling = perm[last - 1];
  const auto len = decreasing_to(perm, ceiling);
  std::vector<int> cols(size, 0);
  cols[size - 1] = last;
  for (int j = size - 1; j >= 1; --j) {
    const int right = cols[j];
    // Entry j (1-based) of the decreasing part; must exceed the entry to its right
    // unless it is the last entry of that part.
    const int floor = j == size - 1 ? 0 : perm[right - 1];
    int pick = 0;
    for (int c = 1; c < right; ++c) {
      const int v = perm[c - 1];
      if (v <= floor || v >= ceiling || len[c] < j) continue;
      if (pick == 0 || v > perm[pick - 1]) pick = c;
    }
    if (pick == 0) throw contract_violation("canonical F occurrence could not be extended");
    cols[j - 1] = pick;
  }
  return OccurrenceSelection{std::move(cols), Direction::backward};
}

Permutation theta(const Permutation& perm, const OccurrenceSelection& sel) {
  check_columns(perm, sel);
  const auto& cols = sel.columns;
  const std::size_t t = cols.size();
  for (std::size_t j = 1; j < t; ++j)
    if (perm[cols[j] - 1] >= perm[cols[j - 1] - 1]) throw usage_error("selection is not a copy of J_t");
  std::vector<int> word(perm.word().begin(), perm.word().end());
  word[cols[t - 1] - 1] = perm[cols[0] - 1];
  for (std::size_t j = 1; j < t; ++j) word[cols[j - 1] - 1] = perm[cols[j] - 1];
  return from_trusted(std::move(word));
}

Permutation theta_prime(const Permutation& perm, const OccurrenceSelection& sel) {
  check_columns(perm, sel);
  const auto& cols = sel.columns;
  const std::size_t t = cols.size();
  for (std::size_t j = 1; j + 1 < t; ++j)
    if (perm[cols[j] - 1] >= perm[cols[j - 1] - 1]) throw usage_error("selection is not a copy of F_t");
  if (perm[cols[t - 1] - 1] <= perm[cols[0] - 1]) throw usage_error("selection is not a copy of F_t");
  std::vector<int> word(perm.word().begin(), perm.word().end());
  word[cols[0] - 1] = perm[cols[t - 1] - 1];
  for (std::size_t j = 0; j + 1 < t; ++j) word[cols[j + 1] - 1] = perm[cols[j] - 1];
  return from_trusted(std::move(word));
}

std::optional<std::pair<Permutation, OccurrenceSelection>> phi_step(const Transversal& tr, int size) {
  auto sel = find_canonical_J(tr, size);
  if (!sel) return std::nullopt;
  auto image = theta(tr.perm, *sel);
  return std::pair{std::move(image), std::move(*sel)};
}

std::optional<std::pair<Permutation, OccurrenceSelection>> psi_step(const Transversal& tr, int size) {
  auto sel = find_canonical_F(tr, size);
  if (!sel) return std::nullopt;
  auto image = theta_prime(tr.perm, *sel);
  return std::pair{std::move(image), std::move(*sel)};
}

std::int64_t iteration_cap(int n, int size) {
  std::int64_t binom = 1;
  for (int i = 0; i < size; ++i) binom = binom * (n - i) / (i + 1);
  return (n >= size ? binom : 0) + 1;
}

namespace {

template <typename Step>
std::pair<Transversal, BijectionTrace> iterate(const Transversal& start, int size, Step step, const char* name) {
  require_size(size);
  Transversal current = start;
  BijectionTrace trace;
  const std::int64_t cap = iteration_cap(current.perm.size(), size);
  while (auto next = step(current, size)) {
    if (trace.applications >= cap)
      throw contract_violation(std::string(name) + " exceeded " + std::to_string(cap) + " steps on " +
                               to_string(start.perm));
    if (sign(next->first) != sign(current.perm)) ++trace.sign_flips;
    ++trace.applications;
    current.perm = next->first;
    trace.steps.push_back(TraceStep{std::move(next->second), std::move(next->first)});
  }
  return {std::move(current), std::move(trace)};
}

}  // namespace

std::pair<Transversal, BijectionTrace> phi_star(const Transversal& tr, int size) {
  return iterate(tr, size, phi_step, "phi_star");
}

std::pair<Transversal, BijectionTrace> psi_star(const Transversal& tr, int size) {
  return iterate(tr, size, psi_step, "psi_star");
}

}  // namespace ewe::bwx
