#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ewe {

/// A permutation of {1..n} in one-line notation. Length 0 is allowed and is
/// the identity of the direct sum.
class Permutation {
 public:
  Permutation() = default;
  /// Throws usage_error unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// 0-based position, 1-based value.
  int operator[](std::size_t pos) const { return word_[pos]; }
  std::span<const int> word() const { return word_; }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct trusted_tag {};
  Permutation(std::vector<int> word, trusted_tag) : word_(std::move(word)) {}
  friend Permutation from_trusted(std::vector<int> word);

  std::vector<int> word_;
};

/// Skips validation; for hot paths that construct permutations by design.
Permutation from_trusted(std::vector<int> word);

enum class Parity : std::uint8_t { even, odd };

inline Parity operator*(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

/// The eight symmetries of the square acting on permutation graphs.
/// Composite tags apply their parts left to right: rc = complement(reverse(.)),
/// r_inverse = inverse(reverse(.)), and so on.
enum class SymmetryOp : std::uint8_t {
  identity,
  reverse,
  complement,
  inverse,
  rc,
  rc_inverse,
  r_inverse,
  c_inverse,
};

inline constexpr SymmetryOp all_symmetries[] = {
    SymmetryOp::identity, SymmetryOp::reverse,    SymmetryOp::complement, SymmetryOp::inverse,
    SymmetryOp::rc,       SymmetryOp::rc_inverse, SymmetryOp::r_inverse,  SymmetryOp::c_inverse,
};

std::string_view to_string(SymmetryOp op);

/// J (decreasing), I (increasing), F = J_{t-1} (+) 1.
struct PatternFamily {
  enum class Kind : std::uint8_t { J, I, F };
  Kind kind;
  int t;
};

std::int64_t inversions(const Permutation& perm);
Parity sign(const Permutation& perm);

Permutation reverse(const Permutation& perm);
Permutation complement(const Permutation& perm);
Permutation inverse(const Permutation& perm);
Permutation apply_symmetry(const Permutation& perm, SymmetryOp op);

/// alpha followed by beta shifted up by |alpha|.
Permutation direct_sum(const Permutation& alpha, const Permutation& beta);

/// True iff some subsequence of `perm` is order-isomorphic to `pattern`.
/// Requires |pattern| >= 1.
bool contains(const Permutation& perm, const Permutation& pattern);

Permutation realize(PatternFamily family);

/// Order-isomorphic relabelling of distinct values onto 1..size.
Permutation standardize(std::span<const int> values);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);

/// "45321" for n <= 9, "10 3 1 ..." otherwise.
std::string to_string(const Permutation& perm);

/// Accepts both the digit-string and the space-separated form. Throws
/// usage_error naming the offending token.
Permutation parse_permutation(std::string_view text);

}  // namespace ewe

template <>
struct std::hash<ewe::Permutation> {
  std::size_t operator()(const ewe::Permutation& perm) const noexcept;
};
