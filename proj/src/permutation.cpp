#include "ewe/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ewe/detail/matcher.hpp"
#include "ewe/errors.hpp"

namespace ewe {

namespace {

void validate(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : word) {
    if (v < 1 || v > n)
      throw usage_error("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[v]) throw usage_error("value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) { validate(word_); }

Permutation::Permutation(std::initializer_list<int> word) : word_(word) { validate(word_); }

Permutation from_trusted(std::vector<int> word) { return Permutation(std::move(word), Permutation::trusted_tag{}); }

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return from_trusted(std::move(w));
}

std::string_view to_string(SymmetryOp op) {
  switch (op) {
    case SymmetryOp::identity: return "identity";
    case SymmetryOp::reverse: return "reverse";
    case SymmetryOp::complement: return "complement";
    case SymmetryOp::inverse: return "inverse";
    case SymmetryOp::rc: return "rc";
    case SymmetryOp::rc_inverse: return "rc-inverse";
    case SymmetryOp::r_inverse: return "r-inverse";
    case SymmetryOp::c_inverse: return "c-inverse";
  }
  return "?";
}

std::int64_t inversions(const Permutation& perm) {
  // Fenwick tree over values; O(n log n).
  const int n = perm.size();
  std::vector<int> tree(n + 1, 0);
  std::int64_t count = 0;
  for (int i = n - 1; i >= 0; --i) {
    for (int v = perm[i] - 1; v > 0; v -= v & -v) count += tree[v];
    for (int v = perm[i]; v <= n; v += v & -v) ++tree[v];
  }
  return count;
}

Parity sign(const Permutation& perm) { return inversions(perm) % 2 == 0 ? Parity::even : Parity::odd; }

Permutation reverse(const Permutation& perm) {
  std::vector<int> w(perm.word().rbegin(), perm.word().rend());
  return from_trusted(std::move(w));
}

Permutation complement(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n + 1 - perm[i];
  return from_trusted(std::move(w));
}

Permutation inverse(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[perm[i] - 1] = i + 1;
  return from_trusted(std::move(w));
}

Permutation apply_symmetry(const Permutation& perm, SymmetryOp op) {
  switch (op) {
    case SymmetryOp::identity: return perm;
    case SymmetryOp::reverse: return reverse(perm);
    case SymmetryOp::complement: return complement(perm);
    case SymmetryOp::inverse: return inverse(perm);
    case SymmetryOp::rc: return complement(reverse(perm));
    case SymmetryOp::rc_inverse: return inverse(complement(reverse(perm)));
    case SymmetryOp::r_inverse: return inverse(reverse(perm));
    case SymmetryOp::c_inverse: return inverse(complement(perm));
  }
  return perm;
}

Permutation direct_sum(const Permutation& alpha, const Permutation& beta) {
  std::vector<int> w(alpha.word().begin(), alpha.word().end());
  w.reserve(alpha.size() + beta.size());
  for (int v : beta.word()) w.push_back(v + alpha.size());
  return from_trusted(std::move(w));
}

bool contains(const Permutation& perm, const Permutation& pattern) {
  if (pattern.empty()) throw usage_error("pattern must be nonempty");
  if (pattern.size() > perm.size()) return false;
  const detail::PatternMatcher matcher(pattern);
  return matcher.occurs_in(perm.word().data(), perm.size(), perm.size());
}

Permutation realize(PatternFamily family) {
  // J_0 and I_0 are the empty word; F_t needs its final letter.
  const int least = family.kind == PatternFamily::Kind::F ? 1 : 0;
  if (family.t < least) throw usage_error("pattern family size must be >= " + std::to_string(least));
  const int t = family.t;
  std::vector<int> w(t);
  switch (family.kind) {
    case PatternFamily::Kind::I: std::iota(w.begin(), w.end(), 1); break;
    case PatternFamily::Kind::J:
      for (int i = 0; i < t; ++i) w[i] = t - i;
      break;
    case PatternFamily::Kind::F:
      for (int i = 0; i < t - 1; ++i) w[i] = t - 1 - i;
      w[t - 1] = t;
      break;
  }
  return from_trusted(std::move(w));
}

Permutation standardize(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> w(n);
  for (int rank = 0; rank < n; ++rank) w[order[rank]] = rank + 1;
  return from_trusted(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    fn(from_trusted(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::string to_string(const Permutation& perm) {
  std::string out;
  if (perm.size() <= 9) {
    for (int v : perm.word()) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (int i = 0; i < perm.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(perm[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> word;
  if (text.find_first_of(" \t,") == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') throw usage_error(std::string("bad token '") + c + "' in pattern '" + std::string(text) + "'");
      word.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t end = text.find_first_of(" \t,", pos);
      const std::string_view token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
      pos = end == std::string_view::npos ? text.size() : end + 1;
      if (token.empty()) continue;
      int v = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw usage_error("bad token '" + std::string(token) + "' in pattern '" + std::string(text) + "'");
      word.push_back(v);
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const usage_error& e) {
    throw usage_error("'" + std::string(text) + "' is not a permutation: " + e.what());
  }
}

namespace detail {

PatternMatcher::PatternMatcher(const Permutation& pattern) : k_(pattern.size()) {
  if (k_ > max_pattern_length) throw usage_error("pattern longer than " + std::to_string(max_pattern_length));
  for (int j = 0; j < k_; ++j) {
    int lo = -1, hi = -1;
    for (int l = j + 1; l < k_; ++l) {
      if (pattern[l] < pattern[j] && (lo < 0 || pattern[l] > pattern[lo])) lo = l;
      if (pattern[l] > pattern[j] && (hi < 0 || pattern[l] < pattern[hi])) hi = l;
    }
    lower_[j] = static_cast<std::int8_t>(lo);
    upper_[j] = static_cast<std::int8_t>(hi);
    const int lo_value = lo >= 0 ? pattern[lo] : 0;
    const int hi_value = hi >= 0 ? pattern[hi] : k_ + 1;
    int between = 0;
    for (int i = 0; i <= j; ++i)
      if (pattern[i] > lo_value && pattern[i] < hi_value) ++between;
    below_[j] = static_cast<std::int8_t>(between);
  }
}

}  // namespace detail

}  // namespace ewe

std::size_t std::hash<ewe::Permutation>::operator()(const ewe::Permutation& perm) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : perm.word()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}
