#include "ewe/shape.hpp"

#include <algorithm>
#include <charconv>

#include "ewe/detail/matcher.hpp"
#include "ewe/errors.hpp"

namespace ewe {

namespace {

void validate(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw usage_error("shape parts must be >= 1, got " + std::to_string(parts[i]));
    if (i > 0 && parts[i] > parts[i - 1]) throw usage_error("shape parts must be weakly decreasing");
  }
}

}  // namespace

FerrersShape::FerrersShape(std::vector<int> parts) : parts_(std::move(parts)) { validate(parts_); }

FerrersShape::FerrersShape(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

FerrersShape FerrersShape::square(int n) { return FerrersShape(std::vector<int>(n, n)); }

FerrersShape FerrersShape::staircase(int n) {
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = n - i;
  return FerrersShape(std::move(parts));
}

int FerrersShape::column_height(int col) const {
  int h = 0;
  while (h < rows() && parts_[h] >= col) ++h;
  return h;
}

bool FerrersShape::admits_transversal() const {
  const int n = rows();
  for (int i = 0; i < n; ++i)
    if (parts_[i] < n - i) return false;
  return true;
}

bool is_transversal(const FerrersShape& shape, const Permutation& perm) {
  if (perm.size() != shape.rows())
    throw usage_error("permutation length " + std::to_string(perm.size()) + " does not match shape with " +
                      std::to_string(shape.rows()) + " rows");
  for (int col = 1; col <= perm.size(); ++col)
    if (!shape.has_cell(perm[col - 1], col)) return false;
  return true;
}

Transversal make_transversal(FerrersShape shape, Permutation perm) {
  if (!is_transversal(shape, perm))
    throw usage_error(to_string(perm) + " is not a transversal of " + to_string(shape));
  return Transversal{std::move(shape), std::move(perm)};
}

bool transversal_contains(const FerrersShape& shape, const Permutation& perm, const Permutation& pattern) {
  if (pattern.empty()) throw usage_error("pattern must be nonempty");
  const detail::PatternMatcher matcher(pattern);
  const int* values = perm.word().data();
  // An occurrence ending in column c fits iff its largest value is <= height(c).
  for (int last = pattern.size() - 1; last < perm.size(); ++last)
    if (matcher.ends_at(values, last, shape.column_height(last + 1))) return true;
  return false;
}

bool transversal_contains(const Transversal& t, const Permutation& pattern) {
  return transversal_contains(t.shape, t.perm, pattern);
}

std::vector<FerrersShape> shapes_in_box(int n) {
  if (n < 1) throw usage_error("box size must be >= 1");
  std::vector<FerrersShape> out;
  std::vector<int> parts(n);
  // Row i (0-based) ranges over [n - i, parts[i-1]]; visit in lexicographic order.
  std::function<void(int)> fill = [&](int i) {
    if (i == n) {
      out.emplace_back(parts);
      return;
    }
    const int hi = i == 0 ? n : parts[i - 1];
    for (int v = n - i; v <= hi; ++v) {
      parts[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<FerrersShape> shapes_up_to_box(int box) {
  std::vector<FerrersShape> out;
  for (int n = 1; n <= box; ++n) {
    auto level = shapes_in_box(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void for_each_transversal(const FerrersShape& shape, const std::function<void(const Permutation&)>& fn) {
  const int n = shape.rows();
  std::vector<int> word(n);
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> place = [&](int col) {
    if (col > n) {
      fn(from_trusted(word));
      return;
    }
    const int height = shape.column_height(col);
    for (int row = 1; row <= height; ++row) {
      if (used[row]) continue;
      used[row] = true;
      word[col - 1] = row;
      place(col + 1);
      used[row] = false;
    }
  };
  place(1);
}

std::vector<Permutation> transversals(const FerrersShape& shape) {
  std::vector<Permutation> out;
  for_each_transversal(shape, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::string to_string(const FerrersShape& shape) {
  std::string out;
  for (int i = 0; i < shape.rows(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(shape.parts()[i]);
  }
  return out;
}

FerrersShape parse_shape(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find(',', pos);
    std::string_view token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw usage_error("bad token '" + std::string(token) + "' in shape '" + std::string(text) + "'");
    parts.push_back(v);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  try {
    return FerrersShape(std::move(parts));
  } catch (const usage_error& e) {
    throw usage_error("'" + std::string(text) + "' is not a Ferrers shape: " + e.what());
  }
}

}  // namespace ewe
