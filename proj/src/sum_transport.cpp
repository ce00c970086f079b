#include "ewe/sum_transport.hpp"

#include <string>

#include "ewe/detail/matcher.hpp"
#include "ewe/errors.hpp"

namespace ewe {

namespace {

// Does the part of the transversal strictly above row r and strictly right of
// column c contain the pattern as a transversal of that subboard?
bool northeast_contains(const FerrersShape& shape, const Permutation& perm, const detail::PatternMatcher& matcher,
                        int row, int col) {
  const int n = perm.size();
  std::vector<int> values, columns;
  values.reserve(n);
  columns.reserve(n);
  for (int c = col + 1; c <= n; ++c) {
    if (perm[c - 1] > row) {
      values.push_back(perm[c - 1]);
      columns.push_back(c);
    }
  }
  const int count = static_cast<int>(values.size());
  for (int last = matcher.length() - 1; last < count; ++last)
    if (matcher.ends_at(values.data(), last, shape.column_height(columns[last]))) return true;
  return false;
}

}  // namespace

Coloring color_cells(const Transversal& t, const Permutation& sigma) {
  if (sigma.empty()) throw usage_error("sigma must be nonempty");
  const FerrersShape& shape = t.shape;
  const Permutation& perm = t.perm;
  const int n = perm.size();
  const detail::PatternMatcher matcher(sigma);

  Coloring out;
  out.n = n;
  out.gray.assign(static_cast<std::size_t>(n) * n, false);
  std::vector<bool> white(static_cast<std::size_t>(n) * n, false);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= shape.part(r) && c <= n; ++c)
      white[(r - 1) * n + (c - 1)] = northeast_contains(shape, perm, matcher, r, c);

  std::vector<bool> row_gray(n + 1, false), col_gray(n + 1, false);
  for (int c = 1; c <= n; ++c) {
    const int r = perm[c - 1];
    if (!white[(r - 1) * n + (c - 1)]) {
      row_gray[r] = true;
      col_gray[c] = true;
    }
  }

  std::vector<bool> row_has_white(n + 1, false), col_has_white(n + 1, false);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= shape.part(r) && c <= n; ++c) {
      const bool w = white[(r - 1) * n + (c - 1)] && !row_gray[r] && !col_gray[c];
      out.gray[(r - 1) * n + (c - 1)] = !w;
      if (w) row_has_white[r] = col_has_white[c] = true;
    }
  }
  for (int r = 1; r <= n; ++r)
    if (row_has_white[r]) out.white_rows.push_back(r);
  for (int c = 1; c <= n; ++c)
    if (col_has_white[c]) out.white_cols.push_back(c);

  if (out.white_rows.size() != out.white_cols.size())
    throw contract_violation("white region has " + std::to_string(out.white_rows.size()) + " rows but " +
                             std::to_string(out.white_cols.size()) + " columns");

  const int m = static_cast<int>(out.white_rows.size());
  std::vector<int> row_index(n + 1, 0);
  for (int i = 0; i < m; ++i) row_index[out.white_rows[i]] = i + 1;

  std::vector<int> parts(m);
  for (int i = 0; i < m; ++i) {
    const int r = out.white_rows[i];
    int len = 0;
    for (int c : out.white_cols)
      if (!out.gray[(r - 1) * n + (c - 1)] && c <= shape.part(r)) ++len;
    parts[i] = len;
  }
  out.white_shape = FerrersShape(std::move(parts));

  std::vector<int> sub(m);
  for (int j = 0; j < m; ++j) {
    const int r = perm[out.white_cols[j] - 1];
    if (row_index[r] == 0) throw contract_violation("white column holds a point in a grey row");
    sub[j] = row_index[r];
  }
  out.white_sub = Permutation(std::move(sub));
  if (!is_transversal(out.white_shape, out.white_sub))
    throw contract_violation("white subpermutation is not a transversal of the white shape");
  return out;
}

Transversal transport(const ShapeBijection& inner, const Transversal& t, const Permutation& sigma) {
  const Coloring coloring = color_cells(t, sigma);
  if (coloring.white_shape.empty()) return t;
  const Permutation image = inner(coloring.white_shape, coloring.white_sub);
  if (image.size() != coloring.white_shape.rows() || !is_transversal(coloring.white_shape, image))
    throw contract_violation("inner map returned " + to_string(image) + ", not a transversal of " +
                             to_string(coloring.white_shape));
  std::vector<int> word(t.perm.word().begin(), t.perm.word().end());
  for (std::size_t j = 0; j < coloring.white_cols.size(); ++j)
    word[coloring.white_cols[j] - 1] = coloring.white_rows[image[j] - 1];
  return Transversal{t.shape, from_trusted(std::move(word))};
}

}  // namespace ewe
