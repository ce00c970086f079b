#pragma once

// Transport of a shape bijection f: Sav(alpha) -> Sav(beta) to a bijection
// Sav(alpha (+) sigma) -> Sav(beta (+) sigma).
//
// Cells whose strict north-east subboard contains sigma are white; every
// point sitting in a non-white cell then greys out its whole row and column.
// What remains white is a smaller Ferrers board carrying a transversal of its
// own, and f is applied there with the grey part held fixed.

#include <functional>
#include <vector>

#include "ewe/permutation.hpp"
#include "ewe/shape.hpp"

namespace ewe {

/// A bijection between transversal sets of one shape, applied shape by shape.
using ShapeBijection = std::function<Permutation(const FerrersShape&, const Permutation&)>;

struct Coloring {
  FerrersShape white_shape;  // possibly empty
  Permutation white_sub;     // transversal of white_shape
  // gray[(r-1) * n + (c-1)] for cells of the original shape; false outside it.
  std::vector<bool> gray;
  int n = 0;
  std::vector<int> white_rows;  // original 1-based rows, increasing
  std::vector<int> white_cols;  // original 1-based columns, increasing

  bool is_gray(int row, int col) const { return gray[(row - 1) * n + (col - 1)]; }
};

Coloring color_cells(const Transversal& t, const Permutation& sigma);

/// Applies `inner` to the white part. Throws contract_violation if `inner`
/// returns something that is not a transversal of the white shape.
Transversal transport(const ShapeBijection& inner, const Transversal& t, const Permutation& sigma);

}  // namespace ewe
