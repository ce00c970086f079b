#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ewe/permutation.hpp"

namespace ewe {

/// Ferrers shape in French orientation: parts[0] is the bottom row. Rows
/// and columns are 1-based in the public API; cell (r, c) exists iff
/// c <= parts[r-1].
class FerrersShape {
 public:
  FerrersShape() = default;
  /// Throws usage_error unless parts are weakly decreasing and >= 1.
  explicit FerrersShape(std::vector<int> parts);
  FerrersShape(std::initializer_list<int> parts);

  static FerrersShape square(int n);
  static FerrersShape staircase(int n);

  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int row) const { return parts_[row - 1]; }
  const std::vector<int>& parts() const { return parts_; }

  bool has_cell(int row, int col) const {
    return row >= 1 && row <= rows() && col >= 1 && col <= parts_[row - 1];
  }

  /// Number of rows whose length reaches column `col`; cell (r, col) exists iff r <= height(col).
  int column_height(int col) const;

  /// The shape contains the staircase (n, n-1, ..., 1).
  bool admits_transversal() const;

  auto operator<=>(const FerrersShape&) const = default;
  bool operator==(const FerrersShape&) const = default;

 private:
  std::vector<int> parts_;
};

struct Transversal {
  FerrersShape shape;
  Permutation perm;

  bool operator==(const Transversal&) const = default;
};

/// perm^{-1}(i) <= lambda_i for every row i. Throws usage_error on length mismatch.
bool is_transversal(const FerrersShape& shape, const Permutation& perm);

/// Validating constructor.
Transversal make_transversal(FerrersShape shape, Permutation perm);

/// Containment as a transversal: an occurrence counts only if the rows and
/// columns it spans form a full square inside the shape.
bool transversal_contains(const Transversal& t, const Permutation& pattern);
bool transversal_contains(const FerrersShape& shape, const Permutation& perm, const Permutation& pattern);

/// Every transversal-admitting shape with exactly n rows and parts <= n, in
/// lexicographic order of the part lists.
std::vector<FerrersShape> shapes_in_box(int n);

/// shapes_in_box(1) ... shapes_in_box(box), concatenated.
std::vector<FerrersShape> shapes_up_to_box(int box);

void for_each_transversal(const FerrersShape& shape, const std::function<void(const Permutation&)>& fn);
std::vector<Permutation> transversals(const FerrersShape& shape);

/// "5,5,5,3,2"
std::string to_string(const FerrersShape& shape);
FerrersShape parse_shape(std::string_view text);

}  // namespace ewe
