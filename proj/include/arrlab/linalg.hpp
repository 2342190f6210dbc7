#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arrlab/rational.hpp"

namespace arrlab {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  /// Matrix whose columns are the given vectors.
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatVector operator*(const RatVector& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Solution set of m x = b. Empty when inconsistent; otherwise a particular
/// point plus a basis of the direction space (the null space of m).
struct AffineSolution {
  bool empty = true;
  RatVector point;
  std::vector<RatVector> directions;

  std::size_t dim() const { return directions.size(); }
  static AffineSolution whole_space(std::size_t n);
};

std::size_t rank(const RatMatrix& m);

/// Basis of the right null space. Each vector has integer entries with
/// content 1 and a positive first nonzero entry.
std::vector<RatVector> nullspace(const RatMatrix& m);

AffineSolution solve_affine(const RatMatrix& m, const RatVector& b);

/// Scales v to integer entries with content 1 and positive leading entry.
RatVector canonical_integer_vector(const RatVector& v);

/// Restricts the affine-linear equation normal . x = offset to the
/// parametrized subspace x = point + sum t_i directions_i. Returns the
/// coefficients on t and the right-hand side.
struct PulledBack {
  RatVector normal;
  Rat offset;
};
PulledBack pull_back(const RatVector& normal, const Rat& offset, const AffineSolution& space);

/// Intersection of a parametrized subspace with one hyperplane.
/// Returns std::nullopt when the hyperplane contains the subspace; an empty
/// AffineSolution when they are disjoint.
std::optional<AffineSolution> intersect(const AffineSolution& space, const RatVector& normal,
                                        const Rat& offset);

bool contains(const RatVector& normal, const Rat& offset, const AffineSolution& space);

}  // namespace arrlab
