#pragma once

#include <optional>
#include <vector>

#include "z2lab/rational.hpp"

namespace z2lab {

using Vec = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  Vec row(int r) const;
  Vec column(int c) const;
  Matrix transpose() const;
  bool is_zero() const;

  Vec apply(const Vec& x) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& k, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form computed by fraction-free elimination on the
/// row-scaled integer matrix. `pivots[i]` is the pivot column of row i.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;
};
Echelon rref(const Matrix& m);

int rank(const Matrix& m);
/// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);
Rational determinant(const Matrix& m);

/// A subspace of ℚ^n kept as its reduced row echelon basis, so equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, const std::vector<Vec>& vectors);
  static Subspace whole(int ambient);

  int ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const noexcept { return basis_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v against basis(), or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  /// Orthogonal complement under the standard dot product.
  Subspace perp() const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  int ambient_;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

/// Block embedding: U ⊆ ℚ^a and W ⊆ ℚ^b as U × W ⊆ ℚ^{a+b}.
Subspace direct_sum(const Subspace& u, const Subspace& w);

Vec zero_vec(int n);
Vec unit_vec(int n, int i);
bool is_zero(const Vec& v);

}  // namespace z2lab
