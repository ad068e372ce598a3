#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bolalg/rational.hpp"

namespace bolalg {

/// Coordinate vector over Q. Length is fixed at construction.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  std::span<const Scalar> coords() const noexcept { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Scalar& s);
  /// this += s * other
  Vector& add_scaled(const Scalar& s, const Vector& other);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Scalar(-1); }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> coords_;
};

std::string to_string(const Vector& v);

/// Dense rational matrix, row-major. Dimensions are immutable.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_col(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;
  Vector apply(const Vector& v) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);
  Matrix& add_scaled(const Scalar& s, const Matrix& other);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::string to_string(const Matrix& m);

/// Block-diagonal matrix diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix reduced;                    ///< same shape as input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Canonical reduced row-echelon form by exact Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A linear subspace of Q^n held as its canonical RREF basis, so equal
/// subspaces compare equal member-wise.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, std::span<const Vector> vectors);
  static Subspace span(std::size_t ambient, std::initializer_list<Vector> vectors);
  /// Row space of `m`.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis_matrix() const noexcept { return basis_; }
  std::vector<Vector> basis() const;
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Standard-basis indices that are not pivots: they complete the basis.
  std::vector<std::size_t> complement_indices() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of `v` in the canonical basis, or nullopt when v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Remainder of `v` after eliminating pivot coordinates; zero iff v is inside.
  Vector reduce(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Subspace& s);

/// Canonical basis of {v | m v = 0}.
Subspace nullspace(const Matrix& m);
/// Span of the columns of `m`.
Subspace column_space(const Matrix& m);

enum class CombineMode { sum, intersect };

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
Subspace subspace_combine(const Subspace& a, const Subspace& b, CombineMode mode);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Solution set of m x = b, or nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vector& b);

}  // namespace bolalg
