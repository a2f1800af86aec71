#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "ncg/field.hpp"

namespace ncg {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Every row must have `cols` entries; throws std::invalid_argument otherwise.
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;                   // nonzero rows only
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each row, strictly increasing
};

/// Reduced row-echelon form. Pivots are the first nonzero entry of each row
/// (scaled to 1), rows are ordered by pivot column and zero rows are dropped,
/// so two matrices with the same row space reduce to the same result.
RrefResult rref(const Field& field, Matrix m);

Vector scale(const Field& field, Scalar factor, std::span<const Scalar> v);
Vector add(const Field& field, std::span<const Scalar> a, std::span<const Scalar> b);
bool is_zero(std::span<const Scalar> v);

/// Dense code of a vector (base q, coordinate 0 least significant).
std::uint64_t vector_code(const Field& field, std::span<const Scalar> v);
Vector vector_from_code(const Field& field, std::size_t len, std::uint64_t code);

/// base^exp, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp);

/// Subspace of F_q^n stored by its canonical RREF basis.
///
/// Equal subspaces have identical bases, so equality is matrix equality.
/// Operations combining two subspaces throw std::invalid_argument when the
/// ambient dimensions or fields differ.
class Subspace {
 public:
  Subspace(std::shared_ptr<const Field> field, std::size_t ambient_dim);

  static Subspace zero(std::shared_ptr<const Field> field, std::size_t ambient_dim);
  static Subspace full(std::shared_ptr<const Field> field, std::size_t ambient_dim);
  static Subspace span(std::shared_ptr<const Field> field, std::size_t ambient_dim,
                       const std::vector<Vector>& vectors);
  static Subspace row_space(std::shared_ptr<const Field> field, const Matrix& m);

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  /// v with its components along the basis removed; zero on pivot columns.
  Vector reduce(std::span<const Scalar> v) const;
  bool member(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// Vectors w with <w, b> = 0 for every basis vector b.
  Subspace annihilator() const;
  /// Non-pivot columns; the coordinate vectors on them span a complement.
  std::vector<std::size_t> complement_pivots() const;

  /// Number of elements, q^dim (saturating).
  std::uint64_t cardinality() const;
  /// Calls fn on every element (all q^dim linear combinations of the basis).
  void for_each_element(const std::function<void(const Vector&)>& fn) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && *a.field_ == *b.field_ && a.basis_ == b.basis_;
  }

 private:
  void check_compatible(const Subspace& other) const;

  std::shared_ptr<const Field> field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0} as a subspace of F_q^cols.
Subspace kernel(std::shared_ptr<const Field> field, const Matrix& m);

}  // namespace ncg
