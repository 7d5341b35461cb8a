#ifndef CYCHOM_MATRIX_HPP
#define CYCHOM_MATRIX_HPP

#include <optional>
#include <vector>

#include "cychom/scalar.hpp"

namespace cychom {

// Dense matrix over an exact field, row-major. Carrier for every linear map
// in the project (faces, degeneracies, duplicial operators, differentials,
// Galois maps, ...). Desk-scale dimensions; multiplication skips zero
// entries, which makes the highly sparse structure maps cheap.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), field_(Field::Q()) {}
  Matrix(int rows, int cols, const Field& f);

  static Matrix identity(int n, const Field& f);
  static Matrix zero(int rows, int cols, const Field& f) { return Matrix(rows, cols, f); }
  static Matrix kronecker(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);
  static Matrix column(const std::vector<Scalar>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  Matrix col_slice(int j0, int j1) const;  // columns [j0, j1)

  struct RankKernel {
    int rank = 0;
    std::vector<std::vector<Scalar>> kernel_basis;  // column vectors
  };
  // Rank and a basis of the right kernel; rank + |kernel| = cols.
  RankKernel rank_and_kernel() const;
  int rank() const;
  std::optional<Matrix> inverse() const;

  // Reduced row echelon form together with the pivot columns.
  Matrix rref(std::vector<int>* pivots = nullptr) const;

  // Elementwise reduction mod p (rational matrices only); used as a
  // cross-check oracle, never as ground truth.
  Matrix reduce_mod(std::uint64_t p) const;

  std::string str() const;

 private:
  void check_same_field(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  int rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

// Quotient of an ambient space k^n by the column span of a given matrix.
// Stores a projection onto a complement spanned by non-pivot coordinates,
// which makes induced maps on quotients deterministic.
class Quotient {
 public:
  // Trivial quotient by the zero subspace.
  Quotient(int ambient, const Field& f);
  Quotient(int ambient, const Matrix& subspace_columns);

  int ambient() const { return ambient_; }
  int dim() const { return projection_.rows(); }
  const Field& field() const { return projection_.field(); }
  const Matrix& projection() const { return projection_; }  // ambient -> dim
  const Matrix& section() const { return section_; }        // dim -> ambient
  const Matrix& subspace_rows() const { return sub_rref_; } // rref rows spanning the subspace

  // Induced map target.quot <- source.quot of a map f whose ambient version
  // sends source subspace into target subspace; throws if not well defined.
  static Matrix induced(const Quotient& target, const Matrix& f, const Quotient& source);
  // True when f (ambient -> target ambient) kills the source subspace modulo
  // the target subspace.
  static bool descends(const Quotient& target, const Matrix& f, const Quotient& source);

 private:
  int ambient_;
  Matrix sub_rref_;
  Matrix projection_;
  Matrix section_;
};

}  // namespace cychom

#endif
