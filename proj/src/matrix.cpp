#include "cychom/matrix.hpp"

#include <sstream>

namespace cychom {

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      data_(static_cast<std::size_t>(rows) * cols, Scalar(f)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::of(f, 1);
  return m;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  // Left-factor-major index convention, fixed globally: row (i_a, i_b)
  // flattens to i_a * b.rows + i_b.
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const Scalar& s = a.at(ia, ja);
      if (s.is_zero()) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb) {
          if (b.at(ib, jb).is_zero()) continue;
          m.at(ia * b.rows() + ib, ja * b.cols() + jb) = s * b.at(ib, jb);
        }
    }
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  a.check_same_field(b);
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty column");
  Matrix m(static_cast<int>(entries.size()), 1, entries[0].field());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(static_cast<int>(i), 0) = entries[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_same_field(o);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix m(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (b.is_zero()) continue;
        m.at(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  Matrix m(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_field(o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in difference");
  Matrix m(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_, field_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::col_slice(int j0, int j1) const {
  Matrix m(rows_, j1 - j0, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = j0; j < j1; ++j) m.at(i, j - j0) = at(i, j);
  return m;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  if (pivots) pivots->clear();
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int best = -1;
    std::size_t best_cx = 0;
    for (int i = r; i < rows_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      std::size_t cx = m.at(i, c).complexity();
      if (best < 0 || cx < best_cx) best = i, best_cx = cx;
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(best, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < cols_; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

Matrix::RankKernel Matrix::rank_and_kernel() const {
  std::vector<int> pivots;
  Matrix r = rref(&pivots);
  RankKernel out;
  out.rank = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(cols_, Scalar(field_));
    v[c] = Scalar::of(field_, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      if (pivots[k] < c) v[pivots[k]] = -r.at(static_cast<int>(k), c);
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

int Matrix::rank() const {
  std::vector<int> pivots;
  rref(&pivots);
  return static_cast<int>(pivots.size());
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::of(field_, 1);
  }
  std::vector<int> pivots;
  Matrix r = aug.rref(&pivots);
  if (static_cast<int>(pivots.size()) < rows_ || (rows_ > 0 && pivots[rows_ - 1] >= cols_))
    return std::nullopt;
  for (int k = 0; k < rows_; ++k)
    if (pivots[k] != k) return std::nullopt;
  return r.col_slice(cols_, 2 * cols_);
}

Matrix Matrix::reduce_mod(std::uint64_t p) const {
  Matrix m(rows_, cols_, Field::Fp(p));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).reduce_mod(p);
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << field_.str() << "\n";
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]\n";
  }
  return os.str();
}

Quotient::Quotient(int ambient, const Field& f) : Quotient(ambient, Matrix(ambient, 0, f)) {}

Quotient::Quotient(int ambient, const Matrix& subspace_columns) : ambient_(ambient) {
  if (subspace_columns.rows() != ambient)
    throw std::invalid_argument("subspace columns do not live in the ambient space");
  const Field& f = subspace_columns.field();
  // Incremental reduced row echelon of the generators (processed as rows).
  // The generator families produced upstream are highly redundant and very
  // sparse, so one-row-at-a-time insertion beats a full dense rref.
  std::vector<std::vector<Scalar>> rows;
  std::vector<int> pivot_of_col(ambient, -1);
  for (int g = 0; g < subspace_columns.cols(); ++g) {
    std::vector<Scalar> x(ambient, Scalar(f));
    bool nonzero = false;
    for (int r = 0; r < ambient; ++r) {
      x[r] = subspace_columns.at(r, g);
      nonzero |= !x[r].is_zero();
    }
    if (!nonzero) continue;
    for (int c = 0; c < ambient; ++c) {
      if (x[c].is_zero() || pivot_of_col[c] < 0) continue;
      Scalar factor = x[c];
      const auto& row = rows[pivot_of_col[c]];
      for (int l = c; l < ambient; ++l)
        if (!row[l].is_zero()) x[l] -= factor * row[l];
    }
    int p = -1;
    for (int c = 0; c < ambient; ++c)
      if (!x[c].is_zero()) {
        p = c;
        break;
      }
    if (p < 0) continue;
    Scalar inv = x[p].inverse();
    for (int c = p; c < ambient; ++c)
      if (!x[c].is_zero()) x[c] = x[c] * inv;
    for (auto& row : rows) {
      Scalar v = row[p];
      if (v.is_zero()) continue;
      for (int l = p; l < ambient; ++l)
        if (!x[l].is_zero()) row[l] -= v * x[l];
    }
    pivot_of_col[p] = static_cast<int>(rows.size());
    rows.push_back(std::move(x));
  }
  std::vector<int> pivots;
  for (int c = 0; c < ambient; ++c)
    if (pivot_of_col[c] >= 0) pivots.push_back(c);
  int r = static_cast<int>(pivots.size());
  sub_rref_ = Matrix(r, ambient, f);
  for (int i = 0; i < r; ++i) {
    const auto& row = rows[pivot_of_col[pivots[i]]];
    for (int j = 0; j < ambient; ++j) sub_rref_.at(i, j) = row[j];
  }
  std::vector<int> comp;
  std::vector<int> comp_index(ambient, -1);
  for (int j = 0; j < ambient; ++j)
    if (pivot_of_col[j] < 0) {
      comp_index[j] = static_cast<int>(comp.size());
      comp.push_back(j);
    }
  int d = static_cast<int>(comp.size());
  projection_ = Matrix(d, ambient, f);
  for (int j = 0; j < ambient; ++j) {
    if (pivot_of_col[j] < 0) {
      projection_.at(comp_index[j], j) = Scalar::of(f, 1);
    } else {
      const auto& row = rows[pivot_of_col[j]];
      for (int i = 0; i < d; ++i) projection_.at(i, j) = -row[comp[i]];
    }
  }
  section_ = Matrix(ambient, d, f);
  for (int i = 0; i < d; ++i) section_.at(comp[i], i) = Scalar::of(f, 1);
}

bool Quotient::descends(const Quotient& target, const Matrix& f, const Quotient& source) {
  return (target.projection_ * (f * source.sub_rref_.transpose())).is_zero();
}

Matrix Quotient::induced(const Quotient& target, const Matrix& f, const Quotient& source) {
  if (f.rows() != target.ambient_ || f.cols() != source.ambient_)
    throw std::invalid_argument("induced: ambient shape mismatch");
  if (!descends(target, f, source))
    throw std::invalid_argument("induced: map does not descend to the quotient");
  return target.projection_ * (f * source.section_);
}

}  // namespace cychom
