#include "cychom/algebra.hpp"

namespace cychom {

namespace {
std::string idx_triple(int i, int j, int k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}
}  // namespace

ValidationReport Algebra::validate() const {
  ValidationReport rep;
  if (dim <= 0) {
    rep.fail("algebra dimension must be positive", -1);
    return rep;
  }
  if (static_cast<int>(mult.size()) != dim || static_cast<int>(unit.size()) != dim) {
    rep.fail("structure constant table shape mismatch", -1);
    return rep;
  }
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(mult[i].size()) != dim) {
      rep.fail("structure constant table shape mismatch", -1);
      return rep;
    }
    for (int j = 0; j < dim; ++j)
      if (static_cast<int>(mult[i][j].size()) != dim) {
        rep.fail("structure constant table shape mismatch", -1, idx_triple(i, j, 0));
        return rep;
      }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        ++rep.checked;
        std::vector<Scalar> lhs = product(product(basis_vec(i), basis_vec(j)), basis_vec(k));
        std::vector<Scalar> rhs = product(basis_vec(i), product(basis_vec(j), basis_vec(k)));
        if (lhs != rhs)
          rep.fail("associativity (e_i e_j) e_k = e_i (e_j e_k)", -1, idx_triple(i, j, k));
      }
  for (int i = 0; i < dim; ++i) {
    ++rep.checked;
    if (product(unit, basis_vec(i)) != basis_vec(i))
      rep.fail("unitality 1 e_i = e_i", -1, std::to_string(i));
    if (product(basis_vec(i), unit) != basis_vec(i))
      rep.fail("unitality e_i 1 = e_i", -1, std::to_string(i));
  }
  return rep;
}

std::vector<Scalar> Algebra::basis_vec(int i) const {
  std::vector<Scalar> v(dim, Scalar(field));
  v[i] = Scalar::of(field, 1);
  return v;
}

std::vector<Scalar> Algebra::product(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
  std::vector<Scalar> out(dim, Scalar(field));
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (int k = 0; k < dim; ++k)
        if (!mult[i][j][k].is_zero()) out[k] += c * mult[i][j][k];
    }
  }
  return out;
}

Matrix Algebra::left_mult(int i) const {
  Matrix m(dim, dim, field);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.at(k, j) = mult[i][j][k];
  return m;
}

Matrix Algebra::right_mult(int i) const {
  Matrix m(dim, dim, field);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m.at(k, j) = mult[j][i][k];
  return m;
}

Matrix Algebra::left_mult_by(const std::vector<Scalar>& a) const {
  Matrix m = Matrix::zero(dim, dim, field);
  for (int i = 0; i < dim; ++i)
    if (!a[i].is_zero()) m = m + left_mult(i).scaled(a[i]);
  return m;
}

Matrix Algebra::right_mult_by(const std::vector<Scalar>& a) const {
  Matrix m = Matrix::zero(dim, dim, field);
  for (int i = 0; i < dim; ++i)
    if (!a[i].is_zero()) m = m + right_mult(i).scaled(a[i]);
  return m;
}

Matrix Algebra::mult_matrix() const {
  Matrix m(dim, dim * dim, field);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) m.at(k, i * dim + j) = mult[i][j][k];
  return m;
}

Matrix Algebra::unit_column() const {
  Matrix m(dim, 1, field);
  for (int i = 0; i < dim; ++i) m.at(i, 0) = unit[i];
  return m;
}

ValidationReport Bimodule::validate(const Algebra& a) const {
  ValidationReport rep;
  if (static_cast<int>(left.size()) != a.dim || static_cast<int>(right.size()) != a.dim) {
    rep.fail("bimodule must carry one action matrix per algebra basis element", -1);
    return rep;
  }
  for (int i = 0; i < a.dim; ++i)
    if (left[i].rows() != dim || left[i].cols() != dim || right[i].rows() != dim ||
        right[i].cols() != dim) {
      rep.fail("action matrix shape mismatch", -1, std::to_string(i));
      return rep;
    }
  auto combine = [&](const std::vector<Matrix>& act, int i, int j) {
    Matrix m = Matrix::zero(dim, dim, a.field);
    for (int k = 0; k < a.dim; ++k)
      if (!a.mult[i][j][k].is_zero()) m = m + act[k].scaled(a.mult[i][j][k]);
    return m;
  };
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      ++rep.checked;
      std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (left[i] * left[j] != combine(left, i, j)) rep.fail("left action associativity", -1, at);
      if (right[j] * right[i] != combine(right, i, j)) rep.fail("right action associativity", -1, at);
      if (left[i] * right[j] != right[j] * left[i])
        rep.fail("left and right actions must commute", -1, at);
    }
  Matrix lu = Matrix::zero(dim, dim, a.field), ru = Matrix::zero(dim, dim, a.field);
  for (int i = 0; i < a.dim; ++i)
    if (!a.unit[i].is_zero()) {
      lu = lu + left[i].scaled(a.unit[i]);
      ru = ru + right[i].scaled(a.unit[i]);
    }
  ++rep.checked;
  if (!lu.is_identity()) rep.fail("left action unitality", -1);
  if (!ru.is_identity()) rep.fail("right action unitality", -1);
  return rep;
}

Bimodule Bimodule::regular(const Algebra& a) {
  Bimodule m;
  m.dim = a.dim;
  for (int i = 0; i < a.dim; ++i) {
    m.left.push_back(a.left_mult(i));
    m.right.push_back(a.right_mult(i));
  }
  return m;
}

Bimodule Bimodule::twisted_regular(const Algebra& a, const Matrix& sigma) {
  Bimodule m;
  m.dim = a.dim;
  for (int i = 0; i < a.dim; ++i) {
    m.left.push_back(a.left_mult(i));
    // right action through sigma: x . a = x sigma(a)
    std::vector<Scalar> sa(a.dim, Scalar(a.field));
    for (int k = 0; k < a.dim; ++k) sa[k] = sigma.at(k, i);
    m.right.push_back(a.right_mult_by(sa));
  }
  return m;
}

Bimodule Bimodule::free_rank_one(const Algebra& a) {
  Bimodule m;
  m.dim = a.dim * a.dim;
  Matrix id = Matrix::identity(a.dim, a.field);
  for (int i = 0; i < a.dim; ++i) {
    m.left.push_back(Matrix::kronecker(a.left_mult(i), id));
    m.right.push_back(Matrix::kronecker(id, a.right_mult(i)));
  }
  return m;
}

Bimodule Bimodule::zero(const Algebra& a) {
  Bimodule m;
  m.dim = 0;
  m.left.assign(a.dim, Matrix(0, 0, a.field));
  m.right.assign(a.dim, Matrix(0, 0, a.field));
  return m;
}

ValidationReport AlgebraMap::validate(const Algebra& a) const {
  ValidationReport rep;
  if (matrix.rows() != a.dim || matrix.cols() != a.dim) {
    rep.fail("algebra map shape mismatch", -1);
    return rep;
  }
  ++rep.checked;
  if (matrix * a.unit_column() != a.unit_column()) rep.fail("sigma(1) = 1", -1);
  ++rep.checked;
  if (matrix * a.mult_matrix() != a.mult_matrix() * Matrix::kronecker(matrix, matrix))
    rep.fail("sigma(xy) = sigma(x) sigma(y)", -1);
  return rep;
}

AlgebraMap AlgebraMap::identity(const Algebra& a) { return {Matrix::identity(a.dim, a.field)}; }

namespace {

Algebra blank(const Field& f, int dim) {
  Algebra a;
  a.field = f;
  a.dim = dim;
  a.mult.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(f))));
  a.unit.assign(dim, Scalar(f));
  return a;
}

}  // namespace

Algebra ground_field(const Field& f) {
  Algebra a = blank(f, 1);
  a.basis = {"1"};
  a.mult[0][0][0] = Scalar::of(f, 1);
  a.unit[0] = Scalar::of(f, 1);
  return a;
}

Algebra dual_numbers(const Field& f) {
  Algebra a = blank(f, 2);
  a.basis = {"1", "x"};
  a.mult[0][0][0] = Scalar::of(f, 1);
  a.mult[0][1][1] = Scalar::of(f, 1);
  a.mult[1][0][1] = Scalar::of(f, 1);
  // x x = 0
  a.unit[0] = Scalar::of(f, 1);
  return a;
}

Algebra cyclic_group_algebra(const Field& f, int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be positive");
  Algebra a = blank(f, n);
  for (int i = 0; i < n; ++i) {
    a.basis.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
    for (int j = 0; j < n; ++j) a.mult[i][j][(i + j) % n] = Scalar::of(f, 1);
  }
  a.unit[0] = Scalar::of(f, 1);
  return a;
}

Algebra idempotent_monoid_algebra(const Field& f) {
  Algebra a = blank(f, 2);
  a.basis = {"1", "e"};
  a.mult[0][0][0] = Scalar::of(f, 1);
  a.mult[0][1][1] = Scalar::of(f, 1);
  a.mult[1][0][1] = Scalar::of(f, 1);
  a.mult[1][1][1] = Scalar::of(f, 1);
  a.unit[0] = Scalar::of(f, 1);
  return a;
}

Algebra upper_triangular2(const Field& f) {
  Algebra a = blank(f, 3);
  a.basis = {"E11", "E12", "E22"};
  auto set = [&](int i, int j, int k) { a.mult[i][j][k] = Scalar::of(f, 1); };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  a.unit[0] = Scalar::of(f, 1);
  a.unit[2] = Scalar::of(f, 1);
  return a;
}

Algebra matrix_algebra2(const Field& f) {
  Algebra a = blank(f, 4);
  a.basis = {"E11", "E12", "E21", "E22"};
  auto idx = [](int r, int c) { return 2 * r + c; };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int r2 = 0; r2 < 2; ++r2)
        for (int c2 = 0; c2 < 2; ++c2)
          if (c == r2) a.mult[idx(r, c)][idx(r2, c2)][idx(r, c2)] = Scalar::of(f, 1);
  a.unit[idx(0, 0)] = Scalar::of(f, 1);
  a.unit[idx(1, 1)] = Scalar::of(f, 1);
  return a;
}

AlgebraMap dual_numbers_scaling(const Algebra& a, long c) {
  Matrix m = Matrix::identity(2, a.field);
  m.at(1, 1) = Scalar::of(a.field, c);
  AlgebraMap s{m};
  ValidationReport rep = s.validate(a);
  if (!rep.ok()) throw std::invalid_argument("dual_numbers_scaling: invalid map:\n" + rep.str());
  return s;
}

AlgebraMap cyclic_group_power(const Algebra& a, int k) {
  int n = a.dim;
  Matrix m(n, n, a.field);
  for (int i = 0; i < n; ++i)
    m.at(static_cast<int>((static_cast<long long>(i) * k) % n), i) = Scalar::of(a.field, 1);
  AlgebraMap s{m};
  ValidationReport rep = s.validate(a);
  if (!rep.ok()) throw std::invalid_argument("cyclic_group_power: invalid map:\n" + rep.str());
  return s;
}

}  // namespace cychom
