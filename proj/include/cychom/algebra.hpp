#ifndef CYCHOM_ALGEBRA_HPP
#define CYCHOM_ALGEBRA_HPP

#include "cychom/matrix.hpp"
#include "cychom/report.hpp"

namespace cychom {

// Finite-dimensional unital associative algebra presented by structure
// constants: e_i e_j = sum_k mult[i][j][k] e_k.
struct Algebra {
  Field field;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<std::vector<Scalar>>> mult;
  std::vector<Scalar> unit;

  ValidationReport validate() const;  // associativity and unitality, exhaustive

  Matrix left_mult(int i) const;   // x -> e_i x
  Matrix right_mult(int i) const;  // x -> x e_i
  Matrix left_mult_by(const std::vector<Scalar>& a) const;
  Matrix right_mult_by(const std::vector<Scalar>& a) const;
  Matrix mult_matrix() const;      // A (x) A -> A, left-factor-major
  Matrix unit_column() const;
  std::vector<Scalar> basis_vec(int i) const;
  std::vector<Scalar> product(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

// (A,A)-bimodule with commuting unital left/right actions, presented by one
// action matrix per algebra basis element.
struct Bimodule {
  int dim = 0;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  ValidationReport validate(const Algebra& a) const;

  static Bimodule regular(const Algebra& a);                           // M = A
  static Bimodule twisted_regular(const Algebra& a, const Matrix& sigma);  // A_sigma
  static Bimodule free_rank_one(const Algebra& a);                     // A (x) A, outer actions
  static Bimodule zero(const Algebra& a);
};

// Unital algebra endomorphism sigma : A -> A.
struct AlgebraMap {
  Matrix matrix;

  ValidationReport validate(const Algebra& a) const;  // sigma(1)=1, sigma(xy)=sigma(x)sigma(y)
  static AlgebraMap identity(const Algebra& a);
};

// ---- catalog ----------------------------------------------------------

Algebra ground_field(const Field& f);
// k[x]/(x^2), basis {1, x}
Algebra dual_numbers(const Field& f);
// group algebra of the cyclic group C_n, basis {1, g, ..., g^{n-1}}
Algebra cyclic_group_algebra(const Field& f, int n);
// monoid algebra of {1, e} with e^2 = e
Algebra idempotent_monoid_algebra(const Field& f);
// upper-triangular 2x2 matrices, basis {E11, E12, E22}
Algebra upper_triangular2(const Field& f);
// full 2x2 matrix algebra, basis {E11, E12, E21, E22}
Algebra matrix_algebra2(const Field& f);

// algebra map of dual_numbers sending x to c*x
AlgebraMap dual_numbers_scaling(const Algebra& a, long c);
// algebra map of the cyclic group algebra induced by g -> g^k
AlgebraMap cyclic_group_power(const Algebra& a, int k);

}  // namespace cychom

#endif
