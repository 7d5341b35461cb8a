#include "cychom/complex.hpp"

#include <sstream>

namespace cychom {

std::string ValidationReport::str() const {
  std::ostringstream os;
  if (ok()) {
    os << "valid";
  } else {
    for (const Violation& v : violations) {
      os << v.identity;
      if (v.degree >= 0) os << " at degree " << v.degree;
      if (!v.detail.empty()) os << " (" << v.detail << ")";
      os << "\n";
    }
  }
  if (skipped > 0) os << "[coverage: " << checked << " checked, " << skipped << " skipped]";
  return os.str();
}

DuchainComplex DuchainComplex::chain_only(GradedSpace g, std::vector<Matrix> b) {
  DuchainComplex c;
  c.grading = std::move(g);
  c.b = std::move(b);
  return c;
}

namespace {

void check_shapes(const DuchainComplex& c) {
  int N = c.top();
  if (N < 0) throw std::invalid_argument("empty grading");
  if (static_cast<int>(c.b.size()) != N + 1 && N > 0)
    throw std::invalid_argument("b must hold one matrix per degree 1..top");
  for (int n = 1; n <= N; ++n) {
    if (c.b[n].rows() != c.grading.dim(n - 1) || c.b[n].cols() != c.grading.dim(n))
      throw std::invalid_argument("b shape mismatch at degree " + std::to_string(n));
    if (c.b[n].field() != c.field()) throw FieldMismatch();
  }
  if (c.has_B()) {
    if (static_cast<int>(c.B.size()) < N)
      throw std::invalid_argument("B must hold one matrix per degree 0..top-1");
    for (int n = 0; n < N; ++n) {
      if (c.B[n].rows() != c.grading.dim(n + 1) || c.B[n].cols() != c.grading.dim(n))
        throw std::invalid_argument("B shape mismatch at degree " + std::to_string(n));
      if (c.B[n].field() != c.field()) throw FieldMismatch();
    }
  }
}

}  // namespace

ValidationReport validate(const DuchainComplex& c, ComplexKind kind) {
  check_shapes(c);
  ValidationReport rep;
  int N = c.top();
  for (int n = 2; n <= N; ++n) {
    ++rep.checked;
    if (!(c.b[n - 1] * c.b[n]).is_zero()) rep.fail("b b = 0", n);
  }
  if (kind == ComplexKind::chain_only) return rep;
  if (!c.has_B()) {
    if (N > 0) rep.fail("B missing", -1, "duchain complex requires a degree +1 operator");
    return rep;
  }
  for (int n = 0; n + 1 < N; ++n) {
    ++rep.checked;
    if (!(c.B[n + 1] * c.B[n]).is_zero()) rep.fail("B B = 0", n);
  }
  if (kind == ComplexKind::mixed) {
    // bB + Bb = 0 in every degree where both composites exist; at degree 0
    // only bB exists, so the anticommutator degenerates to b_1 B_0.
    for (int n = 0; n < N; ++n) {
      ++rep.checked;
      Matrix anti = c.b[n + 1] * c.B[n];
      if (n >= 1) anti = anti + c.B[n - 1] * c.b[n];
      if (!anti.is_zero()) rep.fail("bB + Bb = 0", n);
    }
  }
  return rep;
}

Betti homology(const DuchainComplex& c, int n) {
  check_shapes(c);
  int N = c.top();
  if (n < 0 || n > N) throw std::out_of_range("homology degree out of range");
  int ker = n == 0 ? c.grading.dim(0) : c.grading.dim(n) - c.b[n].rank();
  Betti out;
  if (n == N) {
    out.dim = ker;  // lower bound: b_{N+1} is above the truncation
    out.truncated = true;
  } else {
    out.dim = ker - c.b[n + 1].rank();
  }
  return out;
}

DuchainComplex total_complex(const MixedComplex& m) {
  ValidationReport rep = validate(m, ComplexKind::mixed);
  if (!rep.ok()) throw std::invalid_argument("total_complex: input is not a mixed complex:\n" + rep.str());
  int N = m.top();
  const Field& f = m.field();
  GradedSpace g;
  g.field = f;
  auto summands = [&](int n) {
    std::vector<int> inner;  // inner degrees n, n-2, ..., >= 0
    for (int d = n; d >= 0; d -= 2) inner.push_back(d);
    return inner;
  };
  for (int n = 0; n <= N; ++n) {
    int total = 0;
    for (int d : summands(n)) total += m.grading.dim(d);
    g.dims.push_back(total);
  }
  std::vector<Matrix> diff(static_cast<std::size_t>(N) + 1, Matrix());
  for (int n = 1; n <= N; ++n) {
    std::vector<int> src = summands(n), dst = summands(n - 1);
    Matrix D(g.dims[n - 1], g.dims[n], f);
    int col0 = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
      int sd = src[i];
      // b : X_{sd} -> X_{sd-1} lands in destination summand index i;
      // B : X_{sd} -> X_{sd+1} lands in destination summand index i-1.
      int row0 = 0;
      for (std::size_t j = 0; j < dst.size(); ++j) {
        const Matrix* blk = nullptr;
        if (j == i && sd >= 1) blk = &m.b[sd];
        if (j + 1 == i && sd + 1 <= N) blk = &m.B[sd];
        if (blk) {
          for (int r = 0; r < blk->rows(); ++r)
            for (int c = 0; c < blk->cols(); ++c)
              if (!blk->at(r, c).is_zero()) D.at(row0 + r, col0 + c) = blk->at(r, c);
        }
        row0 += m.grading.dim(dst[j]);
      }
      col0 += m.grading.dim(sd);
    }
    diff[n] = std::move(D);
  }
  DuchainComplex t = DuchainComplex::chain_only(std::move(g), std::move(diff));
  for (int n = 2; n <= N; ++n)
    if (!(t.b[n - 1] * t.b[n]).is_zero())
      throw std::logic_error("total_complex: (b+B)^2 != 0 at degree " + std::to_string(n));
  return t;
}

Betti hc(const MixedComplex& m, int n) {
  DuchainComplex t = total_complex(m);
  return homology(t, n);
}

Mixedify t_operator_and_mixedify(const DuchainComplex& d) {
  ValidationReport rep = validate(d, ComplexKind::duchain);
  if (!rep.ok()) throw std::invalid_argument("t_operator_and_mixedify: invalid duchain complex:\n" + rep.str());
  int N = d.top();
  const Field& f = d.field();
  Mixedify out;
  out.T.resize(N + 1, Matrix());
  for (int n = 0; n <= N; ++n) {
    Matrix t = Matrix::identity(d.grading.dim(n), f);
    if (n < N) t = t - d.b[n + 1] * d.B[n];
    if (n >= 1) t = t - d.B[n - 1] * d.b[n];
    out.T[n] = std::move(t);
  }
  // bT = Tb and BT = TB hold even at the truncation boundary because of
  // b^2 = 0 and B^2 = 0.
  for (int n = 1; n <= N; ++n)
    if (d.b[n] * out.T[n] != out.T[n - 1] * d.b[n])
      throw std::logic_error("bT != Tb at degree " + std::to_string(n));
  for (int n = 0; n < N; ++n)
    if (d.B[n] * out.T[n] != out.T[n + 1] * d.B[n])
      throw std::logic_error("BT != TB at degree " + std::to_string(n));

  GradedSpace g;
  g.field = f;
  for (int n = 0; n <= N; ++n) {
    Matrix one_minus_t = Matrix::identity(d.grading.dim(n), f) - out.T[n];
    out.quotients.emplace_back(d.grading.dim(n), one_minus_t);
    g.dims.push_back(out.quotients.back().dim());
  }
  MixedComplex q;
  q.grading = std::move(g);
  q.b.resize(N + 1, Matrix());
  q.B.resize(std::max(N, 0), Matrix());
  for (int n = 1; n <= N; ++n) q.b[n] = Quotient::induced(out.quotients[n - 1], d.b[n], out.quotients[n]);
  for (int n = 0; n < N; ++n) q.B[n] = Quotient::induced(out.quotients[n + 1], d.B[n], out.quotients[n]);
  ValidationReport mixed_rep = validate(q, ComplexKind::mixed);
  if (!mixed_rep.ok())
    throw std::logic_error("mixedify quotient failed to validate as mixed:\n" + mixed_rep.str());
  out.mixed = std::move(q);
  return out;
}

}  // namespace cychom
