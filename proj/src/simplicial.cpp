#include "cychom/simplicial.hpp"

namespace cychom {

namespace {

void check_shapes(const TruncatedSimplicialModule& x, bool need_t, const std::vector<Matrix>* t) {
  int N = x.top();
  if (N < 0) throw std::invalid_argument("empty simplicial module");
  if (static_cast<int>(x.faces.size()) != N + 1 && N > 0)
    throw std::invalid_argument("faces must be indexed by degrees 0..top");
  for (int n = 1; n <= N; ++n) {
    if (static_cast<int>(x.faces[n].size()) != n + 1)
      throw std::invalid_argument("degree " + std::to_string(n) + " must carry n+1 faces");
    for (const Matrix& m : x.faces[n])
      if (m.rows() != x.dim(n - 1) || m.cols() != x.dim(n) || m.field() != x.field)
        throw std::invalid_argument("face shape mismatch at degree " + std::to_string(n));
  }
  if (N > 0 && static_cast<int>(x.degens.size()) < N)
    throw std::invalid_argument("degeneracies must be indexed by degrees 0..top-1");
  for (int n = 0; n < N; ++n) {
    if (static_cast<int>(x.degens[n].size()) != n + 1)
      throw std::invalid_argument("degree " + std::to_string(n) + " must carry n+1 degeneracies");
    for (const Matrix& m : x.degens[n])
      if (m.rows() != x.dim(n + 1) || m.cols() != x.dim(n) || m.field() != x.field)
        throw std::invalid_argument("degeneracy shape mismatch at degree " + std::to_string(n));
  }
  if (x.augmentation && (x.augmentation->cols() != x.dim(0) || x.augmentation->field() != x.field))
    throw std::invalid_argument("augmentation shape mismatch");
  if (need_t) {
    if (!t || static_cast<int>(t->size()) != N + 1)
      throw std::invalid_argument("duplicial operator must be present in degrees 0..top");
    for (int n = 0; n <= N; ++n)
      if ((*t)[n].rows() != x.dim(n) || (*t)[n].cols() != x.dim(n) || (*t)[n].field() != x.field)
        throw std::invalid_argument("t shape mismatch at degree " + std::to_string(n));
  }
}

Matrix pow(const Matrix& m, int e) {
  Matrix acc = Matrix::identity(m.rows(), m.field());
  for (int i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

}  // namespace

Matrix TruncatedSimplicialModule::moore_b(int n) const {
  Matrix b = Matrix::zero(dim(n - 1), dim(n), field);
  for (int i = 0; i <= n; ++i) {
    b = i % 2 == 0 ? b + faces[n][i] : b - faces[n][i];
  }
  return b;
}

DuchainComplex TruncatedSimplicialModule::moore_complex() const {
  GradedSpace g{field, dims};
  std::vector<Matrix> b(static_cast<std::size_t>(top()) + 1, Matrix());
  for (int n = 1; n <= top(); ++n) b[n] = moore_b(n);
  return DuchainComplex::chain_only(std::move(g), std::move(b));
}

ValidationReport check_structure(const TruncatedSimplicialModule& x) {
  TruncatedDuplicialModule y;
  static_cast<TruncatedSimplicialModule&>(y) = x;
  return check_structure(y, StructureLevel::simplicial);
}

ValidationReport check_structure(const TruncatedDuplicialModule& x, StructureLevel level) {
  check_shapes(x, level != StructureLevel::simplicial, &x.t);
  ValidationReport rep;
  int N = x.top();
  auto tag = [](const std::string& base, int i, int j) {
    return base + " (i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
  };
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i) {
        ++rep.checked;
        if (x.d(n - 1, i) * x.d(n, j) != x.d(n - 1, j - 1) * x.d(n, i))
          rep.fail(tag("d_i d_j = d_{j-1} d_i", i, j), n);
      }
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i) {
        ++rep.checked;
        if (x.s(n + 1, i) * x.s(n, j) != x.s(n + 1, j + 1) * x.s(n, i))
          rep.fail(tag("s_i s_j = s_{j+1} s_i", i, j), n);
      }
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        ++rep.checked;
        Matrix lhs = x.d(n + 1, i) * x.s(n, j);
        if (i == j || i == j + 1) {
          if (!lhs.is_identity()) rep.fail(tag("d_i s_j = 1", i, j), n);
        } else if (i < j) {
          if (lhs != x.s(n - 1, j - 1) * x.d(n, i)) rep.fail(tag("d_i s_j = s_{j-1} d_i", i, j), n);
        } else {
          if (lhs != x.s(n - 1, j) * x.d(n, i - 1)) rep.fail(tag("d_i s_j = s_j d_{i-1}", i, j), n);
        }
      }
  if (x.augmented() && N >= 1) {
    ++rep.checked;
    if (*x.augmentation * x.d(1, 0) != *x.augmentation * x.d(1, 1))
      rep.fail("aug d_0 = aug d_1", 1);
  }
  if (level == StructureLevel::simplicial) return rep;

  for (int n = 1; n <= N; ++n) {
    for (int i = 1; i <= n; ++i) {
      ++rep.checked;
      if (x.d(n, i) * x.t[n] != x.t[n - 1] * x.d(n, i - 1))
        rep.fail(tag("d_i t = t d_{i-1}", i, 0), n);
    }
    ++rep.checked;
    if (x.d(n, 0) * x.t[n] != x.d(n, n)) rep.fail("d_0 t = d_n", n);
  }
  for (int n = 0; n + 1 <= N; ++n) {
    for (int j = 1; j <= n; ++j) {
      ++rep.checked;
      if (x.s(n, j) * x.t[n] != x.t[n + 1] * x.s(n, j - 1))
        rep.fail(tag("s_j t = t s_{j-1}", j, 0), n);
    }
    ++rep.checked;
    if (x.s(n, 0) * x.t[n] != x.t[n + 1] * x.t[n + 1] * x.s(n, n))
      rep.fail("s_0 t = t^2 s_n", n);
  }
  if (level == StructureLevel::cyclic) {
    for (int n = 0; n <= N; ++n) {
      ++rep.checked;
      if (!pow(x.t[n], n + 1).is_identity()) rep.fail("t^{n+1} = 1", n);
    }
  }
  return rep;
}

DoldKan dold_kan_normalize(const TruncatedSimplicialModule& x) {
  ValidationReport rep = check_structure(x);
  if (!rep.ok()) throw std::invalid_argument("dold_kan_normalize: invalid simplicial module:\n" + rep.str());
  int N = x.top();
  DoldKan out;
  out.moore = x.moore_complex();
  for (int n = 0; n <= N; ++n) {
    // span of all degeneracy images from degree n-1
    Matrix span(x.dim(n), n == 0 ? 0 : x.dim(n - 1) * n, x.field);
    for (int j = 0; j < n; ++j) {
      const Matrix& s = x.s(n - 1, j);
      for (int r = 0; r < s.rows(); ++r)
        for (int c = 0; c < s.cols(); ++c) span.at(r, j * x.dim(n - 1) + c) = s.at(r, c);
    }
    out.quotients.emplace_back(x.dim(n), span);
  }
  GradedSpace g;
  g.field = x.field;
  for (int n = 0; n <= N; ++n) g.dims.push_back(out.quotients[n].dim());
  std::vector<Matrix> b(static_cast<std::size_t>(N) + 1, Matrix());
  for (int n = 1; n <= N; ++n)
    b[n] = Quotient::induced(out.quotients[n - 1], x.moore_b(n), out.quotients[n]);
  out.normalized = DuchainComplex::chain_only(std::move(g), std::move(b));
  ValidationReport chain = validate(out.normalized, ComplexKind::chain_only);
  if (!chain.ok()) throw std::logic_error("normalized complex is not a chain complex:\n" + chain.str());
  return out;
}

namespace {

// The degree +1 operators on the full module in degree n: the Connes-style
// B = (1 - t~) s_{-1} N and the bare B-hat = s_{-1} N, where t~ = (-1)^n t,
// s_{-1} = t s_n and N = sum_{i=0}^{n} t~^i.
struct ConnesB {
  Matrix full;
  Matrix bhat;
};

ConnesB connes_b(const TruncatedDuplicialModule& x, int n) {
  const Field& f = x.field;
  Matrix tsigned = n % 2 == 0 ? x.t[n] : -x.t[n];
  Matrix norm = Matrix::zero(x.dim(n), x.dim(n), f);
  Matrix power = Matrix::identity(x.dim(n), f);
  for (int i = 0; i <= n; ++i) {
    norm = norm + power;
    power = power * tsigned;
  }
  Matrix sminus1 = x.t[n + 1] * x.s(n, n);
  Matrix bhat = sminus1 * norm;
  Matrix tsigned_up = (n + 1) % 2 == 0 ? x.t[n + 1] : -x.t[n + 1];
  Matrix full = (Matrix::identity(x.dim(n + 1), f) - tsigned_up) * bhat;
  return {std::move(full), std::move(bhat)};
}

}  // namespace

DuplicialDuchain duplicial_to_duchain(const TruncatedDuplicialModule& x) {
  ValidationReport rep = check_structure(x, StructureLevel::duplicial);
  if (!rep.ok()) throw std::invalid_argument("duplicial_to_duchain: invalid duplicial module:\n" + rep.str());
  int N = x.top();
  DoldKan dk = dold_kan_normalize(x);
  DuplicialDuchain out;
  out.quotients = std::move(dk.quotients);
  out.duchain = std::move(dk.normalized);
  out.duchain.B.assign(std::max(N, 0), Matrix());
  for (int n = 0; n < N; ++n) {
    ConnesB cb = connes_b(x, n);
    Matrix induced = Quotient::induced(out.quotients[n + 1], cb.full, out.quotients[n]);
    Matrix induced_hat = Quotient::induced(out.quotients[n + 1], cb.bhat, out.quotients[n]);
    if (induced != induced_hat)
      throw std::logic_error("induced B and B-hat disagree at degree " + std::to_string(n));
    out.duchain.B[n] = std::move(induced);
  }
  for (int n = 0; n + 1 < N; ++n)
    if (!(out.duchain.B[n + 1] * out.duchain.B[n]).is_zero())
      throw std::logic_error("B^2 != 0 on the normalized complex at degree " + std::to_string(n));
  return out;
}

std::vector<Matrix> dwyer_kan_codifferential(const TruncatedDuplicialModule& x) {
  ValidationReport rep = check_structure(x, StructureLevel::duplicial);
  if (!rep.ok())
    throw std::invalid_argument("dwyer_kan_codifferential: invalid duplicial module:\n" + rep.str());
  int N = x.top();
  DoldKan dk = dold_kan_normalize(x);
  std::vector<Matrix> cod(std::max(N, 0), Matrix());
  for (int n = 0; n < N; ++n) {
    Matrix full = x.t[n + 1] * x.s(n, n);
    if (n % 2 != 0) full = -full;
    cod[n] = Quotient::induced(dk.quotients[n + 1], full, dk.quotients[n]);
  }
  for (int n = 0; n + 1 < N; ++n)
    if (!(cod[n + 1] * cod[n]).is_zero())
      throw std::logic_error("Dwyer-Kan codifferential fails to square to zero at degree " + std::to_string(n));
  return cod;
}

PiShriek pi_shriek(const TruncatedDuplicialModule& x) {
  ValidationReport rep = check_structure(x, StructureLevel::duplicial);
  if (!rep.ok()) throw std::invalid_argument("pi_shriek: invalid duplicial module:\n" + rep.str());
  int N = x.top();
  PiShriek out;
  for (int n = 0; n <= N; ++n) {
    Matrix one_minus = Matrix::identity(x.dim(n), x.field) - pow(x.t[n], n + 1);
    out.quotients.emplace_back(x.dim(n), one_minus);
  }
  TruncatedDuplicialModule y;
  y.field = x.field;
  for (int n = 0; n <= N; ++n) y.dims.push_back(out.quotients[n].dim());
  y.faces.resize(N + 1);
  y.degens.resize(std::max(N, 0));
  y.t.assign(N + 1, Matrix());
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      y.faces[n].push_back(Quotient::induced(out.quotients[n - 1], x.d(n, i), out.quotients[n]));
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      y.degens[n].push_back(Quotient::induced(out.quotients[n + 1], x.s(n, j), out.quotients[n]));
  for (int n = 0; n <= N; ++n) y.t[n] = Quotient::induced(out.quotients[n], x.t[n], out.quotients[n]);
  if (x.augmented()) y.augmentation = *x.augmentation * out.quotients[0].section();
  ValidationReport cyc = check_structure(y, StructureLevel::cyclic);
  if (!cyc.ok()) throw std::logic_error("pi_shriek quotient is not cyclic:\n" + cyc.str());
  out.cyclic = std::move(y);
  return out;
}

std::vector<Betti> hc_of_duplicial(const TruncatedDuplicialModule& x, HcRoute route) {
  int N = x.top();
  MixedComplex mixed;
  if (route == HcRoute::via_pi_shriek_K) {
    PiShriek ps = pi_shriek(x);
    DuplicialDuchain dd = duplicial_to_duchain(ps.cyclic);
    ValidationReport rep = validate(dd.duchain, ComplexKind::mixed);
    if (!rep.ok())
      throw std::logic_error("normalized complex of the cyclic quotient is not mixed:\n" + rep.str());
    mixed = std::move(dd.duchain);
  } else {
    DuplicialDuchain dd = duplicial_to_duchain(x);
    mixed = t_operator_and_mixedify(dd.duchain).mixed;
  }
  std::vector<Betti> out;
  for (int n = 0; n <= N; ++n) {
    Betti h = hc(mixed, n);
    if (n > N - 2) h.truncated = true;
    out.push_back(h);
  }
  return out;
}

Decalage decalage(const TruncatedSimplicialModule& x, DecSide side) {
  ValidationReport rep = check_structure(x);
  if (!rep.ok()) throw std::invalid_argument("decalage: invalid simplicial module:\n" + rep.str());
  if (!x.augmented()) throw std::invalid_argument("decalage requires an augmented module");
  int N = x.top();
  if (N == 0) throw std::invalid_argument("decalage: nothing to shift at top degree 0");
  Decalage out;
  TruncatedSimplicialModule& y = out.shifted;
  y.field = x.field;
  for (int n = 0; n < N; ++n) y.dims.push_back(x.dim(n + 1));
  y.faces.resize(N);
  y.degens.resize(std::max(N - 1, 0));
  bool right = side == DecSide::right;
  for (int n = 1; n < N; ++n)
    for (int i = 0; i <= n; ++i) y.faces[n].push_back(x.d(n + 1, right ? i : i + 1));
  for (int n = 0; n + 1 < N; ++n)
    for (int j = 0; j <= n; ++j) y.degens[n].push_back(x.s(n + 1, right ? j : j + 1));
  y.augmentation = x.d(1, right ? 0 : 1);
  for (int n = 0; n < N; ++n) out.counit.push_back(right ? x.d(n + 1, n + 1) : x.d(n + 1, 0));
  for (int n = 0; n + 1 < N; ++n) out.comult.push_back(right ? x.s(n + 1, n + 1) : x.s(n + 1, 0));
  ValidationReport shifted_rep = check_structure(y);
  if (!shifted_rep.ok()) throw std::logic_error("decalage output invalid:\n" + shifted_rep.str());
  return out;
}

bool duplicial_equals_decalage_coalgebra(const TruncatedDuplicialModule& x, ValidationReport* why) {
  check_shapes(x, true, &x.t);
  if (!x.augmented())
    throw std::invalid_argument("duplicial_equals_decalage_coalgebra requires an augmented module");
  int N = x.top();
  ValidationReport rep;
  if (N == 0) {
    if (why) *why = rep;
    return true;
  }
  // The two decalages are reindexings of x itself, so the morphism
  // conditions for rho_n = t_{n+1} : (Dec^r X)_n -> (Dec^l X)_n can be
  // checked in place: faces of Dec^r are d_0..d_n, of Dec^l are d_1..d_{n+1},
  // the counits are the discarded faces d_{n+1} and d_0, and the
  // comultiplications are the discarded degeneracies s_{n+1} and s_0.
  for (int n = 1; n < N; ++n)
    for (int i = 0; i <= n; ++i) {
      ++rep.checked;
      if (x.d(n + 1, i + 1) * x.t[n + 1] != x.t[n] * x.d(n + 1, i))
        rep.fail("decalage morphism: faces", n + 1);
    }
  for (int n = 0; n + 1 < N; ++n)
    for (int j = 0; j <= n; ++j) {
      ++rep.checked;
      if (x.s(n + 1, j + 1) * x.t[n + 1] != x.t[n + 2] * x.s(n + 1, j))
        rep.fail("decalage morphism: degeneracies", n + 1);
    }
  {
    ++rep.checked;
    // the shifted augmentations are the degree-1 faces d_1 and d_0
    if (x.d(1, 1) * x.t[1] != x.t[0] * x.d(1, 0))
      rep.fail("decalage morphism: augmentation", 1);
  }
  for (int n = 0; n < N; ++n) {
    ++rep.checked;
    if (x.d(n + 1, 0) * x.t[n + 1] != x.d(n + 1, n + 1))
      rep.fail("decalage counit compatibility", n + 1);
  }
  for (int n = 0; n + 1 < N; ++n) {
    ++rep.checked;
    // coassociativity of the coalgebra structure map
    if (x.t[n + 2] * (x.t[n + 2] * x.s(n + 1, n + 1)) != x.s(n + 1, 0) * x.t[n + 1])
      rep.fail("decalage comultiplication compatibility", n + 1);
  }
  if (why) *why = rep;
  return rep.ok();
}

TruncatedSimplicialModule opsimplicial(const TruncatedSimplicialModule& x) {
  ValidationReport rep = check_structure(x);
  if (!rep.ok()) throw std::invalid_argument("opsimplicial: invalid simplicial module:\n" + rep.str());
  TruncatedSimplicialModule y = x;
  int N = x.top();
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) y.faces[n][i] = x.d(n, n - i);
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) y.degens[n][j] = x.s(n, n - j);
  return y;
}

TruncatedDuplicialModule constant_module(const Field& f, int d, int top, bool with_t) {
  TruncatedDuplicialModule x;
  x.field = f;
  x.dims.assign(top + 1, d);
  x.faces.resize(top + 1);
  x.degens.resize(std::max(top, 0));
  Matrix id = Matrix::identity(d, f);
  for (int n = 1; n <= top; ++n) x.faces[n].assign(n + 1, id);
  for (int n = 0; n < top; ++n) x.degens[n].assign(n + 1, id);
  if (with_t) x.t.assign(top + 1, id);
  x.augmentation = id;
  return x;
}

}  // namespace cychom
