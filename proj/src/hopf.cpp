#include "cychom/hopf.hpp"

#include <memory>

namespace cychom {

namespace {

// Sweedler legs of a (dim*dim) x dim matrix column: pairs ((k,l), value).
struct Legs {
  const Matrix& m;
  int dim;
  template <typename F>
  void for_col(int col, F&& fn) const {
    for (int k = 0; k < dim; ++k)
      for (int l = 0; l < dim; ++l) {
        const Scalar& v = m.at(k * dim + l, col);
        if (!v.is_zero()) fn(k, l, v);
      }
  }
};

}  // namespace

ValidationReport Bialgebra::validate() const {
  ValidationReport rep = algebra.validate();
  if (!rep.ok()) return rep;
  int d = dim();
  const Field& f = field();
  if (comult.rows() != d * d || comult.cols() != d || counit.rows() != 1 || counit.cols() != d) {
    rep.fail("comultiplication/counit shape mismatch", -1);
    return rep;
  }
  Matrix id = Matrix::identity(d, f);
  ++rep.checked;
  if (Matrix::kronecker(comult, id) * comult != Matrix::kronecker(id, comult) * comult)
    rep.fail("coassociativity", -1);
  ++rep.checked;
  if (Matrix::kronecker(counit, id) * comult != id) rep.fail("left counitality", -1);
  if (Matrix::kronecker(id, counit) * comult != id) rep.fail("right counitality", -1);
  // Delta and eps are algebra maps; the H (x) H multiplication needs the
  // middle-two interchange on the left-factor-major basis
  Matrix mult = algebra.mult_matrix();
  Matrix mult_hh(d * d, d * d * d * d, f);
  for (int g = 0; g < d; ++g)
    for (int h = 0; h < d; ++h)
      for (int g2 = 0; g2 < d; ++g2)
        for (int h2 = 0; h2 < d; ++h2) {
          int col = ((g * d + h) * d + g2) * d + h2;
          for (int p = 0; p < d; ++p) {
            if (algebra.mult[g][g2][p].is_zero()) continue;
            for (int q = 0; q < d; ++q) {
              Scalar v = algebra.mult[g][g2][p] * algebra.mult[h][h2][q];
              if (!v.is_zero()) mult_hh.at(p * d + q, col) = v;
            }
          }
        }
  ++rep.checked;
  if (comult * mult != mult_hh * Matrix::kronecker(comult, comult))
    rep.fail("Delta is an algebra map", -1);
  ++rep.checked;
  if (counit * mult != Matrix::kronecker(counit, counit)) rep.fail("eps is an algebra map", -1);
  Matrix unit = algebra.unit_column();
  ++rep.checked;
  if (comult * unit != Matrix::kronecker(unit, unit)) rep.fail("Delta(1) = 1 (x) 1", -1);
  if (!(counit * unit).is_identity()) rep.fail("eps(1) = 1", -1);
  return rep;
}

Bialgebra grouplike_bialgebra(const Algebra& a) {
  ValidationReport ra = a.validate();
  if (!ra.ok()) throw std::invalid_argument("invalid algebra:\n" + ra.str());
  Bialgebra h;
  h.algebra = a;
  h.comult = Matrix(a.dim * a.dim, a.dim, a.field);
  h.counit = Matrix(1, a.dim, a.field);
  for (int i = 0; i < a.dim; ++i) {
    h.comult.at(i * a.dim + i, i) = Scalar::of(a.field, 1);
    h.counit.at(0, i) = Scalar::of(a.field, 1);
  }
  ValidationReport rep = h.validate();
  if (!rep.ok()) throw std::invalid_argument("grouplike bialgebra invalid:\n" + rep.str());
  return h;
}

Matrix galois_map(const Bialgebra& h) {
  int d = h.dim();
  Matrix beta(d * d, d * d, h.field());
  Legs delta{h.comult, d};
  for (int i = 0; i < d; ++i)
    delta.for_col(i, [&](int k, int l, const Scalar& v) {
      for (int j = 0; j < d; ++j)
        for (int m = 0; m < d; ++m) {
          const Scalar& c = h.algebra.mult[l][j][m];
          if (!c.is_zero()) beta.at(k * d + m, i * d + j) += v * c;
        }
    });
  return beta;
}

std::optional<HopfStructure> is_hopf_and_antipode(const Bialgebra& h) {
  ValidationReport rep = h.validate();
  if (!rep.ok()) throw std::invalid_argument("invalid bialgebra:\n" + rep.str());
  Matrix beta = galois_map(h);
  auto inv = beta.inverse();
  if (!inv) return std::nullopt;
  int d = h.dim();
  const Field& f = h.field();
  // translation map h -> h_+ (x) h_- = beta^{-1}(h (x) 1)
  Matrix translation(d * d, d, f);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (h.algebra.unit[k].is_zero()) continue;
      for (int r = 0; r < d * d; ++r) {
        const Scalar& v = inv->at(r, i * d + k);
        if (!v.is_zero()) translation.at(r, i) += v * h.algebra.unit[k];
      }
    }
  // S(h) = eps(h_+) h_-
  Matrix antipode(d, d, f);
  Legs tr{translation, d};
  for (int i = 0; i < d; ++i)
    tr.for_col(i, [&](int k, int l, const Scalar& v) {
      const Scalar& e = h.counit.at(0, k);
      if (!e.is_zero()) antipode.at(l, i) += v * e;
    });
  Matrix mult = h.algebra.mult_matrix();
  Matrix id = Matrix::identity(d, f);
  Matrix eta_eps = h.algebra.unit_column() * h.counit;
  if (mult * Matrix::kronecker(antipode, id) * h.comult != eta_eps)
    throw std::logic_error("left antipode axiom fails despite invertible Galois map");
  if (mult * Matrix::kronecker(id, antipode) * h.comult != eta_eps)
    throw std::logic_error("right antipode axiom fails despite invertible Galois map");
  return HopfStructure{h, std::move(antipode), std::move(translation)};
}

Matrix yd_braiding(const Bialgebra& h) {
  int d = h.dim();
  Matrix braid(d * d, d * d, h.field());
  Legs delta{h.comult, d};
  for (int i = 0; i < d; ++i)
    delta.for_col(i, [&](int k, int l, const Scalar& v) {
      for (int j = 0; j < d; ++j)
        for (int m = 0; m < d; ++m) {
          const Scalar& c = h.algebra.mult[k][j][m];
          if (!c.is_zero()) braid.at(m * d + l, i * d + j) += v * c;
        }
    });
  return braid;
}

ValidationReport ModuleComodule::validate(const Bialgebra& h, Side side) const {
  ValidationReport rep;
  int d = h.dim();
  const Field& f = h.field();
  if (static_cast<int>(action.size()) != d) {
    rep.fail("one action matrix per basis element required", -1);
    return rep;
  }
  for (const Matrix& m : action)
    if (m.rows() != dim || m.cols() != dim) {
      rep.fail("action matrix shape mismatch", -1);
      return rep;
    }
  if (coaction.rows() != d * dim || coaction.cols() != dim) {
    rep.fail("coaction shape mismatch", -1);
    return rep;
  }
  auto combine = [&](int i, int j) {
    Matrix m = Matrix::zero(dim, dim, f);
    for (int k = 0; k < d; ++k)
      if (!h.algebra.mult[i][j][k].is_zero()) m = m + action[k].scaled(h.algebra.mult[i][j][k]);
    return m;
  };
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      ++rep.checked;
      Matrix lhs = side == Side::right ? action[j] * action[i] : action[i] * action[j];
      if (lhs != combine(i, j)) rep.fail("action associativity", -1);
    }
  Matrix u = Matrix::zero(dim, dim, f);
  for (int i = 0; i < d; ++i)
    if (!h.algebra.unit[i].is_zero()) u = u + action[i].scaled(h.algebra.unit[i]);
  ++rep.checked;
  if (!u.is_identity()) rep.fail("action unitality", -1);
  Matrix idm = Matrix::identity(dim, f);
  Matrix idh = Matrix::identity(d, f);
  ++rep.checked;
  if (Matrix::kronecker(h.comult, idm) * coaction != Matrix::kronecker(idh, coaction) * coaction)
    rep.fail("coaction coassociativity", -1);
  ++rep.checked;
  if (Matrix::kronecker(h.counit, idm) * coaction != idm) rep.fail("coaction counitality", -1);
  return rep;
}

ModuleComodule trivial_coefficients(const Bialgebra& h) {
  ModuleComodule m;
  m.dim = 1;
  const Field& f = h.field();
  for (int i = 0; i < h.dim(); ++i) {
    Matrix a(1, 1, f);
    a.at(0, 0) = h.counit.at(0, i);
    m.action.push_back(std::move(a));
  }
  m.coaction = Matrix(h.dim(), 1, f);
  for (int i = 0; i < h.dim(); ++i) m.coaction.at(i, 0) = h.algebra.unit[i];
  return m;
}

bool yd_check(const HopfStructure& h, const ModuleComodule& n, ValidationReport* why) {
  const Bialgebra& bi = h.bialgebra;
  int d = bi.dim();
  const Field& f = bi.field();
  ValidationReport rep = n.validate(bi, ModuleComodule::Side::left);
  Legs tr{h.translation, d}, delta{bi.comult, d};
  // (h n)_(-1) (x) (h n)_(0) = h_+(1) n_(-1) h_- (x) h_+(2) n_(0)
  for (int g = 0; g < d && rep.ok(); ++g) {
    Matrix lhs = n.coaction * n.action[g];
    Matrix rhs(d * n.dim, n.dim, f);
    for (int nu = 0; nu < n.dim; ++nu)
      for (int p = 0; p < d; ++p)
        for (int rho = 0; rho < n.dim; ++rho) {
          const Scalar& cv = n.coaction.at(p * n.dim + rho, nu);
          if (cv.is_zero()) continue;
          tr.for_col(g, [&](int kp, int km, const Scalar& tv) {
            delta.for_col(kp, [&](int k1, int k2, const Scalar& dv) {
              for (int q1 = 0; q1 < d; ++q1) {
                const Scalar& m1 = bi.algebra.mult[k1][p][q1];
                if (m1.is_zero()) continue;
                for (int q2 = 0; q2 < d; ++q2) {
                  const Scalar& m2 = bi.algebra.mult[q1][km][q2];
                  if (m2.is_zero()) continue;
                  const Matrix& act = n.action[k2];
                  for (int eta = 0; eta < n.dim; ++eta) {
                    const Scalar& av = act.at(eta, rho);
                    if (!av.is_zero()) rhs.at(q2 * n.dim + eta, nu) += cv * tv * dv * m1 * m2 * av;
                  }
                }
              }
            });
          });
        }
    ++rep.checked;
    if (lhs != rhs) rep.fail("Yetter-Drinfel'd condition", -1, "basis element " + std::to_string(g));
  }
  if (why) *why = rep;
  return rep.ok();
}

bool sayd_check(const HopfStructure& h, const ModuleComodule& m, const ModuleComodule& n) {
  const Bialgebra& bi = h.bialgebra;
  int d = bi.dim();
  const Field& f = bi.field();
  int dmn = m.dim * n.dim;
  Matrix stab(dmn, dmn, f);
  Legs tr{h.translation, d};
  for (int mu = 0; mu < m.dim; ++mu)
    for (int nu = 0; nu < n.dim; ++nu) {
      int col = mu * n.dim + nu;
      for (int p = 0; p < d; ++p)
        for (int mu2 = 0; mu2 < m.dim; ++mu2) {
          const Scalar& cm = m.coaction.at(p * m.dim + mu2, mu);
          if (cm.is_zero()) continue;
          for (int q = 0; q < d; ++q)
            for (int nu2 = 0; nu2 < n.dim; ++nu2) {
              const Scalar& cn = n.coaction.at(q * n.dim + nu2, nu);
              if (cn.is_zero()) continue;
              for (int r = 0; r < d; ++r) {
                const Scalar& big = bi.algebra.mult[q][p][r];  // n_(-1) m_(-1)
                if (big.is_zero()) continue;
                tr.for_col(r, [&](int kp, int km, const Scalar& tv) {
                  const Matrix& am = m.action[kp];
                  const Matrix& an = n.action[km];
                  for (int em = 0; em < m.dim; ++em) {
                    const Scalar& vm = am.at(em, mu2);
                    if (vm.is_zero()) continue;
                    for (int en = 0; en < n.dim; ++en) {
                      const Scalar& vn = an.at(en, nu2);
                      if (!vn.is_zero()) stab.at(em * n.dim + en, col) += cm * cn * big * tv * vm * vn;
                    }
                  }
                });
              }
            }
        }
    }
  return stab.is_identity();
}

namespace {

// Right H-module presentation of a tracked object.
struct RightModule {
  int dim = 0;
  std::vector<Matrix> act;
};

struct HopfObjects {
  HopfStructure hopf;
  ModuleComodule m, n;
  std::map<Word, std::shared_ptr<const RightModule>> cache;
  std::map<Word, Quotient> nquot_cache;
  int cache_len_cap = 5;

  int dimH() const { return hopf.bialgebra.dim(); }

  std::shared_ptr<const RightModule> object(const Word& w) {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    auto out = std::make_shared<RightModule>();
    const Algebra& alg = hopf.bialgebra.algebra;
    int d = dimH();
    if (w.empty()) {
      out->dim = m.dim;
      out->act = m.action;
    } else {
      Word inner_word(w.begin() + 1, w.end());
      auto inner = object(inner_word);
      out->dim = inner->dim * d;
      if (w.front() == Fun::T) {
        // (x (x) h) . g = x (x) hg
        Matrix idx = Matrix::identity(inner->dim, alg.field);
        for (int g = 0; g < d; ++g) out->act.push_back(Matrix::kronecker(idx, alg.right_mult(g)));
      } else {
        // (h (x) x) . g = g_- h (x) x g_+
        Legs tr{hopf.translation, d};
        for (int g = 0; g < d; ++g) {
          Matrix a(out->dim, out->dim, alg.field);
          tr.for_col(g, [&](int kp, int km, const Scalar& tv) {
            a = a + Matrix::kronecker(alg.left_mult(km), inner->act[kp]).scaled(tv);
          });
          out->act.push_back(std::move(a));
        }
      }
    }
    if (static_cast<int>(w.size()) <= cache_len_cap) cache.emplace(w, out);
    return out;
  }

  int dim_of(const Word& w) const {
    int d = m.dim;
    for (std::size_t i = 0; i < w.size(); ++i) d *= dimH();
    return d;
  }

  // N(X) = X (x)_H N0
  const Quotient& nquot(const Word& w) {
    auto it = nquot_cache.find(w);
    if (it != nquot_cache.end()) return it->second;
    auto obj = object(w);
    const Field& f = hopf.bialgebra.field();
    int d = dimH();
    Matrix span(obj->dim * n.dim, obj->dim * n.dim * d, f);
    int gen = 0;
    for (int g = 0; g < d; ++g)
      for (int xi = 0; xi < obj->dim; ++xi)
        for (int nu = 0; nu < n.dim; ++nu) {
          // (x . e_g) (x) n - x (x) (e_g . n)
          for (int eta = 0; eta < obj->dim; ++eta) {
            const Scalar& v = obj->act[g].at(eta, xi);
            if (!v.is_zero()) span.at(eta * n.dim + nu, gen) += v;
          }
          for (int en = 0; en < n.dim; ++en) {
            const Scalar& v = n.action[g].at(en, nu);
            if (!v.is_zero()) span.at(xi * n.dim + en, gen) -= v;
          }
          ++gen;
        }
    return nquot_cache.emplace(w, Quotient(obj->dim * n.dim, span)).first->second;
  }
};

EngineInstance make_hopf_instance(std::shared_ptr<HopfObjects> objs) {
  const HopfStructure& h = objs->hopf;
  const Field f = h.bialgebra.field();
  const int d = h.bialgebra.dim();
  const Algebra alg = h.bialgebra.algebra;
  const ModuleComodule m = objs->m;

  EngineInstance inst;
  inst.field = f;
  inst.name = "hopf-cyclic(dim " + std::to_string(d) + ")";
  inst.dim = [objs](const Word& w) { return objs->dim_of(w); };
  inst.dimN = [objs](const Word& w) { return objs->nquot(w).dim(); };

  inst.counitT = [objs, d, f](const Word& w) {
    auto obj = objs->object(w);
    Matrix eps(obj->dim, obj->dim * d, f);
    for (int j = 0; j < d; ++j)
      for (int xi = 0; xi < obj->dim; ++xi)
        for (int eta = 0; eta < obj->dim; ++eta)
          if (!obj->act[j].at(eta, xi).is_zero()) eps.at(eta, xi * d + j) = obj->act[j].at(eta, xi);
    return eps;
  };
  inst.comultT = [objs, d, f, alg](const Word& w) {
    int dx = objs->dim_of(w);
    Matrix delta(dx * d * d, dx * d, f);
    for (int xi = 0; xi < dx; ++xi)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          if (!alg.unit[k].is_zero()) delta.at((xi * d + k) * d + j, xi * d + j) = alg.unit[k];
    return delta;
  };
  inst.counitS = [objs, d, f, h](const Word& w) {
    int dx = objs->dim_of(w);
    Matrix eps(dx, d * dx, f);
    for (int i = 0; i < d; ++i) {
      const Scalar& e = h.bialgebra.counit.at(0, i);
      if (e.is_zero()) continue;
      for (int xi = 0; xi < dx; ++xi) eps.at(xi, i * dx + xi) = e;
    }
    return eps;
  };
  inst.comultS = [objs, d, f, h](const Word& w) {
    return Matrix::kronecker(h.bialgebra.comult, Matrix::identity(objs->dim_of(w), f));
  };
  inst.chi = [objs, d, f, h, alg](const Word& w) {
    // (c (x) x) (x) b -> b_- c (x) (x (x) b_+)
    int dx = objs->dim_of(w);
    Matrix chi(d * dx * d, d * dx * d, f);
    Legs tr{h.translation, d};
    for (int b = 0; b < d; ++b)
      tr.for_col(b, [&](int kp, int km, const Scalar& tv) {
        for (int c = 0; c < d; ++c)
          for (int mm = 0; mm < d; ++mm) {
            const Scalar& mv = alg.mult[km][c][mm];
            if (mv.is_zero()) continue;
            for (int xi = 0; xi < dx; ++xi)
              chi.at((mm * dx + xi) * d + kp, (c * dx + xi) * d + b) += tv * mv;
          }
      });
    return chi;
  };
  inst.mapT = [d, f](const Word&, const Word&, const Matrix& g) {
    return Matrix::kronecker(g, Matrix::identity(d, f));
  };
  inst.mapS = [d, f](const Word&, const Word&, const Matrix& g) {
    return Matrix::kronecker(Matrix::identity(d, f), g);
  };
  inst.mapN = [objs, f](const Word& src, const Word& dst, const Matrix& g) {
    Matrix amb = Matrix::kronecker(g, Matrix::identity(objs->n.dim, f));
    return Quotient::induced(objs->nquot(dst), amb, objs->nquot(src));
  };
  // rho : m (x) h -> h_- m_(-1) (x) m_(0) h_+
  {
    Matrix rho(d * m.dim, m.dim * d, f);
    Legs tr{h.translation, d};
    for (int mu = 0; mu < m.dim; ++mu)
      for (int j = 0; j < d; ++j) {
        int col = mu * d + j;
        for (int p = 0; p < d; ++p)
          for (int mu2 = 0; mu2 < m.dim; ++mu2) {
            const Scalar& cv = m.coaction.at(p * m.dim + mu2, mu);
            if (cv.is_zero()) continue;
            tr.for_col(j, [&](int kp, int km, const Scalar& tv) {
              for (int q = 0; q < d; ++q) {
                const Scalar& mv = alg.mult[km][p][q];
                if (mv.is_zero()) continue;
                const Matrix& am = m.action[kp];
                for (int em = 0; em < m.dim; ++em) {
                  const Scalar& av = am.at(em, mu2);
                  if (!av.is_zero()) rho.at(q * m.dim + em, col) += cv * tv * mv * av;
                }
              }
            });
          }
      }
    inst.rho = std::move(rho);
  }
  inst.lambda = [objs, d, f, h, alg](const Word& w) {
    // (h (x) x) (x)_H n -> (x . n_(-1)+ h_+) (x) (h_- n_(-1)-) (x)_H n_(0)
    auto obj = objs->object(w);
    const ModuleComodule& n0 = objs->n;
    int dx = obj->dim;
    Matrix phi(dx * d * n0.dim, d * dx * n0.dim, f);
    Legs tr{h.translation, d};
    for (int i = 0; i < d; ++i)
      for (int xi = 0; xi < dx; ++xi)
        for (int nu = 0; nu < n0.dim; ++nu) {
          int col = (i * dx + xi) * n0.dim + nu;
          for (int p = 0; p < d; ++p)
            for (int rho_i = 0; rho_i < n0.dim; ++rho_i) {
              const Scalar& cv = n0.coaction.at(p * n0.dim + rho_i, nu);
              if (cv.is_zero()) continue;
              tr.for_col(p, [&](int k1, int l1, const Scalar& t1) {
                tr.for_col(i, [&](int k2, int l2, const Scalar& t2) {
                  for (int q = 0; q < d; ++q) {
                    const Scalar& m1 = alg.mult[k1][k2][q];
                    if (m1.is_zero()) continue;
                    for (int r = 0; r < d; ++r) {
                      const Scalar& m2 = alg.mult[l2][l1][r];
                      if (m2.is_zero()) continue;
                      for (int eta = 0; eta < dx; ++eta) {
                        const Scalar& av = obj->act[q].at(eta, xi);
                        if (!av.is_zero())
                          phi.at((eta * d + r) * n0.dim + rho_i, col) += cv * t1 * t2 * m1 * m2 * av;
                      }
                    }
                  }
                });
              });
            }
        }
    Word tw = w, sw = w;
    tw.insert(tw.begin(), Fun::T);
    sw.insert(sw.begin(), Fun::S);
    return Quotient::induced(objs->nquot(tw), phi, objs->nquot(sw));
  };
  return inst;
}

}  // namespace

EngineInstance hopf_engine_instance(const HopfStructure& h, const ModuleComodule& m,
                                    const ModuleComodule& n) {
  ValidationReport rm = m.validate(h.bialgebra, ModuleComodule::Side::right);
  if (!rm.ok()) throw std::invalid_argument("invalid coefficient module M:\n" + rm.str());
  ValidationReport rn;
  if (!yd_check(h, n, &rn))
    throw std::invalid_argument("coefficients N fail the Yetter-Drinfel'd condition:\n" + rn.str());
  auto objs = std::make_shared<HopfObjects>();
  objs->hopf = h;
  objs->m = m;
  objs->n = n;
  return make_hopf_instance(objs);
}

Matrix hopf_closed_form_t(const HopfStructure& h, const ModuleComodule& m,
                          const ModuleComodule& n, int degree) {
  const Bialgebra& bi = h.bialgebra;
  const Algebra& alg = bi.algebra;
  int d = bi.dim();
  const Field& f = bi.field();
  int dh = 1;
  for (int i = 0; i < degree; ++i) dh *= d;
  int dimc = m.dim * dh * n.dim;
  Matrix t(dimc, dimc, f);
  Legs tr{h.translation, d};
  std::vector<int> j(degree, 0);
  for (int col = 0; col < dimc; ++col) {
    int rem = col;
    int nu = rem % n.dim;
    rem /= n.dim;
    for (int q = degree - 1; q >= 0; --q) {
      j[q] = rem % d;
      rem /= d;
    }
    int mu = rem;
    // odometer over the translation legs of h^1 .. h^n
    std::vector<std::vector<std::pair<std::pair<int, int>, Scalar>>> choices(degree);
    for (int i = 0; i < degree; ++i)
      tr.for_col(j[i], [&](int kp, int km, const Scalar& v) { choices[i].push_back({{kp, km}, v}); });
    std::vector<std::size_t> pick(degree, 0);
    bool more = true;
    for (int i = 0; i < degree; ++i)
      if (choices[i].empty()) more = false;
    while (more) {
      Scalar base = Scalar::of(f, 1);
      for (int i = 0; i < degree; ++i) base = base * choices[i][pick[i]].second;
      for (int p = 0; p < d; ++p)
        for (int mu2 = 0; mu2 < m.dim; ++mu2) {
          const Scalar& cm = m.coaction.at(p * m.dim + mu2, mu);
          if (cm.is_zero()) continue;
          for (int q = 0; q < d; ++q)
            for (int nu2 = 0; nu2 < n.dim; ++nu2) {
              const Scalar& cn = n.coaction.at(q * n.dim + nu2, nu);
              if (cn.is_zero()) continue;
              // big = n_(-1) h^n_- ... h^1_- m_(-1)
              std::vector<Scalar> big(d, Scalar(f));
              big[q] = Scalar::of(f, 1);
              for (int i = degree - 1; i >= 0; --i)
                big = alg.product(big, alg.basis_vec(choices[i][pick[i]].first.second));
              big = alg.product(big, alg.basis_vec(p));
              for (int r = 0; r < d; ++r) {
                if (big[r].is_zero()) continue;
                tr.for_col(r, [&](int bp, int bm, const Scalar& tv) {
                  Scalar coeff = base * cm * cn * big[r] * tv;
                  // output slots: m_(0) h^1_+ | h^2_+ ... h^n_+ | big_+ | big_- n_(0)
                  const Matrix& am = degree > 0 ? m.action[choices[0][pick[0]].first.first]
                                                : m.action[bp];
                  std::vector<int> outh(degree, 0);
                  for (int i = 1; i < degree; ++i) outh[i - 1] = choices[i][pick[i]].first.first;
                  if (degree > 0) outh[degree - 1] = bp;
                  const Matrix& an = n.action[bm];
                  for (int em = 0; em < m.dim; ++em) {
                    const Scalar& vm = am.at(em, mu2);
                    if (vm.is_zero()) continue;
                    for (int en = 0; en < n.dim; ++en) {
                      const Scalar& vn = an.at(en, nu2);
                      if (vn.is_zero()) continue;
                      int row = em;
                      for (int i = 0; i < degree; ++i) row = row * d + outh[i];
                      row = row * n.dim + en;
                      t.at(row, col) += coeff * vm * vn;
                    }
                  }
                });
              }
            }
        }
      if (degree == 0) break;
      more = false;
      for (int i = degree - 1; i >= 0; --i) {
        if (++pick[i] < choices[i].size()) {
          more = true;
          break;
        }
        pick[i] = 0;
      }
    }
  }
  return t;
}

HopfCyclic hopf_cyclic_module(const HopfStructure& h, const ModuleComodule& m,
                              const ModuleComodule& n, int top) {
  ValidationReport rm = m.validate(h.bialgebra, ModuleComodule::Side::right);
  if (!rm.ok()) throw std::invalid_argument("invalid coefficient module M:\n" + rm.str());
  ValidationReport rn;
  if (!yd_check(h, n, &rn))
    throw std::invalid_argument("coefficients N fail the Yetter-Drinfel'd condition:\n" + rn.str());
  auto objs = std::make_shared<HopfObjects>();
  objs->hopf = h;
  objs->m = m;
  objs->n = n;
  Engine eng(make_hopf_instance(objs));
  Engine::RL rl = eng.build_R_L(top);
  TruncatedDuplicialModule built = eng.build_CT(top);

  // transport to M (x) H^{(x)n} (x) N:
  //   from_std: m (x) hbar (x) nu -> class[(m (x) hbar (x) 1) (x) nu]
  //   to_std:   class[(m (x) hbar (x) g) (x) nu] -> m (x) hbar (x) (g . nu)
  const Algebra& alg = h.bialgebra.algebra;
  const Field& f = h.bialgebra.field();
  int d = h.bialgebra.dim();
  std::vector<Matrix> tau, tau_inv;
  for (int deg = 0; deg <= top; ++deg) {
    int dh_red = 1;
    for (int i = 0; i < deg; ++i) dh_red *= d;
    int red_dim = m.dim * dh_red * n.dim;
    int full_dim = red_dim * d;
    Matrix psi(full_dim, red_dim, f);
    for (int col = 0; col < red_dim; ++col) {
      int nu = col % n.dim;
      int head = col / n.dim;
      for (int k = 0; k < d; ++k)
        if (!alg.unit[k].is_zero()) psi.at((head * d + k) * n.dim + nu, col) += alg.unit[k];
    }
    Matrix phi(red_dim, full_dim, f);
    for (int col = 0; col < full_dim; ++col) {
      int nu = col % n.dim;
      int rest = col / n.dim;
      int g = rest % d;
      int head = rest / d;
      const Matrix& an = n.action[g];
      for (int en = 0; en < n.dim; ++en) {
        const Scalar& v = an.at(en, nu);
        if (!v.is_zero()) phi.at(head * n.dim + en, col) += v;
      }
    }
    Word w(static_cast<std::size_t>(deg + 1), Fun::T);
    const Quotient& q = objs->nquot(w);
    Matrix to_std = phi * q.section();
    Matrix from_std = q.projection() * psi;
    if (!(to_std * from_std).is_identity() || !(from_std * to_std).is_identity())
      throw std::logic_error("hopf transport is not invertible at degree " + std::to_string(deg));
    tau.push_back(std::move(to_std));
    tau_inv.push_back(std::move(from_std));
  }

  HopfCyclic out;
  out.module.field = f;
  out.module.faces.resize(top + 1);
  out.module.degens.resize(std::max(top, 0));
  for (int deg = 0; deg <= top; ++deg) out.module.dims.push_back(tau[deg].rows());
  for (int deg = 1; deg <= top; ++deg)
    for (int i = 0; i <= deg; ++i)
      out.module.faces[deg].push_back(tau[deg - 1] * built.d(deg, i) * tau_inv[deg]);
  for (int deg = 0; deg < top; ++deg)
    for (int jj = 0; jj <= deg; ++jj)
      out.module.degens[deg].push_back(tau[deg + 1] * built.s(deg, jj) * tau_inv[deg]);
  for (int deg = 0; deg <= top; ++deg)
    out.module.t.push_back(tau[deg] * built.t[deg] * tau_inv[deg]);
  if (built.augmentation) out.module.augmentation = *built.augmentation * tau_inv[0];

  // the engine operator equals the closed-form t_T
  for (int deg = 0; deg <= top; ++deg) {
    Matrix closed = hopf_closed_form_t(h, m, n, deg);
    if (out.module.t[deg] != closed)
      throw std::logic_error("engine t differs from the closed-form cyclic operator at degree " +
                             std::to_string(deg));
  }
  ValidationReport rep = check_structure(out.module, StructureLevel::duplicial);
  if (!rep.ok())
    throw std::logic_error("hopf-cyclic module fails the duplicial suite:\n" + rep.str());

  out.first_lr_failure = -1;
  for (int deg = 0; deg <= top; ++deg) {
    Matrix lr = tau[deg] * (rl.L[deg] * rl.R[deg]) * tau_inv[deg];
    if (!lr.is_identity() && out.first_lr_failure < 0) out.first_lr_failure = deg;
    out.LR.push_back(std::move(lr));
  }
  return out;
}

}  // namespace cychom
