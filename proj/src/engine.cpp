#include "cychom/engine.hpp"

#include <sstream>

namespace cychom {

std::string word_str(const Word& w) {
  std::string s;
  for (Fun f : w) s += (f == Fun::T ? 'T' : 'S');
  return s.empty() ? "M" : s + "M";
}

Engine::Engine(EngineInstance inst) : inst_(std::move(inst)) {
  if (!inst_.dim || !inst_.counitT || !inst_.comultT || !inst_.counitS || !inst_.comultS ||
      !inst_.chi || !inst_.mapT || !inst_.mapS || !inst_.dimN || !inst_.mapN)
    throw std::invalid_argument("engine instance is missing required callbacks");
}

void Engine::require(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("engine [" + inst_.name + "]: " + what);
}

Word Engine::word_T(int count) const { return Word(static_cast<std::size_t>(count), Fun::T); }
Word Engine::word_S(int count) const { return Word(static_cast<std::size_t>(count), Fun::S); }

int Engine::dim_of(const Word& w) { return inst_.dim(w); }
int Engine::dimN_of(const Word& w) { return inst_.dimN(w); }

namespace {
Word prepend(Fun f, Word w) {
  w.insert(w.begin(), f);
  return w;
}
Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}
}  // namespace

Matrix Engine::lift(const Word& outer, const Word& src, const Word& dst, Matrix f) {
  Word cur_src = src, cur_dst = dst;
  for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
    f = *it == Fun::T ? inst_.mapT(cur_src, cur_dst, f) : inst_.mapS(cur_src, cur_dst, f);
    cur_src = prepend(*it, cur_src);
    cur_dst = prepend(*it, cur_dst);
  }
  return f;
}

Matrix Engine::chi_n_at(int n, ChiShape shape, const Word& w) {
  auto& cache = shape == ChiShape::TnS_to_STn ? chi_a_ : chi_b_;
  auto key = std::make_pair(n, w);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Matrix result;
  if (n == 0) {
    result = Matrix::identity(dim_of(prepend(Fun::S, w)), field());
  } else if (n == 1) {
    result = inst_.chi(w);
  } else if (shape == ChiShape::TnS_to_STn) {
    // (chi at T^{n-1}w) . T(chi^{n-1} at w)
    Word tn1w = concat(word_T(n - 1), w);
    Matrix inner = chi_n_at(n - 1, shape, w);
    Matrix a = inst_.chi(tn1w) *
               lift(word_T(1), concat(word_T(n - 1), prepend(Fun::S, w)),
                    prepend(Fun::S, tn1w), inner);
    // (chi^{n-1} at Tw) . T^{n-1}(chi at w)
    Matrix b = chi_n_at(n - 1, shape, prepend(Fun::T, w)) *
               lift(word_T(n - 1), prepend(Fun::T, prepend(Fun::S, w)),
                    prepend(Fun::S, prepend(Fun::T, w)), inst_.chi(w));
    require(a == b, "the two recursive factorizations of chi^n (T^nS shape) disagree at n=" +
                        std::to_string(n) + ", w=" + word_str(w));
    result = std::move(a);
  } else {
    // S(chi^{n-1} at w) . (chi at S^{n-1}w)
    Word sn1w = concat(word_S(n - 1), w);
    Matrix inner = chi_n_at(n - 1, shape, w);
    Matrix a = lift(word_S(1), prepend(Fun::T, concat(word_S(n - 1), w)),
                    concat(word_S(n - 1), prepend(Fun::T, w)), inner) *
               inst_.chi(sn1w);
    // S^{n-1}(chi at w) . (chi^{n-1} at Sw)
    Matrix b = lift(word_S(n - 1), prepend(Fun::T, prepend(Fun::S, w)),
                    prepend(Fun::S, prepend(Fun::T, w)), inst_.chi(w)) *
               chi_n_at(n - 1, shape, prepend(Fun::S, w));
    require(a == b, "the two recursive factorizations of chi^n (TS^n shape) disagree at n=" +
                        std::to_string(n) + ", w=" + word_str(w));
    result = std::move(a);
  }
  cache.emplace(key, result);
  return result;
}

Matrix Engine::iterate_chi(int n, ChiShape shape, const Word& w) {
  if (n < 0) throw std::invalid_argument("iterate_chi: negative exponent");
  return chi_n_at(n, shape, w);
}

Matrix Engine::rho_n(int n) {
  require(inst_.rho.has_value(), "rho_n needs a chi-coalgebra structure on M");
  auto it = rho_cache_.find(n);
  if (it != rho_cache_.end()) return it->second;
  // vertical composite of rho_{i,n} : S^i T^{n-i+1} M -> S^{i+1} T^{n-i} M
  Matrix acc = Matrix::identity(dim_of(word_T(n + 1)), field());
  for (int i = 0; i <= n; ++i) {
    Matrix inner = chi_n_at(n - i, ChiShape::TnS_to_STn, {}) *
                   lift(word_T(n - i), word_T(1), word_S(1), *inst_.rho);
    Matrix step = lift(word_S(i), word_T(n - i + 1),
                       prepend(Fun::S, word_T(n - i)), inner);
    acc = step * acc;
  }
  if (n >= 1) {
    // double-entry bookkeeping: both recursive factorizations must agree
    Matrix prev = rho_n(n - 1);
    Matrix rec_a = lift(word_S(1), word_T(n), word_S(n), prev) *
                   chi_n_at(n, ChiShape::TnS_to_STn, {}) *
                   lift(word_T(n), word_T(1), word_S(1), *inst_.rho);
    Matrix rec_b = lift(word_S(n), word_T(1), word_S(1), *inst_.rho) *
                   chi_n_at(n, ChiShape::TSn_to_SnT, {}) *
                   lift(word_T(1), word_T(n), word_S(n), prev);
    require(acc == rec_a,
            "rho_n disagrees with the (S rho_{n-1}) chi^n (T^n rho) factorization at n=" + std::to_string(n));
    require(acc == rec_b,
            "rho_n disagrees with the (S^n rho) chi^n (T rho_{n-1}) factorization at n=" + std::to_string(n));
  }
  rho_cache_.emplace(n, acc);
  return acc;
}

Matrix Engine::lambda_n(int n) {
  require(static_cast<bool>(inst_.lambda), "lambda_n needs a chi-opcoalgebra structure on N");
  auto it = lambda_cache_.find(n);
  if (it != lambda_cache_.end()) return it->second;
  // lambda_n = lambda_{0,n} . lambda_{1,n} ... lambda_{n,n}
  Matrix acc = Matrix::identity(dimN_of(word_S(n + 1)), field());
  for (int i = n; i >= 0; --i) {
    // lambda_{i,n} : N T^{n-i} S^{i+1} M -> N T^{n-i+1} S^i M
    Word src = concat(word_T(n - i), word_S(i + 1));
    Word mid = prepend(Fun::S, concat(word_T(n - i), word_S(i)));
    Word dst = concat(word_T(n - i + 1), word_S(i));
    Matrix chi_part = inst_.mapN(src, mid, chi_n_at(n - i, ChiShape::TnS_to_STn, word_S(i)));
    Matrix lam_part = inst_.lambda(concat(word_T(n - i), word_S(i)));
    require(lam_part.rows() == dimN_of(dst) && lam_part.cols() == dimN_of(mid),
            "lambda component shape mismatch");
    acc = (lam_part * chi_part) * acc;
  }
  lambda_cache_.emplace(n, acc);
  return acc;
}

Matrix Engine::t_T(int n) {
  require(inst_.rho.has_value() && static_cast<bool>(inst_.lambda),
          "duplicial operators need both rho and lambda");
  Matrix part1 = inst_.mapN(word_T(n + 1), concat(word_T(n), word_S(1)),
                            lift(word_T(n), word_T(1), word_S(1), *inst_.rho));
  Matrix part2 = inst_.mapN(concat(word_T(n), word_S(1)), prepend(Fun::S, word_T(n)),
                            chi_n_at(n, ChiShape::TnS_to_STn, {}));
  Matrix part3 = inst_.lambda(word_T(n));
  return part3 * part2 * part1;
}

Matrix Engine::t_S(int n) {
  Matrix part1 = inst_.lambda(word_S(n));
  Matrix part2 = inst_.mapN(prepend(Fun::T, word_S(n)), concat(word_S(n), word_T(1)),
                            chi_n_at(n, ChiShape::TSn_to_SnT, {}));
  Matrix part3 = inst_.mapN(concat(word_S(n), word_T(1)), word_S(n + 1),
                            lift(word_S(n), word_T(1), word_S(1), *inst_.rho));
  return part3 * part2 * part1;
}

Matrix Engine::face_CT(int n, int i) {
  Word inner = word_T(n - i);
  Matrix eps = inst_.counitT(inner);  // T^{n-i+1} M -> T^{n-i} M
  return inst_.mapN(word_T(n + 1), word_T(n),
                    lift(word_T(i), prepend(Fun::T, inner), inner, eps));
}

Matrix Engine::degen_CT(int n, int j) {
  Word inner = word_T(n - j);
  Matrix delta = inst_.comultT(inner);  // T^{n-j+1} M -> T^{n-j+2} M
  return inst_.mapN(
      word_T(n + 1), word_T(n + 2),
      lift(word_T(j), prepend(Fun::T, inner), prepend(Fun::T, prepend(Fun::T, inner)), delta));
}

Matrix Engine::face_CS(int n, int i) {
  Word inner = word_S(i);
  Matrix eps = inst_.counitS(inner);
  return inst_.mapN(word_S(n + 1), word_S(n),
                    lift(word_S(n - i), prepend(Fun::S, inner), inner, eps));
}

Matrix Engine::degen_CS(int n, int j) {
  Word inner = word_S(j);
  Matrix delta = inst_.comultS(inner);
  return inst_.mapN(
      word_S(n + 1), word_S(n + 2),
      lift(word_S(n - j), prepend(Fun::S, inner), prepend(Fun::S, prepend(Fun::S, inner)), delta));
}

ValidationReport Engine::validate_laws(int max_len) {
  if (validated_len_ >= max_len) return validated_report_;
  ValidationReport rep;
  const long long entry_cap = inst_.check_entry_cap;
  std::vector<Word> words;
  words.push_back({});
  std::size_t head = 0;
  while (head < words.size()) {
    Word w = words[head++];
    if (static_cast<int>(w.size()) < max_len) {
      words.push_back(prepend(Fun::T, w));
      words.push_back(prepend(Fun::S, w));
    }
  }
  auto too_big = [&](const Word& w, int extra) {
    Word probe = w;
    for (int i = 0; i < extra; ++i) probe = prepend(Fun::T, probe);
    long long d = dim_of(probe);
    return d * d > entry_cap;
  };
  for (const Word& w : words) {
    if (static_cast<int>(w.size()) > 1 && too_big(w, 3)) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    Word tw = prepend(Fun::T, w), sw = prepend(Fun::S, w);
    Word ttw = prepend(Fun::T, tw), ssw = prepend(Fun::S, sw);
    Word tsw = prepend(Fun::T, sw), stw = prepend(Fun::S, tw);
    int dw = dim_of(w);
    // comonad T at w
    if (!(inst_.counitT(tw) * inst_.comultT(w)).is_identity())
      rep.fail("T counitality (eps T) delta = 1", -1, word_str(w));
    if (!(inst_.mapT(tw, w, inst_.counitT(w)) * inst_.comultT(w)).is_identity())
      rep.fail("T counitality (T eps) delta = 1", -1, word_str(w));
    if (inst_.comultT(tw) * inst_.comultT(w) !=
        inst_.mapT(tw, ttw, inst_.comultT(w)) * inst_.comultT(w))
      rep.fail("T coassociativity", -1, word_str(w));
    // comonad S at w
    if (!(inst_.counitS(sw) * inst_.comultS(w)).is_identity())
      rep.fail("S counitality (eps S) delta = 1", -1, word_str(w));
    if (!(inst_.mapS(sw, w, inst_.counitS(w)) * inst_.comultS(w)).is_identity())
      rep.fail("S counitality (S eps) delta = 1", -1, word_str(w));
    if (inst_.comultS(sw) * inst_.comultS(w) !=
        inst_.mapS(sw, ssw, inst_.comultS(w)) * inst_.comultS(w))
      rep.fail("S coassociativity", -1, word_str(w));
    // functoriality spot checks
    if (!inst_.mapT(w, w, Matrix::identity(dw, field())).is_identity())
      rep.fail("T preserves identities", -1, word_str(w));
    if (!inst_.mapS(w, w, Matrix::identity(dw, field())).is_identity())
      rep.fail("S preserves identities", -1, word_str(w));
    if (!inst_.mapN(w, w, Matrix::identity(dw, field())).is_identity())
      rep.fail("N preserves identities", -1, word_str(w));
    {
      // eps at Tw composed with delta at w is an endomorphism of Tw
      Matrix f = inst_.counitT(tw), g = inst_.comultT(w);
      if (inst_.mapN(tw, tw, f * g) != inst_.mapN(ttw, tw, f) * inst_.mapN(tw, ttw, g))
        rep.fail("N preserves composition", -1, word_str(w));
    }
    // distributive law: two delta hexagons and two eps triangles
    if (inst_.chi(tw) * inst_.mapT(tsw, stw, inst_.chi(w)) * inst_.comultT(sw) !=
        inst_.mapS(tw, ttw, inst_.comultT(w)) * inst_.chi(w))
      rep.fail("distributive law: delta_T hexagon", -1, word_str(w));
    if (inst_.mapS(tw, w, inst_.counitT(w)) * inst_.chi(w) != inst_.counitT(sw))
      rep.fail("distributive law: eps_T triangle", -1, word_str(w));
    if (inst_.mapS(tsw, stw, inst_.chi(w)) * inst_.chi(sw) *
            inst_.mapT(sw, ssw, inst_.comultS(w)) !=
        inst_.comultS(tw) * inst_.chi(w))
      rep.fail("distributive law: delta_S hexagon", -1, word_str(w));
    if (inst_.counitS(tw) * inst_.chi(w) != inst_.mapT(sw, w, inst_.counitS(w)))
      rep.fail("distributive law: eps_S triangle", -1, word_str(w));
    // opcoalgebra axioms at w
    if (inst_.lambda)
    if (inst_.mapN(tw, w, inst_.counitT(w)) * inst_.lambda(w) !=
        inst_.mapN(sw, w, inst_.counitS(w)))
      rep.fail("opcoalgebra counit axiom", -1, word_str(w));
    if (inst_.lambda)
    if (inst_.lambda(tw) * inst_.mapN(tsw, stw, inst_.chi(w)) * inst_.lambda(sw) *
            inst_.mapN(sw, ssw, inst_.comultS(w)) !=
        inst_.mapN(tw, ttw, inst_.comultT(w)) * inst_.lambda(w))
      rep.fail("opcoalgebra comultiplication axiom", -1, word_str(w));
  }
  // coalgebra axioms live at the base object
  if (inst_.rho) {
    Word base{};
    Word t1 = word_T(1), s1 = word_S(1);
    if (inst_.counitS(base) * *inst_.rho != inst_.counitT(base))
      rep.fail("coalgebra counit axiom", -1, "M");
    if (inst_.mapS(t1, s1, *inst_.rho) * inst_.chi(base) * inst_.mapT(t1, s1, *inst_.rho) *
            inst_.comultT(base) !=
        inst_.comultS(base) * *inst_.rho)
      rep.fail("coalgebra comultiplication axiom", -1, "M");
  }
  validated_len_ = max_len;
  validated_report_ = rep;
  return rep;
}

TruncatedDuplicialModule Engine::build_CT(int top, bool with_t) {
  ValidationReport laws = validate_laws(std::min(top, 2));
  if (!laws.ok()) throw std::invalid_argument("build_CT: instance fails its laws:\n" + laws.str());
  TruncatedDuplicialModule x;
  x.field = field();
  for (int n = 0; n <= top; ++n) x.dims.push_back(dimN_of(word_T(n + 1)));
  x.faces.resize(top + 1);
  x.degens.resize(std::max(top, 0));
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) x.faces[n].push_back(face_CT(n, i));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j) x.degens[n].push_back(degen_CT(n, j));
  x.augmentation = inst_.mapN(word_T(1), {}, inst_.counitT({}));
  if (with_t) {
    for (int n = 0; n <= top; ++n) x.t.push_back(t_T(n));
    ValidationReport rep = check_structure(x, StructureLevel::duplicial);
    require(rep.ok(), "C_T(N,M) fails the duplicial identity suite:\n" + rep.str());
  } else {
    ValidationReport rep = check_structure(x);
    require(rep.ok(), "C_T(N,M) fails the simplicial identity suite:\n" + rep.str());
  }
  return x;
}

TruncatedDuplicialModule Engine::build_CS_star(int top, bool with_t) {
  ValidationReport laws = validate_laws(std::min(top, 2));
  if (!laws.ok()) throw std::invalid_argument("build_CS_star: instance fails its laws:\n" + laws.str());
  TruncatedDuplicialModule x;
  x.field = field();
  for (int n = 0; n <= top; ++n) x.dims.push_back(dimN_of(word_S(n + 1)));
  x.faces.resize(top + 1);
  x.degens.resize(std::max(top, 0));
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) x.faces[n].push_back(face_CS(n, i));
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j) x.degens[n].push_back(degen_CS(n, j));
  x.augmentation = inst_.mapN(word_S(1), {}, inst_.counitS({}));
  if (with_t) {
    for (int n = 0; n <= top; ++n) x.t.push_back(t_S(n));
    ValidationReport rep = check_structure(x, StructureLevel::duplicial);
    require(rep.ok(), "C*_S(N,M) fails the duplicial identity suite:\n" + rep.str());
  } else {
    ValidationReport rep = check_structure(x);
    require(rep.ok(), "C*_S(N,M) fails the simplicial identity suite:\n" + rep.str());
  }
  return x;
}

Engine::RL Engine::build_R_L(int top) {
  TruncatedDuplicialModule ct = build_CT(top);
  TruncatedDuplicialModule cs = build_CS_star(top);
  RL out;
  for (int n = 0; n <= top; ++n) {
    out.R.push_back(inst_.mapN(word_T(n + 1), word_S(n + 1), rho_n(n)));
    out.L.push_back(lambda_n(n));
  }
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      require(cs.d(n, i) * out.R[n] == out.R[n - 1] * ct.d(n, i),
              "R does not commute with face " + std::to_string(i) + " at degree " + std::to_string(n));
      require(ct.d(n, i) * out.L[n] == out.L[n - 1] * cs.d(n, i),
              "L does not commute with face " + std::to_string(i) + " at degree " + std::to_string(n));
    }
  for (int n = 0; n < top; ++n)
    for (int j = 0; j <= n; ++j) {
      require(cs.s(n, j) * out.R[n] == out.R[n + 1] * ct.s(n, j),
              "R does not commute with degeneracy " + std::to_string(j) + " at degree " + std::to_string(n));
      require(ct.s(n, j) * out.L[n] == out.L[n + 1] * cs.s(n, j),
              "L does not commute with degeneracy " + std::to_string(j) + " at degree " + std::to_string(n));
    }
  for (int n = 0; n <= top; ++n) {
    require(cs.t[n] * out.R[n] == out.R[n] * ct.t[n],
            "R does not commute with t at degree " + std::to_string(n));
    require(ct.t[n] * out.L[n] == out.L[n] * cs.t[n],
            "L does not commute with t at degree " + std::to_string(n));
    Matrix lr = out.L[n] * out.R[n];
    Matrix rl = out.R[n] * out.L[n];
    Matrix tT = Matrix::identity(ct.dim(n), field());
    Matrix tS = Matrix::identity(cs.dim(n), field());
    for (int k = 0; k <= n; ++k) {
      tT = tT * ct.t[n];
      tS = tS * cs.t[n];
    }
    require(lr == tT, "(LR)_n != t_T^{n+1} at degree " + std::to_string(n));
    require(rl == tS, "(RL)_n != t_S^{n+1} at degree " + std::to_string(n));
  }
  return out;
}

Engine::Homotopy Engine::contracting_homotopy(int top) {
  bool m_side = inst_.nablaM.has_value();
  bool n_side = static_cast<bool>(inst_.nablaN);
  if (!m_side && !n_side)
    throw std::invalid_argument(
        "contracting_homotopy: no coalgebra datum supplied (rho is not of the form nabla . eps)");
  Homotopy out;
  if (m_side) {
    require(inst_.rho.has_value() && *inst_.rho == *inst_.nablaM * inst_.counitT({}),
            "rho is not nabla . eps for the supplied S-coalgebra structure");
    require((inst_.counitS({}) * *inst_.nablaM).is_identity(), "nabla fails counitality");
    require(inst_.comultS({}) * *inst_.nablaM ==
                inst_.mapS({}, word_S(1), *inst_.nablaM) * *inst_.nablaM,
            "nabla fails coassociativity");
    for (int n = 0; n <= top; ++n) {
      out.h_CS.push_back(inst_.mapN(word_S(n + 1), word_S(n + 2),
                                    lift(word_S(n + 1), {}, word_S(1), *inst_.nablaM)));
      Matrix inner = lift(word_T(n + 1), {}, word_S(1), *inst_.nablaM);
      Matrix ht = inst_.lambda(word_T(n + 1)) *
                  inst_.mapN(concat(word_T(n + 1), word_S(1)), prepend(Fun::S, word_T(n + 1)),
                             chi_n_at(n + 1, ChiShape::TnS_to_STn, {})) *
                  inst_.mapN(word_T(n + 1), concat(word_T(n + 1), word_S(1)), inner);
      out.h_CT.push_back(std::move(ht));
    }
  } else {
    for (int n = 0; n <= top; ++n) {
      Matrix hs = inst_.mapN(concat(word_S(n + 1), word_T(1)), word_S(n + 2),
                             lift(word_S(n + 1), word_T(1), word_S(1), *inst_.rho)) *
                  inst_.mapN(prepend(Fun::T, word_S(n + 1)), concat(word_S(n + 1), word_T(1)),
                             chi_n_at(n + 1, ChiShape::TSn_to_SnT, {})) *
                  inst_.nablaN(word_S(n + 1));
      out.h_CS.push_back(std::move(hs));
      out.h_CT.push_back(inst_.nablaN(word_T(n + 1)));
    }
  }
  // hb + bh = 1 in degrees 1..top-1 on both associated chain complexes
  TruncatedDuplicialModule cs = build_CS_star(top, false);
  TruncatedDuplicialModule ct = build_CT(top, false);
  for (int n = 1; n < top; ++n) {
    Matrix rel_s = out.h_CS[n - 1] * cs.moore_b(n) + cs.moore_b(n + 1) * out.h_CS[n];
    require(rel_s.is_identity(), "hb + bh != 1 on C*_S at degree " + std::to_string(n));
    Matrix rel_t = out.h_CT[n - 1] * ct.moore_b(n) + ct.moore_b(n + 1) * out.h_CT[n];
    require(rel_t.is_identity(), "hb + bh != 1 on C_T at degree " + std::to_string(n));
  }
  return out;
}

EngineInstance trivial_instance(const Field& f, int d) {
  EngineInstance inst;
  inst.field = f;
  inst.name = "trivial";
  inst.dim = [d](const Word&) { return d; };
  inst.dimN = [d](const Word&) { return d; };
  auto id_at = [f, d](const Word&) { return Matrix::identity(d, f); };
  inst.counitT = id_at;
  inst.comultT = id_at;
  inst.counitS = id_at;
  inst.comultS = id_at;
  inst.chi = id_at;
  auto pass = [](const Word&, const Word&, const Matrix& m) { return m; };
  inst.mapT = pass;
  inst.mapS = pass;
  inst.mapN = pass;
  inst.rho = Matrix::identity(d, f);
  inst.lambda = id_at;
  inst.nablaM = Matrix::identity(d, f);
  return inst;
}

}  // namespace cychom
