#ifndef CYCHOM_ENGINE_HPP
#define CYCHOM_ENGINE_HPP

#include <functional>
#include <map>

#include "cychom/simplicial.hpp"

namespace cychom {

// Objects tracked by the engine are words in the two comonad symbols applied
// to a fixed base object M; word[0] is the outermost application.
enum class Fun : uint8_t { T = 0, S = 1 };
using Word = std::vector<Fun>;

std::string word_str(const Word& w);

// A pair of concretely presented comonads T, S on a k-linear category, a
// distributive law chi : TS => ST, a chi-coalgebra structure rho on the base
// object M, and a linear functor N with a chi-opcoalgebra structure lambda.
// Everything is given per tracked object as a matrix; functor actions on
// maps are callbacks. This is the input of the bar-resolution construction.
struct EngineInstance {
  Field field;
  std::string name;

  std::function<int(const Word&)> dim;        // dim of w(M)
  std::function<Matrix(const Word&)> counitT; // T w(M) -> w(M)
  std::function<Matrix(const Word&)> comultT; // T w(M) -> TT w(M)
  std::function<Matrix(const Word&)> counitS;
  std::function<Matrix(const Word&)> comultS;
  std::function<Matrix(const Word&)> chi;     // TS w(M) -> ST w(M)

  // functor action on a morphism f : src(M) -> dst(M)
  std::function<Matrix(const Word& src, const Word& dst, const Matrix& f)> mapT, mapS;

  std::function<int(const Word&)> dimN;       // dim of N(w(M))
  std::function<Matrix(const Word& src, const Word& dst, const Matrix& f)> mapN;

  // rho and lambda are only needed for the duplicial operators; a plain bar
  // resolution build works without them.
  std::optional<Matrix> rho;                   // T M -> S M
  std::function<Matrix(const Word&)> lambda;   // N S w(M) -> N T w(M)

  // Optional S-coalgebra structure on M with rho = nabla . counit; enables
  // the contracting homotopy.
  std::optional<Matrix> nablaM;                // M -> S M
  // Optional T-opcoalgebra structure on N (per tracked object).
  std::function<Matrix(const Word&)> nablaN;   // N w(M) -> N T w(M)

  // Law checks quantify over tracked words but skip any check whose largest
  // matrix would exceed this entry budget; skips are recorded as coverage.
  long long check_entry_cap = 150000;
};

// Memoizing facade over an instance: whiskered structure maps, iterated
// distributive laws and the recursive rho_n / lambda_n with their
// double-entry factorization checks.
class Engine {
 public:
  explicit Engine(EngineInstance inst);

  const EngineInstance& instance() const { return inst_; }
  const Field& field() const { return inst_.field; }

  // Comonad, distributive-law, coalgebra and opcoalgebra axioms on every
  // tracked word of length <= max_len. Hard precondition of the builders.
  ValidationReport validate_laws(int max_len);

  // chi^n in either shape, at base word w; both recursive factorizations are
  // computed and asserted equal.
  enum class ChiShape { TnS_to_STn, TSn_to_SnT };
  Matrix iterate_chi(int n, ChiShape shape, const Word& w = {});

  // rho_n : T^{n+1} M -> S^{n+1} M via the vertical composite of the
  // rho_{i,n}; cross-checked against both recursive factorizations.
  Matrix rho_n(int n);
  // lambda_n : N S^{n+1} M -> N T^{n+1} M.
  Matrix lambda_n(int n);

  // duplicial operators
  Matrix t_T(int n);
  Matrix t_S(int n);

  // The duplicial module C_T(N, M) (bar resolution side), degrees 0..top.
  TruncatedDuplicialModule build_CT(int top, bool with_t = true);
  // The dual C*_S(N, M) (opbar side).
  TruncatedDuplicialModule build_CS_star(int top, bool with_t = true);

  struct RL {
    std::vector<Matrix> R;  // degreewise C_T -> C*_S
    std::vector<Matrix> L;  // degreewise C*_S -> C_T
  };
  // R = N rho_n and L = lambda_n M; asserts both are morphisms of duplicial
  // modules and that (LR)_n = t_T^{n+1}, (RL)_n = t_S^{n+1}.
  RL build_R_L(int top);

  struct Homotopy {
    std::vector<Matrix> h_CS;  // h_n : C*_S(N,M)_n -> C*_S(N,M)_{n+1}
    std::vector<Matrix> h_CT;  // h_n : C_T(N,M)_n -> C_T(N,M)_{n+1}
  };
  // Contracting homotopies from an S-coalgebra structure on M (or a
  // T-opcoalgebra structure on N); hb + bh = 1 is asserted degreewise.
  Homotopy contracting_homotopy(int top);

  // building blocks, exposed for the instance-level assertions
  Word word_T(int count) const;  // [T, T, ..., T]
  Word word_S(int count) const;
  int dim_of(const Word& w);
  int dimN_of(const Word& w);
  Matrix lift(const Word& outer, const Word& src, const Word& dst, Matrix f);
  Matrix face_CT(int n, int i);   // N(T^i eps T^{n-i} M)
  Matrix degen_CT(int n, int j);  // N(T^j delta T^{n-j} M)
  Matrix face_CS(int n, int i);   // N(S^{n-i} eps S^i M)
  Matrix degen_CS(int n, int j);  // N(S^{n-j} delta S^j M)

 private:
  Matrix chi_n_at(int n, ChiShape shape, const Word& w);
  void require(bool cond, const std::string& what);

  EngineInstance inst_;
  std::map<std::pair<int, Word>, Matrix> chi_a_, chi_b_;
  std::map<int, Matrix> rho_cache_, lambda_cache_;
  int validated_len_ = -1;
  ValidationReport validated_report_;
};

// The trivial instance: T = S = identity comonads on a d-dimensional object,
// rho = lambda = identity, N the identity functor.
EngineInstance trivial_instance(const Field& f, int d);

}  // namespace cychom

#endif
