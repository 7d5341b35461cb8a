#include "cychom/setlaws.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <stdexcept>

namespace cychom::sets {

// ---- basic carriers ------------------------------------------------------

ValidationReport FiniteMonoid::validate() const {
  ValidationReport rep;
  if (n <= 0 || static_cast<int>(table.size()) != n) {
    rep.fail("monoid table shape mismatch", -1);
    return rep;
  }
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n) {
      rep.fail("monoid table shape mismatch", -1);
      return rep;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++rep.checked;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) rep.fail("monoid associativity", -1);
      }
  for (int a = 0; a < n; ++a) {
    ++rep.checked;
    if (mul(identity, a) != a || mul(a, identity) != a) rep.fail("monoid identity law", -1);
  }
  return rep;
}

FiniteMonoid cyclic_monoid(int n) {
  FiniteMonoid m;
  m.n = n;
  m.identity = 0;
  m.table.assign(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.table[a][b] = (a + b) % n;
  return m;
}

void GridDist::normalize() {
  long long g = den;
  for (long long v : num) g = std::gcd(g, v);
  if (g > 1) {
    den /= g;
    for (long long& v : num) v /= g;
  }
}

bool GridDist::operator==(const GridDist& o) const {
  if (num.size() != o.num.size()) return false;
  for (std::size_t i = 0; i < num.size(); ++i)
    if (num[i] * o.den != o.num[i] * den) return false;
  return true;
}

bool GridDist::operator<(const GridDist& o) const {
  for (std::size_t i = 0; i < num.size() && i < o.num.size(); ++i) {
    long long l = num[i] * o.den, r = o.num[i] * den;
    if (l != r) return l < r;
  }
  return num.size() < o.num.size();
}

std::vector<GridDist> dist_grid(int size, int q) {
  std::vector<GridDist> out;
  std::vector<long long> cur(size, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == size - 1) {
      cur[pos] = left;
      GridDist d{static_cast<long long>(q), cur};
      out.push_back(d);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (size > 0) rec(0, q);
  return out;
}

namespace {

// pushforward of a distribution along an index map
GridDist push(const GridDist& d, const std::vector<int>& map_to, int target_size) {
  GridDist out{d.den, std::vector<long long>(target_size, 0)};
  for (std::size_t i = 0; i < d.num.size(); ++i) out.num[map_to[i]] += d.num[i];
  return out;
}

// flatten an outer distribution over an indexed family of distributions
GridDist flatten(const GridDist& outer, const std::vector<GridDist>& family, int target_size) {
  long long inner_den = family.empty() ? 1 : family[0].den;
  for (const GridDist& g : family)
    if (g.den != inner_den) throw std::logic_error("flatten needs a common inner denominator");
  GridDist out{outer.den * inner_den, std::vector<long long>(target_size, 0)};
  for (std::size_t j = 0; j < outer.num.size(); ++j) {
    if (outer.num[j] == 0) continue;
    for (int x = 0; x < target_size; ++x) out.num[x] += outer.num[j] * family[j].num[x];
  }
  return out;
}

std::vector<List> all_lists(int alphabet, int maxlen, bool include_empty) {
  std::vector<List> out;
  if (include_empty) out.push_back({});
  std::vector<List> level;
  for (int a = 0; a < alphabet; ++a) level.push_back({a});
  for (int len = 1; len <= maxlen; ++len) {
    out.insert(out.end(), level.begin(), level.end());
    if (len == maxlen) break;
    std::vector<List> next;
    for (const List& w : level)
      for (int a = 0; a < alphabet; ++a) {
        List e = w;
        e.push_back(a);
        next.push_back(std::move(e));
      }
    level = std::move(next);
  }
  return out;
}

// nested lists over {0..alphabet-1} with every level bounded and a total
// leaf budget; depth-2 and depth-3 enumerators
void for_each_nested2(int alphabet, int bound, int budget, bool include_empty,
                      const std::function<void(const NestedList&)>& fn) {
  std::vector<List> rows = all_lists(alphabet, bound, false);
  NestedList cur;
  std::function<void(int)> rec = [&](int leaves_left) {
    if (!cur.empty() || include_empty) fn(cur);
    if (static_cast<int>(cur.size()) == bound) return;
    for (const List& row : rows) {
      if (static_cast<int>(row.size()) > leaves_left) continue;
      cur.push_back(row);
      rec(leaves_left - static_cast<int>(row.size()));
      cur.pop_back();
    }
  };
  rec(budget);
}

void for_each_nested3(int alphabet, int bound, int budget,
                      const std::function<void(const Nested3&)>& fn) {
  std::vector<NestedList> blocks;
  for_each_nested2(alphabet, bound, budget, false, [&](const NestedList& w) {
    if (!w.empty()) blocks.push_back(w);
  });
  Nested3 cur;
  std::function<void(int)> rec = [&](int leaves_left) {
    if (!cur.empty()) fn(cur);
    if (static_cast<int>(cur.size()) == bound) return;
    for (const NestedList& b : blocks) {
      int leaves = 0;
      for (const List& r : b) leaves += static_cast<int>(r.size());
      if (leaves > leaves_left) continue;
      cur.push_back(b);
      rec(leaves_left - leaves);
      cur.pop_back();
    }
  };
  rec(budget);
}

int popcount(std::uint32_t v) { return __builtin_popcount(v); }

}  // namespace

const char* structure_name(Structure s) {
  switch (s) {
    case Structure::powerset: return "powerset";
    case Structure::bounded_list: return "list";
    case Structure::nonempty_list: return "nonempty-list";
    case Structure::filter: return "filter";
    case Structure::ultrafilter: return "ultrafilter";
    case Structure::distribution: return "distribution";
    case Structure::product: return "product";
    case Structure::reader: return "reader";
    case Structure::nonempty_list_comonad: return "nonempty-list-comonad";
  }
  return "?";
}

// ---- monad/comonad laws ---------------------------------------------------

namespace {

ValidationReport powerset_monad_laws(int n) {
  ValidationReport rep;
  if (n > 2) throw std::invalid_argument("powerset associativity check needs |X| <= 2");
  int px = 1 << n;  // subsets of X
  // unit laws on PX
  for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(px); ++a) {
    ++rep.checked;
    // mu(eta_{PX}(A)) = A trivially; mu(P eta (A)) = union of singletons
    std::uint32_t u = 0;
    for (int x = 0; x < n; ++x)
      if (a & (1u << x)) u |= (1u << x);
    if (u != a) rep.fail("powerset unit law", -1);
  }
  // associativity on PPPX: subsets of PPX, PPX = subsets of PX
  int ppx = 1 << px;
  auto mu = [&](std::uint32_t family_over_px) {
    // union of the subsets named by the bits
    std::uint32_t u = 0;
    for (int s = 0; s < px; ++s)
      if (family_over_px & (1u << s)) u |= static_cast<std::uint32_t>(s);
    return u;
  };
  for (std::uint64_t fam3 = 0; fam3 < (1ull << ppx); ++fam3) {
    // fam3 is a subset of PPX; mu_{PX}(fam3) = union in PPX-land
    std::uint32_t union_ppx = 0;
    for (int b = 0; b < ppx; ++b)
      if (fam3 & (1ull << b)) union_ppx |= static_cast<std::uint32_t>(b);
    std::uint32_t lhs = mu(union_ppx);
    // P(mu): apply mu to each member, collect
    std::uint32_t mapped = 0;
    for (int b = 0; b < ppx; ++b)
      if (fam3 & (1ull << b)) mapped |= (1u << mu(static_cast<std::uint32_t>(b)));
    std::uint32_t rhs = mu(mapped);
    ++rep.checked;
    if (lhs != rhs) rep.fail("powerset associativity", -1);
  }
  return rep;
}

ValidationReport list_monad_laws(int n, int bound, bool nonempty) {
  ValidationReport rep;
  // unit laws
  for (const List& w : all_lists(n, bound, !nonempty)) {
    ++rep.checked;
    // mu(eta(w)) = w and mu(map eta w) = w, always within bounds
    List flat;
    for (int a : w) flat.push_back(a);
    if (flat != w) rep.fail("list unit law", -1);
  }
  // associativity over a leaf-budgeted triple-nested universe
  for_each_nested3(n, bound, bound, [&](const Nested3& t) {
    // mu(mu_{LX}(t)) vs mu(L(mu)(t)); both are full flattenings
    NestedList outer_flat;
    int total = 0;
    for (const NestedList& b : t)
      for (const List& r : b) {
        outer_flat.push_back(r);
        total += static_cast<int>(r.size());
      }
    if (static_cast<int>(outer_flat.size()) > bound || total > bound) {
      ++rep.skipped;
      return;
    }
    List lhs;
    for (const List& r : outer_flat)
      for (int a : r) lhs.push_back(a);
    NestedList mapped;
    for (const NestedList& b : t) {
      List m;
      for (const List& r : b)
        for (int a : r) m.push_back(a);
      if (static_cast<int>(m.size()) > bound) {
        ++rep.skipped;
        return;
      }
      mapped.push_back(std::move(m));
    }
    List rhs;
    for (const List& r : mapped)
      for (int a : r) rhs.push_back(a);
    ++rep.checked;
    if (lhs != rhs) rep.fail("list associativity", -1);
  });
  return rep;
}

ValidationReport lplus_comonad_laws(int n, int bound) {
  ValidationReport rep;
  auto tails = [](const List& w) {
    NestedList out;
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(List(w.begin() + i, w.end()));
    return out;
  };
  for (const List& w : all_lists(n, bound, false)) {
    NestedList d = tails(w);
    // counit laws: head of tails, and heads of the tails list
    ++rep.checked;
    if (d[0] != w) rep.fail("nonempty-list counit (eps L+) delta = 1", -1);
    List heads;
    for (const List& t : d) heads.push_back(t[0]);
    ++rep.checked;
    if (heads != w) rep.fail("nonempty-list counit (L+ eps) delta = 1", -1);
    // coassociativity: tails of the tails list vs tails applied elementwise
    std::vector<NestedList> lhs;
    for (std::size_t i = 0; i < d.size(); ++i) lhs.push_back(NestedList(d.begin() + i, d.end()));
    std::vector<NestedList> rhs;
    for (const List& t : d) rhs.push_back(tails(t));
    ++rep.checked;
    if (lhs != rhs) rep.fail("nonempty-list coassociativity", -1);
  }
  return rep;
}

ValidationReport filter_monad_laws(int n, bool ultra) {
  ValidationReport rep;
  // filters on a finite set are principal: base = nonempty subset
  // (points for ultrafilters); mu takes the union of bases
  std::vector<std::uint32_t> fx;  // bases
  for (std::uint32_t a = 1; a < (1u << n); ++a)
    if (!ultra || popcount(a) == 1) fx.push_back(a);
  int nf = static_cast<int>(fx.size());
  auto mu = [&](std::uint32_t family) {  // subset of FX indices -> base in X
    std::uint32_t u = 0;
    for (int i = 0; i < nf; ++i)
      if (family & (1u << i)) u |= fx[i];
    return u;
  };
  auto fx_index = [&](std::uint32_t base) {
    for (int i = 0; i < nf; ++i)
      if (fx[i] == base) return i;
    return -1;
  };
  if (ultra) {
    // mu of a point mass on a point is that point; laws collapse
    for (int i = 0; i < nf; ++i) {
      ++rep.checked;
      if (mu(1u << i) != fx[i]) rep.fail("ultrafilter unit law", -1);
    }
    return rep;
  }
  // unit laws on FX
  for (int i = 0; i < nf; ++i) {
    ++rep.checked;
    if (mu(1u << i) != fx[i]) rep.fail("filter unit law (eta FX)", -1);
    // F(eta): image of the base under eta = principal ultrafilters of points
    std::uint32_t fam = 0;
    for (int x = 0; x < n; ++x)
      if (fx[i] & (1u << x)) fam |= (1u << fx_index(1u << x));
    ++rep.checked;
    if (mu(fam) != fx[i]) rep.fail("filter unit law (F eta)", -1);
  }
  // associativity on FFFX: FFX = nonempty subsets of FX
  std::vector<std::uint32_t> ffx;
  for (std::uint32_t fam = 1; fam < (1u << nf); ++fam) ffx.push_back(fam);
  int nff = static_cast<int>(ffx.size());
  if (nff > 20) throw std::invalid_argument("filter carrier too large");
  auto mu_ff = [&](std::uint64_t fam3) {  // subset of FFX indices -> base-subset of FX
    std::uint32_t u = 0;
    for (int i = 0; i < nff; ++i)
      if (fam3 & (1ull << i)) u |= ffx[i];
    return u;
  };
  for (std::uint64_t fam3 = 1; fam3 < (1ull << nff); ++fam3) {
    std::uint32_t lhs = mu(mu_ff(fam3));
    // F(mu): each member of fam3 maps to its mu, collected as a subset of FX
    std::uint32_t mapped = 0;
    for (int i = 0; i < nff; ++i)
      if (fam3 & (1ull << i)) mapped |= (1u << fx_index(mu(ffx[i])));
    std::uint32_t rhs = mu(mapped);
    ++rep.checked;
    if (lhs != rhs) rep.fail("filter associativity (Kowalski sum)", -1);
  }
  return rep;
}

ValidationReport distribution_monad_laws(int n, int q) {
  ValidationReport rep;
  std::vector<GridDist> grid = dist_grid(n, q);
  // unit laws: mu(point mass at p) = p; mu(pushforward of p along eta) = p
  for (const GridDist& p : grid) {
    GridDist outer{1, std::vector<long long>(grid.size(), 0)};
    for (std::size_t j = 0; j < grid.size(); ++j)
      if (grid[j] == p) outer.num[j] = 1;
    GridDist back = flatten(outer, grid, n);
    ++rep.checked;
    if (!(back == p)) rep.fail("distribution unit law (eta D)", -1);
    // D(eta)(p): distribution over point masses with p's weights
    std::vector<GridDist> points;
    for (int x = 0; x < n; ++x) {
      GridDist pt{1, std::vector<long long>(n, 0)};
      pt.num[x] = 1;
      points.push_back(pt);
    }
    GridDist fl = flatten(p, points, n);
    ++rep.checked;
    if (!(fl == p)) rep.fail("distribution unit law (D eta)", -1);
  }
  // associativity over a small grid-of-grids
  std::vector<GridDist> outer_grid = dist_grid(static_cast<int>(grid.size()), q);
  int q3 = static_cast<int>(outer_grid.size()) > 60 ? 1 : q;
  std::vector<GridDist> outer2 = dist_grid(static_cast<int>(outer_grid.size()), q3);
  for (const GridDist& ppp : outer2) {
    // mu_{DX}(ppp): flatten over outer_grid
    std::vector<GridDist> og = outer_grid;
    GridDist mid = flatten(ppp, og, static_cast<int>(grid.size()));
    GridDist lhs = flatten(mid, grid, n);
    // D(mu)(ppp): push along j -> index of flatten(outer_grid[j])
    std::vector<GridDist> flattened;
    for (const GridDist& o : outer_grid) flattened.push_back(flatten(o, grid, n));
    GridDist rhs = flatten(ppp, flattened, n);
    ++rep.checked;
    if (!(lhs == rhs)) rep.fail("distribution associativity", -1);
  }
  return rep;
}

ValidationReport product_comonad_laws(int c, int n) {
  ValidationReport rep;
  using P2 = std::pair<int, int>;                 // (c, x)
  using P3 = std::tuple<int, int, int>;           // (c, c', x)
  auto delta = [](const P2& p) { return P3{p.first, p.first, p.second}; };
  auto eps_outer = [](const P3& t) { return P2{std::get<1>(t), std::get<2>(t)}; };
  auto eps_inner = [](const P3& t) { return P2{std::get<0>(t), std::get<2>(t)}; };
  for (int ci = 0; ci < c; ++ci)
    for (int x = 0; x < n; ++x) {
      P2 p{ci, x};
      P3 d = delta(p);
      ++rep.checked;
      if (eps_outer(d) != p) rep.fail("product counitality (eps C) delta = 1", -1);
      if (eps_inner(d) != p) rep.fail("product counitality (C eps) delta = 1", -1);
      // coassociativity: both composites give (c, c, c, x)
      auto lhs = std::tuple<int, int, int, int>{std::get<0>(d), std::get<0>(d), std::get<1>(d),
                                                std::get<2>(d)};
      auto rhs = std::tuple<int, int, int, int>{std::get<0>(d), std::get<1>(d), std::get<1>(d),
                                                std::get<2>(d)};
      ++rep.checked;
      if (lhs != rhs) rep.fail("product coassociativity", -1);
    }
  return rep;
}

ValidationReport reader_comonad_laws(int n, const FiniteMonoid& m) {
  ValidationReport rep;
  ValidationReport mrep = m.validate();
  if (!mrep.ok()) return mrep;
  // readers f : M -> X as vectors
  int count = 1;
  for (int i = 0; i < m.n; ++i) count *= n;
  std::vector<std::vector<int>> readers;
  for (int id = 0; id < count; ++id) {
    std::vector<int> f(m.n);
    int rem = id;
    for (int i = 0; i < m.n; ++i) {
      f[i] = rem % n;
      rem /= n;
    }
    readers.push_back(std::move(f));
  }
  for (const auto& f : readers) {
    // delta(f)(a)(b) = f(ab)
    std::vector<std::vector<int>> df(m.n, std::vector<int>(m.n));
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b) df[a][b] = f[m.mul(a, b)];
    // counitality: eps(delta f) = delta(f)(e) = f and (X^M eps)(delta f)(a) = f(a)
    ++rep.checked;
    if (df[m.identity] != f) rep.fail("reader counitality (eps S) delta = 1", -1);
    std::vector<int> ev(m.n);
    for (int a = 0; a < m.n; ++a) ev[a] = df[a][m.identity];
    ++rep.checked;
    if (ev != f) rep.fail("reader counitality (S eps) delta = 1", -1);
    // coassociativity: f((ab)c) = f(a(bc))
    for (int a = 0; a < m.n; ++a)
      for (int b = 0; b < m.n; ++b)
        for (int c = 0; c < m.n; ++c) {
          ++rep.checked;
          if (f[m.mul(m.mul(a, b), c)] != f[m.mul(a, m.mul(b, c))])
            rep.fail("reader coassociativity", -1);
        }
  }
  return rep;
}

}  // namespace

ValidationReport check_laws(Structure s, Kind k, const Config& cfg) {
  switch (s) {
    case Structure::powerset:
      if (k != Kind::monad) throw std::invalid_argument("powerset is checked as a monad");
      return powerset_monad_laws(cfg.x_size);
    case Structure::bounded_list:
      if (k != Kind::monad) throw std::invalid_argument("the list functor is checked as a monad");
      return list_monad_laws(cfg.x_size, cfg.list_bound, false);
    case Structure::nonempty_list:
      if (k == Kind::monad) return list_monad_laws(cfg.x_size, cfg.list_bound, true);
      return lplus_comonad_laws(cfg.x_size, cfg.list_bound);
    case Structure::nonempty_list_comonad:
      return lplus_comonad_laws(cfg.x_size, cfg.list_bound);
    case Structure::filter:
      if (k != Kind::monad) throw std::invalid_argument("the filter functor is checked as a monad");
      return filter_monad_laws(cfg.x_size, false);
    case Structure::ultrafilter:
      if (k != Kind::monad) throw std::invalid_argument("ultrafilters are checked as a monad");
      return filter_monad_laws(cfg.x_size, true);
    case Structure::distribution:
      if (k != Kind::monad) throw std::invalid_argument("distributions are checked as a monad");
      return distribution_monad_laws(cfg.x_size, cfg.dist_den);
    case Structure::product:
      if (k != Kind::comonad) throw std::invalid_argument("C x - is checked as a comonad");
      return product_comonad_laws(cfg.c_size, cfg.x_size);
    case Structure::reader:
      if (k != Kind::comonad) throw std::invalid_argument("X^M is checked as a comonad");
      return reader_comonad_laws(cfg.x_size, cfg.monoid);
  }
  throw std::invalid_argument("unknown structure");
}

// ---- mixed distributive laws ----------------------------------------------

const char* mixed_law_name(MixedLaw law) {
  switch (law) {
    case MixedLaw::sup_powerset: return "sup-powerset";
    case MixedLaw::sup_list: return "sup-list";
    case MixedLaw::dist_product: return "dist-product";
    case MixedLaw::list_reader: return "list-reader";
    case MixedLaw::powerset_reader: return "powerset-reader";
    case MixedLaw::filter_reader: return "filter-reader";
    case MixedLaw::dist_reader: return "dist-reader";
  }
  return "?";
}

std::vector<MixedLaw> all_mixed_laws() {
  return {MixedLaw::sup_powerset,    MixedLaw::sup_list,     MixedLaw::dist_product,
          MixedLaw::list_reader,     MixedLaw::powerset_reader, MixedLaw::filter_reader,
          MixedLaw::dist_reader};
}

namespace {

// ---- laws over the product comonad C x - --------------------------------
// pairs (c, x) are encoded as c * n + x

struct ProductEnc {
  int c, n;
  int enc(int ci, int x) const { return ci * n + x; }
  int col(int p) const { return p / n; }
  int val(int p) const { return p % n; }
};

ValidationReport sup_powerset_law(int c, int n) {
  ValidationReport rep;
  ProductEnc e{c, n};
  int cx = c * n;
  if (cx > 5) throw std::invalid_argument("carrier too large for the powerset mixed law");
  auto theta = [&](std::uint32_t a, int& out_c, std::uint32_t& out_set) {
    if (a == 0) {
      out_c = 0;
      out_set = 0;
      return;
    }
    out_c = 0;
    out_set = 0;
    for (int p = 0; p < cx; ++p)
      if (a & (1u << p)) {
        out_c = std::max(out_c, e.col(p));
        out_set |= 1u << e.val(p);
      }
  };
  // unit: theta({(c,x)}) = (c, {x})
  for (int p = 0; p < cx; ++p) {
    int oc;
    std::uint32_t os;
    theta(1u << p, oc, os);
    ++rep.checked;
    if (oc != e.col(p) || os != (1u << e.val(p))) rep.fail("unit compatibility", -1, "sup-powerset");
  }
  // multiplication: theta(union A) vs collect theta over members then merge
  for (std::uint64_t fam = 0; cx <= 4 && fam < (1ull << (1 << cx)); ++fam) {
    std::uint32_t u = 0;
    for (int s = 0; s < (1 << cx); ++s)
      if (fam & (1ull << s)) u |= static_cast<std::uint32_t>(s);
    int lc;
    std::uint32_t ls;
    theta(u, lc, ls);
    // P(theta): members -> (c_i, S_i); theta at PX level then C mu:
    // sup of the colours, union of the sets
    int rc = 0;
    std::uint32_t rs = 0;
    for (int s = 0; s < (1 << cx); ++s)
      if (fam & (1ull << s)) {
        int oc;
        std::uint32_t os;
        theta(static_cast<std::uint32_t>(s), oc, os);
        rc = std::max(rc, oc);
        rs |= os;
      }
    ++rep.checked;
    if (lc != rc || ls != rs) rep.fail("multiplication compatibility", -1, "sup-powerset");
  }
  if (cx > 4) ++rep.skipped;
  // counit: pi_X image of A equals theta then second component
  for (std::uint32_t a = 0; a < (1u << cx); ++a) {
    std::uint32_t img = 0;
    for (int p = 0; p < cx; ++p)
      if (a & (1u << p)) img |= 1u << e.val(p);
    int oc;
    std::uint32_t os;
    theta(a, oc, os);
    ++rep.checked;
    if (os != img) rep.fail("counit compatibility", -1, "sup-powerset");
  }
  // comultiplication: delta after theta = (C theta)(theta_C)(P delta)
  for (std::uint32_t a = 0; a < (1u << cx); ++a) {
    int oc;
    std::uint32_t os;
    theta(a, oc, os);
    // LHS: (oc, oc, os)
    // RHS: P(delta)(A) = {(c,(c,x))}; theta at level CX: sup of outer colours
    // and the set of pairs; then C(theta): theta of the inner pair set
    int rc1 = 0;
    std::uint32_t inner = 0;
    for (int p = 0; p < cx; ++p)
      if (a & (1u << p)) {
        rc1 = std::max(rc1, e.col(p));
        inner |= 1u << p;  // (c,x) kept as a pair
      }
    int rc2;
    std::uint32_t rs;
    theta(inner, rc2, rs);
    ++rep.checked;
    if (oc != rc1 || oc != rc2 || os != rs) rep.fail("comultiplication compatibility", -1, "sup-powerset");
  }
  return rep;
}

ValidationReport sup_list_law(int c, int n, int bound) {
  ValidationReport rep;
  ProductEnc e{c, n};
  int cx = c * n;
  auto theta = [&](const List& w, int& out_c, List& out_list) {
    out_c = 0;
    out_list.clear();
    for (int p : w) {
      out_c = std::max(out_c, e.col(p));
      out_list.push_back(e.val(p));
    }
  };
  for (int p = 0; p < cx; ++p) {
    int oc;
    List ol;
    theta({p}, oc, ol);
    ++rep.checked;
    if (oc != e.col(p) || ol != List{e.val(p)}) rep.fail("unit compatibility", -1, "sup-list");
  }
  for_each_nested2(cx, bound, bound, true, [&](const NestedList& nested) {
    List flat;
    for (const List& r : nested)
      for (int p : r) flat.push_back(p);
    if (static_cast<int>(flat.size()) > bound) {
      ++rep.skipped;
      return;
    }
    int lc;
    List ll;
    theta(flat, lc, ll);
    int rc = 0;
    List rl;
    for (const List& r : nested) {
      int oc;
      List ol;
      theta(r, oc, ol);
      rc = std::max(rc, oc);
      for (int v : ol) rl.push_back(v);
    }
    ++rep.checked;
    if (lc != rc || ll != rl) rep.fail("multiplication compatibility", -1, "sup-list");
  });
  for (const List& w : all_lists(cx, bound, true)) {
    // counit
    List img;
    for (int p : w) img.push_back(e.val(p));
    int oc;
    List ol;
    theta(w, oc, ol);
    ++rep.checked;
    if (ol != img) rep.fail("counit compatibility", -1, "sup-list");
    // comultiplication, as for the powerset law
    int rc1 = 0;
    for (int p : w) rc1 = std::max(rc1, e.col(p));
    int rc2;
    List rl;
    theta(w, rc2, rl);
    ++rep.checked;
    if (oc != rc1 || oc != rc2 || ol != rl) rep.fail("comultiplication compatibility", -1, "sup-list");
  }
  return rep;
}

ValidationReport dist_product_law(int c, int n, int q) {
  ValidationReport rep;
  ProductEnc e{c, n};
  int cx = c * n;
  auto theta = [&](const GridDist& p, int& out_c, GridDist& out_d) {
    out_c = 0;
    for (int i = 0; i < cx; ++i)
      if (p.num[i] != 0) out_c = std::max(out_c, e.col(i));
    out_d = GridDist{p.den, std::vector<long long>(n, 0)};
    for (int i = 0; i < cx; ++i) out_d.num[e.val(i)] += p.num[i];
  };
  std::vector<GridDist> grid = dist_grid(cx, q);
  // unit: point masses
  for (int p = 0; p < cx; ++p) {
    GridDist pt{1, std::vector<long long>(cx, 0)};
    pt.num[p] = 1;
    int oc;
    GridDist od;
    theta(pt, oc, od);
    GridDist expect{1, std::vector<long long>(n, 0)};
    expect.num[e.val(p)] = 1;
    ++rep.checked;
    if (oc != e.col(p) || !(od == expect)) rep.fail("unit compatibility", -1, "dist-product");
  }
  // multiplication over the grid of grids
  std::vector<GridDist> outer_grid = dist_grid(static_cast<int>(grid.size()), q);
  for (const GridDist& outer : outer_grid) {
    GridDist mixed = flatten(outer, grid, cx);
    int lc;
    GridDist ld;
    theta(mixed, lc, ld);
    // D(theta) then theta at DX then C(mu): sup of component colours over the
    // support, flatten of the component marginals
    int rc = 0;
    std::vector<GridDist> marginals;
    for (std::size_t j = 0; j < grid.size(); ++j) {
      int oc;
      GridDist od;
      theta(grid[j], oc, od);
      marginals.push_back(od);
      if (outer.num[j] != 0) rc = std::max(rc, oc);
    }
    GridDist rd = flatten(outer, marginals, n);
    ++rep.checked;
    if (lc != rc || !(ld == rd)) rep.fail("multiplication compatibility", -1, "dist-product");
  }
  // counit and comultiplication on the grid
  for (const GridDist& p : grid) {
    GridDist img{p.den, std::vector<long long>(n, 0)};
    for (int i = 0; i < cx; ++i) img.num[e.val(i)] += p.num[i];
    int oc;
    GridDist od;
    theta(p, oc, od);
    ++rep.checked;
    if (!(od == img)) rep.fail("counit compatibility", -1, "dist-product");
    // comultiplication: pushing (c,x) -> (c,(c,x)) keeps the support colours,
    // so both sides give (sup, sup, marginal)
    int rc1 = 0;
    for (int i = 0; i < cx; ++i)
      if (p.num[i] != 0) rc1 = std::max(rc1, e.col(i));
    ++rep.checked;
    if (oc != rc1) rep.fail("comultiplication compatibility", -1, "dist-product");
  }
  return rep;
}

// ---- laws over the reader comonad X^M ------------------------------------

struct Readers {
  int n;
  FiniteMonoid m;
  std::vector<std::vector<int>> all;

  explicit Readers(int n_, const FiniteMonoid& m_) : n(n_), m(m_) {
    int count = 1;
    for (int i = 0; i < m.n; ++i) count *= n;
    for (int id = 0; id < count; ++id) {
      std::vector<int> f(m.n);
      int rem = id;
      for (int i = 0; i < m.n; ++i) {
        f[i] = rem % n;
        rem /= n;
      }
      all.push_back(std::move(f));
    }
  }
  int index(const std::vector<int>& f) const {
    int id = 0;
    for (int i = m.n - 1; i >= 0; --i) id = id * n + f[i];
    return id;
  }
};

ValidationReport list_reader_law(int n, const FiniteMonoid& mo, int bound) {
  ValidationReport rep;
  Readers rd(n, mo);
  int nr = static_cast<int>(rd.all.size());
  auto theta = [&](const List& fs) {  // list of reader indices -> per m a list
    std::vector<List> out(mo.n);
    for (int mi = 0; mi < mo.n; ++mi)
      for (int fi : fs) out[mi].push_back(rd.all[fi][mi]);
    return out;
  };
  // unit
  for (int fi = 0; fi < nr; ++fi) {
    auto out = theta({fi});
    bool ok = true;
    for (int mi = 0; mi < mo.n; ++mi) ok &= out[mi] == List{rd.all[fi][mi]};
    ++rep.checked;
    if (!ok) rep.fail("unit compatibility", -1, "list-reader");
  }
  // multiplication
  for_each_nested2(nr, bound, bound, true, [&](const NestedList& nested) {
    List flat;
    for (const List& r : nested)
      for (int v : r) flat.push_back(v);
    if (static_cast<int>(flat.size()) > bound) {
      ++rep.skipped;
      return;
    }
    auto lhs = theta(flat);
    std::vector<List> rhs(mo.n);
    for (const List& r : nested) {
      auto part = theta(r);
      for (int mi = 0; mi < mo.n; ++mi)
        for (int v : part[mi]) rhs[mi].push_back(v);
    }
    ++rep.checked;
    if (lhs != rhs) rep.fail("multiplication compatibility", -1, "list-reader");
  });
  // counit: evaluate at e
  for (const List& fs : all_lists(nr, bound, true)) {
    auto out = theta(fs);
    List expect;
    for (int fi : fs) expect.push_back(rd.all[fi][mo.identity]);
    ++rep.checked;
    if (out[mo.identity] != expect) rep.fail("counit compatibility", -1, "list-reader");
    // comultiplication: theta(p)(ab) = theta of the delta'd readers
    bool ok = true;
    for (int a = 0; a < mo.n && ok; ++a)
      for (int b = 0; b < mo.n && ok; ++b) {
        List lhs = out[mo.mul(a, b)];
        List rhs;
        for (int fi : fs) rhs.push_back(rd.all[fi][mo.mul(a, b)]);
        ok &= lhs == rhs;
      }
    ++rep.checked;
    if (!ok) rep.fail("comultiplication compatibility", -1, "list-reader");
  }
  return rep;
}

ValidationReport powerset_reader_law(int n, const FiniteMonoid& mo) {
  ValidationReport rep;
  Readers rd(n, mo);
  int nr = static_cast<int>(rd.all.size());
  if (nr > 16) throw std::invalid_argument("carrier too large for the powerset-reader law");
  auto theta = [&](std::uint32_t a) {  // subset of readers -> per m a subset of X
    std::vector<std::uint32_t> out(mo.n, 0);
    for (int fi = 0; fi < nr; ++fi)
      if (a & (1u << fi))
        for (int mi = 0; mi < mo.n; ++mi) out[mi] |= 1u << rd.all[fi][mi];
    return out;
  };
  for (int fi = 0; fi < nr; ++fi) {
    auto out = theta(1u << fi);
    bool ok = true;
    for (int mi = 0; mi < mo.n; ++mi) ok &= out[mi] == (1u << rd.all[fi][mi]);
    ++rep.checked;
    if (!ok) rep.fail("unit compatibility", -1, "powerset-reader");
  }
  // multiplication over PP(X^M): guarded size
  if (nr <= 4) {
    for (std::uint64_t fam = 0; fam < (1ull << (1 << nr)); ++fam) {
      std::uint32_t u = 0;
      for (int s = 0; s < (1 << nr); ++s)
        if (fam & (1ull << s)) u |= static_cast<std::uint32_t>(s);
      auto lhs = theta(u);
      std::vector<std::uint32_t> rhs(mo.n, 0);
      for (int s = 0; s < (1 << nr); ++s)
        if (fam & (1ull << s)) {
          auto part = theta(static_cast<std::uint32_t>(s));
          for (int mi = 0; mi < mo.n; ++mi) rhs[mi] |= part[mi];
        }
      ++rep.checked;
      if (lhs != rhs) rep.fail("multiplication compatibility", -1, "powerset-reader");
    }
  } else {
    ++rep.skipped;
  }
  for (std::uint32_t a = 0; a < (1u << nr); ++a) {
    auto out = theta(a);
    std::uint32_t expect = 0;
    for (int fi = 0; fi < nr; ++fi)
      if (a & (1u << fi)) expect |= 1u << rd.all[fi][mo.identity];
    ++rep.checked;
    if (out[mo.identity] != expect) rep.fail("counit compatibility", -1, "powerset-reader");
    // comultiplication: evaluate along products
    bool ok = true;
    for (int aa = 0; aa < mo.n && ok; ++aa)
      for (int bb = 0; bb < mo.n && ok; ++bb) {
        std::uint32_t lhs = out[mo.mul(aa, bb)];
        std::uint32_t rhs = 0;
        for (int fi = 0; fi < nr; ++fi)
          if (a & (1u << fi)) rhs |= 1u << rd.all[fi][mo.mul(aa, bb)];
        ok &= lhs == rhs;
      }
    ++rep.checked;
    if (!ok) rep.fail("comultiplication compatibility", -1, "powerset-reader");
  }
  return rep;
}

ValidationReport filter_reader_law(int n, const FiniteMonoid& mo, bool ultra) {
  ValidationReport rep;
  Readers rd(n, mo);
  int nr = static_cast<int>(rd.all.size());
  if (nr > 16) throw std::invalid_argument("carrier too large for the filter-reader law");
  // filters as nonempty bases; theta(F)(m) = principal filter on the image
  auto theta = [&](std::uint32_t base) {
    std::vector<std::uint32_t> out(mo.n, 0);
    for (int fi = 0; fi < nr; ++fi)
      if (base & (1u << fi))
        for (int mi = 0; mi < mo.n; ++mi) out[mi] |= 1u << rd.all[fi][mi];
    return out;
  };
  for (std::uint32_t base = 1; base < (1u << nr); ++base) {
    if (ultra && popcount(base) != 1) continue;
    auto out = theta(base);
    // unit instances are bases of size one
    if (popcount(base) == 1) {
      int fi = __builtin_ctz(base);
      bool ok = true;
      for (int mi = 0; mi < mo.n; ++mi) ok &= out[mi] == (1u << rd.all[fi][mi]);
      ++rep.checked;
      if (!ok) rep.fail("unit compatibility", -1, "filter-reader");
    }
    // counit
    std::uint32_t expect = 0;
    for (int fi = 0; fi < nr; ++fi)
      if (base & (1u << fi)) expect |= 1u << rd.all[fi][mo.identity];
    ++rep.checked;
    if (out[mo.identity] != expect) rep.fail("counit compatibility", -1, "filter-reader");
    // comultiplication
    bool ok = true;
    for (int aa = 0; aa < mo.n && ok; ++aa)
      for (int bb = 0; bb < mo.n && ok; ++bb) {
        std::uint32_t lhs = out[mo.mul(aa, bb)];
        std::uint32_t rhs = 0;
        for (int fi = 0; fi < nr; ++fi)
          if (base & (1u << fi)) rhs |= 1u << rd.all[fi][mo.mul(aa, bb)];
        ok &= lhs == rhs;
      }
    ++rep.checked;
    if (!ok) rep.fail("comultiplication compatibility", -1, "filter-reader");
  }
  // multiplication: Kowalski sum = union of bases; exhaustive over FF(X^M)
  std::vector<std::uint32_t> fxm;
  for (std::uint32_t b = 1; b < (1u << nr); ++b)
    if (!ultra || popcount(b) == 1) fxm.push_back(b);
  int nf = static_cast<int>(fxm.size());
  if (nf <= 16) {
    for (std::uint32_t fam = 1; fam < (1u << nf); ++fam) {
      if (ultra && popcount(fam) != 1) continue;
      std::uint32_t u = 0;
      for (int i = 0; i < nf; ++i)
        if (fam & (1u << i)) u |= fxm[i];
      auto lhs = theta(u);
      std::vector<std::uint32_t> rhs(mo.n, 0);
      for (int i = 0; i < nf; ++i)
        if (fam & (1u << i)) {
          auto part = theta(fxm[i]);
          for (int mi = 0; mi < mo.n; ++mi) rhs[mi] |= part[mi];
        }
      ++rep.checked;
      if (lhs != rhs) rep.fail("multiplication compatibility", -1, "filter-reader");
    }
  } else {
    ++rep.skipped;
  }
  return rep;
}

ValidationReport dist_reader_law(int n, const FiniteMonoid& mo, int q) {
  ValidationReport rep;
  Readers rd(n, mo);
  int nr = static_cast<int>(rd.all.size());
  auto theta = [&](const GridDist& p) {  // distribution over readers -> per m a marginal
    std::vector<GridDist> out(mo.n, GridDist{p.den, std::vector<long long>(n, 0)});
    for (int fi = 0; fi < nr; ++fi)
      for (int mi = 0; mi < mo.n; ++mi) out[mi].num[rd.all[fi][mi]] += p.num[fi];
    return out;
  };
  std::vector<GridDist> grid = dist_grid(nr, q);
  for (int fi = 0; fi < nr; ++fi) {
    GridDist pt{1, std::vector<long long>(nr, 0)};
    pt.num[fi] = 1;
    auto out = theta(pt);
    bool ok = true;
    for (int mi = 0; mi < mo.n; ++mi) {
      GridDist expect{1, std::vector<long long>(n, 0)};
      expect.num[rd.all[fi][mi]] = 1;
      ok &= out[mi] == expect;
    }
    ++rep.checked;
    if (!ok) rep.fail("unit compatibility", -1, "dist-reader");
  }
  std::vector<GridDist> outer_grid = dist_grid(static_cast<int>(grid.size()), q);
  for (const GridDist& outer : outer_grid) {
    GridDist mixed = flatten(outer, grid, nr);
    auto lhs = theta(mixed);
    bool ok = true;
    for (int mi = 0; mi < mo.n && ok; ++mi) {
      std::vector<GridDist> parts;
      for (const GridDist& g : grid) parts.push_back(theta(g)[mi]);
      GridDist rhs = flatten(outer, parts, n);
      ok &= lhs[mi] == rhs;
    }
    ++rep.checked;
    if (!ok) rep.fail("multiplication compatibility", -1, "dist-reader");
  }
  for (const GridDist& p : grid) {
    auto out = theta(p);
    GridDist expect{p.den, std::vector<long long>(n, 0)};
    for (int fi = 0; fi < nr; ++fi) expect.num[rd.all[fi][mo.identity]] += p.num[fi];
    ++rep.checked;
    if (!(out[mo.identity] == expect)) rep.fail("counit compatibility", -1, "dist-reader");
    bool ok = true;
    for (int aa = 0; aa < mo.n && ok; ++aa)
      for (int bb = 0; bb < mo.n && ok; ++bb) {
        GridDist rhs{p.den, std::vector<long long>(n, 0)};
        for (int fi = 0; fi < nr; ++fi) rhs.num[rd.all[fi][mo.mul(aa, bb)]] += p.num[fi];
        ok &= out[mo.mul(aa, bb)] == rhs;
      }
    ++rep.checked;
    if (!ok) rep.fail("comultiplication compatibility", -1, "dist-reader");
  }
  return rep;
}

}  // namespace

std::pair<int, std::uint32_t> sup_powerset_theta(std::uint32_t pairs, int c_size, int x_size) {
  (void)c_size;
  int c = 0;
  std::uint32_t set = 0;
  for (int p = 0; p < 32; ++p)
    if (pairs & (1u << p)) {
      c = std::max(c, p / x_size);
      set |= 1u << (p % x_size);
    }
  return {c, set};
}

std::pair<int, List> sup_list_theta(const List& pairs, int c_size, int x_size) {
  (void)c_size;
  int c = 0;
  List xs;
  for (int p : pairs) {
    c = std::max(c, p / x_size);
    xs.push_back(p % x_size);
  }
  return {c, xs};
}

std::vector<List> list_reader_theta(const std::vector<List>& fs, int m_size) {
  std::vector<List> out(m_size);
  for (int m = 0; m < m_size; ++m)
    for (const List& f : fs) out[m].push_back(f[m]);
  return out;
}

ValidationReport check_mixed_law(MixedLaw law, const Config& cfg) {
  switch (law) {
    case MixedLaw::sup_powerset: return sup_powerset_law(cfg.c_size, cfg.x_size);
    case MixedLaw::sup_list: return sup_list_law(cfg.c_size, cfg.x_size, cfg.list_bound);
    case MixedLaw::dist_product: return dist_product_law(cfg.c_size, cfg.x_size, cfg.dist_den);
    case MixedLaw::list_reader: return list_reader_law(cfg.x_size, cfg.monoid, cfg.list_bound);
    case MixedLaw::powerset_reader: return powerset_reader_law(cfg.x_size, cfg.monoid);
    case MixedLaw::filter_reader: {
      ValidationReport rep = filter_reader_law(cfg.x_size, cfg.monoid, false);
      rep.merge(filter_reader_law(cfg.x_size, cfg.monoid, true));
      return rep;
    }
    case MixedLaw::dist_reader: return dist_reader_law(cfg.x_size, cfg.monoid, cfg.dist_den);
  }
  throw std::invalid_argument("unknown mixed law");
}

// ---- L+ bimonad -----------------------------------------------------------

NestedList lplus_theta(const NestedList& w) {
  if (w.empty()) throw std::invalid_argument("lplus_theta needs a nonempty list");
  int m = static_cast<int>(w.size());
  NestedList out;
  long long terms = 0;
  for (int i = 0; i < m; ++i) {
    for (int jj = 0; jj < static_cast<int>(w[i].size()); ++jj) {
      List inner;
      inner.push_back(w[i][jj]);
      for (int k = i + 1; k < m; ++k) inner.push_back(w[k][0]);
      terms += static_cast<long long>(inner.size());
      out.push_back(std::move(inner));
    }
  }
  if (terms != lplus_term_count_formula(w))
    throw std::logic_error("lplus_theta: term count does not match the declared formula");
  return out;
}

long long lplus_term_count_formula(const NestedList& w) {
  long long sum = 0;
  int m = static_cast<int>(w.size());
  for (int i = 1; i <= m; ++i) sum += static_cast<long long>(w[i - 1].size()) * (m - i + 1);
  return sum;
}

bool Semigroup::associative() const {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

List lplus_w_product(const Semigroup& s, const List& a, const List& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("W-product needs nonempty lists");
  List out;
  for (int x : a) out.push_back(s.mul(x, b[0]));
  for (int y : b) out.push_back(y);
  return out;
}

List lplus_rho(const Semigroup& s, const List& w) {
  if (w.empty()) throw std::invalid_argument("rho needs a nonempty list");
  List out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int prod = w[i];
    for (std::size_t k = i + 1; k < w.size(); ++k) prod = s.mul(prod, w[k]);
    out.push_back(prod);
  }
  return out;
}

ValidationReport lplus_bimonad_check(int x_size, int list_bound) {
  ValidationReport rep;
  auto tails = [](const List& w) {
    NestedList out;
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(List(w.begin() + i, w.end()));
    return out;
  };
  auto within = [&](const NestedList& w) {
    if (static_cast<int>(w.size()) > list_bound) return false;
    for (const List& r : w)
      if (static_cast<int>(r.size()) > list_bound) return false;
    return true;
  };
  // unit: theta([w]) = [[w_1], ..., [w_k]]
  for (const List& w : all_lists(x_size, list_bound, false)) {
    NestedList got = lplus_theta({w});
    NestedList expect;
    for (int a : w) expect.push_back({a});
    ++rep.checked;
    if (got != expect) rep.fail("unit compatibility", -1, "L+ bimonad");
  }
  // multiplication: theta(concat) = flatten-inner of theta blocks stitched
  for_each_nested3(x_size, list_bound, list_bound, [&](const Nested3& t) {
    NestedList concat;
    for (const NestedList& b : t)
      for (const List& r : b) concat.push_back(r);
    if (!within(concat)) {
      ++rep.skipped;
      return;
    }
    NestedList lhs = lplus_theta(concat);
    if (!within(lhs)) {
      ++rep.skipped;
      return;
    }
    // rhs: (C mu)(theta at L+X)(L+ theta): apply theta inside each block,
    // regard the results as elements of L+(L+X), apply theta again at the
    // list level, then flatten the inner double lists
    NestedList inner_applied;  // elements of L+(L+X) listed as blocks
    std::vector<NestedList> blocks;
    for (const NestedList& b : t) {
      NestedList tb = lplus_theta(b);
      if (!within(tb)) {
        ++rep.skipped;
        return;
      }
      blocks.push_back(std::move(tb));
    }
    // theta at the L+X level treats each block as a list of atoms = lists
    // over X; enumerate the same pattern with atoms being inner lists
    int mm = static_cast<int>(blocks.size());
    std::vector<NestedList> stitched;  // list over L+X of lists over X? flatten below
    NestedList rhs;
    for (int i = 0; i < mm; ++i)
      for (int jj = 0; jj < static_cast<int>(blocks[i].size()); ++jj) {
        // [atom_{i,j}, atom_{i+1,1}, ..., atom_{m,1}] then inner flatten
        List joined = blocks[i][jj];
        for (int k = i + 1; k < mm; ++k)
          for (int v : blocks[k][0]) joined.push_back(v);
        rhs.push_back(std::move(joined));
      }
    if (!within(rhs)) {
      ++rep.skipped;
      return;
    }
    ++rep.checked;
    if (lhs != rhs) rep.fail("multiplication compatibility", -1, "L+ bimonad");
  });
  // counit: heads after theta = heads elementwise
  for_each_nested2(x_size, list_bound, list_bound, false, [&](const NestedList& w) {
    if (w.empty()) return;
    NestedList th = lplus_theta(w);
    if (!within(th)) {
      ++rep.skipped;
      return;
    }
    List lhs = th[0];
    List rhs;
    for (const List& r : w) rhs.push_back(r[0]);
    ++rep.checked;
    if (lhs != rhs) rep.fail("counit compatibility", -1, "L+ bimonad");
  });
  // comultiplication: tails after theta = (L+ theta)(theta at L+X)(tails inside)
  for_each_nested2(x_size, list_bound, list_bound, false, [&](const NestedList& w) {
    if (w.empty()) return;
    NestedList th = lplus_theta(w);
    if (!within(th)) {
      ++rep.skipped;
      return;
    }
    std::vector<NestedList> lhs;
    for (std::size_t i = 0; i < th.size(); ++i) lhs.push_back(NestedList(th.begin() + i, th.end()));
    // rhs: tails elementwise, then the theta pattern at the L+X level, then
    // theta applied inside each resulting list
    std::vector<NestedList> tailed;  // per element of w, its tails
    for (const List& r : w) tailed.push_back(tails(r));
    int mm = static_cast<int>(tailed.size());
    std::vector<NestedList> mid;
    for (int i = 0; i < mm; ++i)
      for (int jj = 0; jj < static_cast<int>(tailed[i].size()); ++jj) {
        NestedList entry;
        entry.push_back(tailed[i][jj]);
        for (int k = i + 1; k < mm; ++k) entry.push_back(tailed[k][0]);
        mid.push_back(std::move(entry));
      }
    std::vector<NestedList> rhs;
    bool skipped = false;
    for (const NestedList& entry : mid) {
      NestedList te = lplus_theta(entry);
      if (!within(te)) {
        skipped = true;
        break;
      }
      rhs.push_back(std::move(te));
    }
    if (skipped || static_cast<int>(rhs.size()) > list_bound) {
      ++rep.skipped;
      return;
    }
    ++rep.checked;
    if (lhs != rhs) rep.fail("comultiplication compatibility", -1, "L+ bimonad");
  });
  return rep;
}

bool Forest::valid() const {
  if (static_cast<int>(parent.size()) != n) return false;
  for (int x = 0; x < n; ++x) {
    int cur = x, steps = 0;
    while (cur != -1) {
      cur = parent[cur];
      if (++steps > n) return false;  // cycle
    }
  }
  return true;
}

List Forest::path(int x) const {
  List out;
  int cur = x;
  while (cur != -1) {
    out.push_back(cur);
    cur = parent[cur];
  }
  return out;
}

bool lplus_entwined_check(const Semigroup& s, const Forest& f, int list_bound,
                          ValidationReport* why) {
  ValidationReport rep;
  if (s.n != f.n) throw std::invalid_argument("carrier mismatch");
  for (int x = 0; x < f.n; ++x)
    if (static_cast<int>(f.path(x).size()) > list_bound) {
      rep.fail("forest path exceeds the list bound", -1);
      if (why) *why = rep;
      return false;
    }
  auto fold = [&](const List& w) {
    int acc = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) acc = s.mul(acc, w[i]);
    return acc;
  };
  for (const List& w : all_lists(s.n, list_bound, false)) {
    NestedList expanded;
    for (int x : w) expanded.push_back(f.path(x));
    bool fits = static_cast<int>(expanded.size()) <= list_bound;
    for (const List& r : expanded) fits &= static_cast<int>(r.size()) <= list_bound;
    if (!fits) {
      ++rep.skipped;
      continue;
    }
    NestedList th = lplus_theta(expanded);
    bool fits2 = static_cast<int>(th.size()) <= list_bound;
    for (const List& r : th) fits2 &= static_cast<int>(r.size()) <= list_bound;
    if (!fits2) {
      ++rep.skipped;
      continue;
    }
    List rhs;
    for (const List& r : th) rhs.push_back(fold(r));
    List lhs = f.path(fold(w));
    ++rep.checked;
    if (lhs != rhs) {
      rep.fail("entwined pentagon", -1, "input length " + std::to_string(w.size()));
      if (why) *why = rep;
      return false;
    }
  }
  if (why) *why = rep;
  return rep.ok();
}

std::vector<LplusEntwined> lplus_entwined_enumerate(int max_carrier, int list_bound) {
  if (max_carrier > 3)
    throw std::invalid_argument(
        "entwined enumeration refused above carrier 3 (the search space grows as n^(n^2) tables "
        "times forests)");
  std::vector<LplusEntwined> out;
  for (int n = 0; n <= max_carrier; ++n) {
    if (n == 0) {
      // the trivial semigroup on the empty carrier is vacuously entwined
      out.push_back({Semigroup{0, {}}, Forest{0, {}}});
      continue;
    }
    long long tables = 1;
    for (int i = 0; i < n * n; ++i) tables *= n;
    for (long long code = 0; code < tables; ++code) {
      Semigroup s;
      s.n = n;
      s.table.assign(n, std::vector<int>(n, 0));
      long long rem = code;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          s.table[a][b] = static_cast<int>(rem % n);
          rem /= n;
        }
      if (!s.associative()) continue;
      long long forests = 1;
      for (int i = 0; i < n; ++i) forests *= (n + 1);
      for (long long fcode = 0; fcode < forests; ++fcode) {
        Forest f;
        f.n = n;
        f.parent.assign(n, -1);
        long long frem = fcode;
        for (int i = 0; i < n; ++i) {
          int p = static_cast<int>(frem % (n + 1));
          frem /= (n + 1);
          f.parent[i] = p == n ? -1 : p;
        }
        if (!f.valid()) continue;
        if (lplus_entwined_check(s, f, list_bound)) out.push_back({s, f});
      }
    }
  }
  return out;
}

// ---- entwined algebras for the C x - laws ----------------------------------

bool SupLattice::valid() const {
  if (static_cast<int>(sup.size()) != (1 << n)) return false;
  for (int x = 0; x < n; ++x)
    if (sup[1 << x] != x) return false;
  // beta mu = beta P(beta) over families of subsets
  for (std::uint32_t fam = 0; fam < (1u << (1 << n)); ++fam) {
    std::uint32_t u = 0;
    std::uint32_t mapped = 0;
    for (int s = 0; s < (1 << n); ++s)
      if (fam & (1u << s)) {
        u |= static_cast<std::uint32_t>(s);
        mapped |= 1u << sup[s];
      }
    if (sup[u] != sup[mapped]) return false;
  }
  return true;
}

std::vector<SupLattice> enumerate_sup_lattices(int n) {
  if (n > 3) throw std::invalid_argument("sup-lattice enumeration refused above carrier 3");
  std::vector<SupLattice> out;
  if (n == 0) return out;
  int masks = 1 << n;
  std::vector<int> free_masks;
  for (int s = 0; s < masks; ++s)
    if (__builtin_popcount(static_cast<unsigned>(s)) != 1) free_masks.push_back(s);
  long long total = 1;
  for (std::size_t i = 0; i < free_masks.size(); ++i) total *= n;
  for (long long code = 0; code < total; ++code) {
    SupLattice lat;
    lat.n = n;
    lat.sup.assign(masks, 0);
    for (int x = 0; x < n; ++x) lat.sup[1 << x] = x;
    long long rem = code;
    for (int s : free_masks) {
      lat.sup[s] = static_cast<int>(rem % n);
      rem /= n;
    }
    if (lat.valid()) out.push_back(lat);
  }
  return out;
}

bool sup_powerset_entwined(const SupLattice& lat, const std::vector<int>& kappa, int c_size) {
  // pentagon: nabla(beta(A)) = (C beta)(theta(P nabla (A))) for every subset
  for (std::uint32_t a = 0; a < (1u << lat.n); ++a) {
    int beta_a = lat.sup[a];
    int lhs_c = kappa[beta_a];
    // P nabla(A) = {(kappa(x), x)}; theta: (sup colours, underlying set)
    int rhs_c = 0;
    for (int x = 0; x < lat.n; ++x)
      if (a & (1u << x)) rhs_c = std::max(rhs_c, kappa[x]);
    if (lhs_c != rhs_c) return false;
    (void)c_size;
  }
  return true;
}

bool sup_preserving_colouring(const SupLattice& lat, const std::vector<int>& kappa, int c_size) {
  for (std::uint32_t a = 0; a < (1u << lat.n); ++a) {
    int rhs = 0;
    for (int x = 0; x < lat.n; ++x)
      if (a & (1u << x)) rhs = std::max(rhs, kappa[x]);
    if (kappa[lat.sup[a]] != rhs) return false;
  }
  (void)c_size;
  return true;
}

bool sup_list_entwined(const FiniteMonoid& m, const std::vector<int>& kappa, int c_size,
                       int list_bound) {
  for (const List& w : all_lists(m.n, list_bound, true)) {
    int prod = m.identity;
    for (int x : w) prod = m.mul(prod, x);
    int lhs = kappa[prod];
    int rhs = 0;
    for (int x : w) rhs = std::max(rhs, kappa[x]);
    if (lhs != rhs) return false;
  }
  (void)c_size;
  return true;
}

bool sup_monoid_colouring(const FiniteMonoid& m, const std::vector<int>& kappa, int c_size,
                          int list_bound) {
  if (kappa[m.identity] != 0) return false;
  for (const List& w : all_lists(m.n, list_bound, false)) {
    int prod = m.identity;
    for (int x : w) prod = m.mul(prod, x);
    int rhs = 0;
    for (int x : w) rhs = std::max(rhs, kappa[x]);
    if (kappa[prod] != rhs) return false;
  }
  (void)c_size;
  return true;
}

// ---- Kleisli --------------------------------------------------------------

std::vector<std::uint32_t> kleisli_compose_powerset(const std::vector<std::uint32_t>& f,
                                                    const std::vector<std::uint32_t>& g) {
  std::vector<std::uint32_t> out(f.size(), 0);
  for (std::size_t x = 0; x < f.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      if (f[x] & (1u << y)) out[x] |= g[y];
  return out;
}

std::vector<GridDist> kleisli_compose_dist(const std::vector<GridDist>& f,
                                           const std::vector<GridDist>& g, int z_size) {
  std::vector<GridDist> out;
  for (const GridDist& fx : f) out.push_back(flatten(fx, g, z_size));
  return out;
}

}  // namespace cychom::sets
