#include "cychom/nerve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace cychom {

int FiniteCategory::compose(int g, int f) const {
  int h = compose_table[g][f];
  if (h < 0) throw std::invalid_argument("morphisms are not composable");
  return h;
}

std::optional<int> FiniteCategory::inverse_of(int f) const {
  const Mor& m = morphisms[f];
  for (int g = 0; g < mor_count(); ++g) {
    if (morphisms[g].src != m.tgt || morphisms[g].tgt != m.src) continue;
    if (compose_table[g][f] == identity[m.src] && compose_table[f][g] == identity[m.tgt]) return g;
  }
  return std::nullopt;
}

bool FiniteCategory::is_groupoid() const {
  for (int f = 0; f < mor_count(); ++f)
    if (!inverse_of(f)) return false;
  return true;
}

ValidationReport FiniteCategory::validate() const {
  ValidationReport rep;
  int nm = mor_count(), no = obj_count();
  if (static_cast<int>(identity.size()) != no) {
    rep.fail("one identity per object required", -1);
    return rep;
  }
  if (static_cast<int>(compose_table.size()) != nm) {
    rep.fail("composition table shape mismatch", -1);
    return rep;
  }
  for (const auto& row : compose_table)
    if (static_cast<int>(row.size()) != nm) {
      rep.fail("composition table shape mismatch", -1);
      return rep;
    }
  for (const Mor& m : morphisms)
    if (m.src < 0 || m.src >= no || m.tgt < 0 || m.tgt >= no) {
      rep.fail("morphism endpoints out of range", -1, m.name);
      return rep;
    }
  for (int o = 0; o < no; ++o) {
    int e = identity[o];
    ++rep.checked;
    if (e < 0 || e >= nm || morphisms[e].src != o || morphisms[e].tgt != o)
      rep.fail("identity endpoints", -1, objects[o]);
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      ++rep.checked;
      int h = compose_table[g][f];
      if (composable(g, f)) {
        if (h < 0) {
          rep.fail("composition missing on a composable pair", -1,
                   morphisms[g].name + " . " + morphisms[f].name);
        } else if (morphisms[h].src != morphisms[f].src || morphisms[h].tgt != morphisms[g].tgt) {
          rep.fail("composite endpoints", -1, morphisms[g].name + " . " + morphisms[f].name);
        }
      } else if (h >= 0) {
        rep.fail("composition defined on a non-composable pair", -1,
                 morphisms[g].name + " . " + morphisms[f].name);
      }
    }
  if (!rep.ok()) return rep;
  for (int f = 0; f < nm; ++f) {
    ++rep.checked;
    if (compose_table[f][identity[morphisms[f].src]] != f) rep.fail("right identity law", -1, morphisms[f].name);
    if (compose_table[identity[morphisms[f].tgt]][f] != f) rep.fail("left identity law", -1, morphisms[f].name);
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g) {
      if (!composable(h, g)) continue;
      for (int f = 0; f < nm; ++f) {
        if (!composable(g, f)) continue;
        ++rep.checked;
        if (compose_table[compose_table[h][g]][f] != compose_table[h][compose_table[g][f]])
          rep.fail("associativity", -1,
                   morphisms[h].name + " . " + morphisms[g].name + " . " + morphisms[f].name);
      }
    }
  return rep;
}

// ---- catalog ---------------------------------------------------------------

namespace {

FiniteCategory from_table(std::vector<std::string> objects, std::vector<FiniteCategory::Mor> mors,
                          std::vector<int> ids,
                          const std::function<int(const FiniteCategory&, int, int)>& comp) {
  FiniteCategory c;
  c.objects = std::move(objects);
  c.morphisms = std::move(mors);
  c.identity = std::move(ids);
  int nm = c.mor_count();
  c.compose_table.assign(nm, std::vector<int>(nm, -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.composable(g, f)) c.compose_table[g][f] = comp(c, g, f);
  ValidationReport rep = c.validate();
  if (!rep.ok()) throw std::logic_error("catalog category invalid:\n" + rep.str());
  return c;
}

}  // namespace

FiniteCategory trivial_category() { return group_category(1); }

FiniteCategory group_category(int n) {
  std::vector<FiniteCategory::Mor> mors;
  for (int i = 0; i < n; ++i)
    mors.push_back({i == 0 ? "1" : "g^" + std::to_string(i), 0, 0});
  return from_table({"*"}, std::move(mors), {0},
                    [n](const FiniteCategory&, int g, int f) { return (g + f) % n; });
}

FiniteCategory interval_category() { return chain_category(1); }

FiniteCategory chain_category(int length) {
  // objects 0..length; unique morphism i -> j for i <= j
  std::vector<std::string> objs;
  std::vector<FiniteCategory::Mor> mors;
  std::vector<int> ids(length + 1, -1);
  std::map<std::pair<int, int>, int> idx;
  for (int i = 0; i <= length; ++i) objs.push_back(std::to_string(i));
  for (int i = 0; i <= length; ++i)
    for (int j = i; j <= length; ++j) {
      idx[{i, j}] = static_cast<int>(mors.size());
      mors.push_back({"[" + std::to_string(i) + "->" + std::to_string(j) + "]", i, j});
      if (i == j) ids[i] = idx[{i, j}];
    }
  return from_table(std::move(objs), std::move(mors), std::move(ids),
                    [idx](const FiniteCategory& c, int g, int f) {
                      return idx.at({c.morphisms[f].src, c.morphisms[g].tgt});
                    });
}

FiniteCategory indiscrete_category(int n) {
  std::vector<std::string> objs;
  std::vector<FiniteCategory::Mor> mors;
  std::vector<int> ids(n, -1);
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) ids[i] = static_cast<int>(mors.size());
      mors.push_back({"(" + std::to_string(i) + "->" + std::to_string(j) + ")", i, j});
    }
  return from_table(std::move(objs), std::move(mors), std::move(ids),
                    [n](const FiniteCategory& c, int g, int f) {
                      return c.morphisms[f].src * n + c.morphisms[g].tgt;
                    });
}

FiniteCategory discrete_category(int n) {
  std::vector<std::string> objs;
  std::vector<FiniteCategory::Mor> mors;
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    mors.push_back({"1_" + std::to_string(i), i, i});
    ids.push_back(i);
  }
  return from_table(std::move(objs), std::move(mors), std::move(ids),
                    [](const FiniteCategory&, int g, int) { return g; });
}

FiniteCategory idempotent_monoid_category() {
  // one object, morphisms {1, e} with e e = e
  return from_table({"*"}, {{"1", 0, 0}, {"e", 0, 0}}, {0},
                    [](const FiniteCategory&, int g, int f) { return std::max(g, f); });
}

FiniteCategory parallel_arrows_category() {
  return from_table({"A", "B"}, {{"1_A", 0, 0}, {"1_B", 1, 1}, {"f", 0, 1}, {"g", 0, 1}},
                    {0, 1}, [](const FiniteCategory& c, int g, int f) {
                      if (g == 1) return f;  // 1_B . x = x
                      if (f == 0) return g;  // x . 1_A = x
                      return -1;             // unreachable for this shape
                    });
}

// ---- nerve ------------------------------------------------------------------

int NerveSet::index_of(int degree, const std::vector<int>& tuple) const {
  const auto& level = simplices[degree];
  auto it = std::find(level.begin(), level.end(), tuple);
  if (it == level.end()) throw std::logic_error("tuple is not a simplex");
  return static_cast<int>(it - level.begin());
}

int NerveSet::face(int degree, int i, int simplex) const {
  const FiniteCategory& c = *category;
  const std::vector<int>& t = simplices[degree][simplex];
  if (degree == 1) {
    // d_0 = target, d_1 = source
    return i == 0 ? c.morphisms[t[0]].tgt : c.morphisms[t[0]].src;
  }
  int n = degree;
  std::vector<int> out;
  if (i == 0) {
    out.assign(t.begin(), t.end() - 1);  // drop f_0 (stored last)
  } else if (i == n) {
    out.assign(t.begin() + 1, t.end());  // drop f_{n-1} (stored first)
  } else {
    // compose f_i f_{i-1}; tuple is stored as (f_{n-1}, ..., f_0)
    out = t;
    int pos = n - 1 - i;  // position of f_i
    out[pos] = c.compose(t[pos], t[pos + 1]);
    out.erase(out.begin() + pos + 1);
  }
  return index_of(degree - 1, out);
}

int NerveSet::degen(int degree, int j, int simplex) const {
  const FiniteCategory& c = *category;
  int n = degree;
  std::vector<int> out;
  if (degree == 0) {
    out = {c.identity[simplex]};
  } else {
    const std::vector<int>& t = simplices[degree][simplex];
    out = t;
    // insert an identity at position j: s_j (f_{n-1},...,f_0) =
    // (f_{n-1},...,f_j, 1, f_{j-1},...,f_0)
    int pos = n - j;  // insertion point in storage order
    int obj = j == 0 ? c.morphisms[t[n - 1]].src : c.morphisms[t[n - j]].tgt;
    out.insert(out.begin() + pos, c.identity[obj]);
  }
  return index_of(degree + 1, out);
}

NerveSet nerve(const FiniteCategory& c, int top) {
  ValidationReport rep = c.validate();
  if (!rep.ok()) throw std::invalid_argument("invalid category:\n" + rep.str());
  NerveSet nv;
  nv.category = &c;
  nv.top = top;
  nv.simplices.resize(top + 1);
  // degree-0 simplices are the objects, stored as singleton tuples {o} so
  // that the index of {o} is o itself
  for (int o = 0; o < c.obj_count(); ++o) nv.simplices[0].push_back({o});
  if (top >= 1)
    for (int f = 0; f < c.mor_count(); ++f) nv.simplices[1].push_back({f});
  for (int n = 2; n <= top; ++n) {
    for (const std::vector<int>& t : nv.simplices[n - 1])
      for (int f = 0; f < c.mor_count(); ++f) {
        // extend on the right by f_0' = f with t's last morphism composable
        if (c.morphisms[t.back()].src != c.morphisms[f].tgt) continue;
        std::vector<int> e = t;
        e.push_back(f);
        nv.simplices[n].push_back(std::move(e));
      }
    std::sort(nv.simplices[n].begin(), nv.simplices[n].end());
  }
  // exhaustive simplicial identity check on index maps
  ValidationReport ids;
  for (int n = 2; n <= top; ++n)
    for (int s = 0; s < nv.count(n); ++s)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) {
          ++ids.checked;
          if (nv.face(n - 1, i, nv.face(n, j, s)) != nv.face(n - 1, j - 1, nv.face(n, i, s)))
            ids.fail("nerve simplicial identity d_i d_j", n);
        }
  for (int n = 0; n + 1 <= top; ++n)
    for (int s = 0; s < nv.count(n); ++s)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          ++ids.checked;
          int lhs = nv.face(n + 1, i, nv.degen(n, j, s));
          int expect;
          if (i == j || i == j + 1) {
            expect = s;
          } else if (i < j) {
            expect = nv.degen(n - 1, j - 1, nv.face(n, i, s));
          } else {
            expect = nv.degen(n - 1, j, nv.face(n, i - 1, s));
          }
          if (lhs != expect) ids.fail("nerve simplicial identity d_i s_j", n);
        }
  for (int n = 0; n + 2 <= top; ++n)
    for (int s = 0; s < nv.count(n); ++s)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i) {
          ++ids.checked;
          if (nv.degen(n + 1, i, nv.degen(n, j, s)) != nv.degen(n + 1, j + 1, nv.degen(n, i, s)))
            ids.fail("nerve simplicial identity s_i s_j", n);
        }
  if (!ids.ok()) throw std::logic_error("nerve fails simplicial identities:\n" + ids.str());
  return nv;
}

// ---- coreflectors -----------------------------------------------------------

ValidationReport Coreflector::validate(const FiniteCategory& c) const {
  ValidationReport rep;
  int no = c.obj_count(), nm = c.mor_count();
  if (static_cast<int>(object_map.size()) != no || static_cast<int>(morphism_map.size()) != nm) {
    rep.fail("coreflector shape mismatch", -1);
    return rep;
  }
  for (int f = 0; f < nm; ++f) {
    ++rep.checked;
    int tf = morphism_map[f];
    if (tf < 0 || tf >= nm || c.morphisms[tf].src != object_map[c.morphisms[f].tgt] ||
        c.morphisms[tf].tgt != c.morphisms[f].src)
      rep.fail("t f must run t(cod f) -> dom f", -1, c.morphisms[f].name);
  }
  if (!rep.ok()) return rep;
  for (int o = 0; o < no; ++o) {
    ++rep.checked;
    // t^2(1_A) = 1_{tA}
    if (morphism_map[morphism_map[c.identity[o]]] != c.identity[object_map[o]])
      rep.fail("t^2(1_A) = 1_{tA}", -1, c.objects[o]);
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      if (!c.composable(g, f)) continue;
      int h = c.compose_table[g][f];
      ++rep.checked;
      // the triangle rule: t g = f . t h
      if (morphism_map[g] != c.compose_table[f][morphism_map[h]])
        rep.fail("triangle rule t g = f . t h", -1,
                 c.morphisms[g].name + " . " + c.morphisms[f].name);
    }
  return rep;
}

std::optional<GroupoidWitness> find_coreflective_groupoid(const FiniteCategory& c) {
  ValidationReport rep = c.validate();
  if (!rep.ok()) throw std::invalid_argument("invalid category:\n" + rep.str());
  int no = c.obj_count();
  // subsets in increasing size, lexicographic within each size
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << no); ++mask) {
    std::vector<int> s;
    for (int o = 0; o < no; ++o)
      if (mask & (1 << o)) s.push_back(o);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const std::vector<int>& d : subsets) {
    auto in_d = [&](int o) { return std::find(d.begin(), d.end(), o) != d.end(); };
    // the full subcategory on d must be a groupoid
    bool groupoid = true;
    for (int f = 0; f < c.mor_count() && groupoid; ++f) {
      if (!in_d(c.morphisms[f].src) || !in_d(c.morphisms[f].tgt)) continue;
      auto inv = c.inverse_of(f);
      groupoid = inv.has_value() && in_d(c.morphisms[*inv].src);
    }
    if (!groupoid) continue;
    // universal arrow eps_c : Rc -> c for every object
    GroupoidWitness w;
    w.subcategory_objects = d;
    w.reflection.assign(no, -1);
    w.counit.assign(no, -1);
    bool all_ok = true;
    for (int obj = 0; obj < no && all_ok; ++obj) {
      bool found = false;
      for (int rc : d) {
        if (found) break;
        for (int eps = 0; eps < c.mor_count() && !found; ++eps) {
          if (c.morphisms[eps].src != rc || c.morphisms[eps].tgt != obj) continue;
          // every d0 -> obj with d0 in D factors uniquely through eps
          bool universal = true;
          for (int f = 0; f < c.mor_count() && universal; ++f) {
            if (!in_d(c.morphisms[f].src) || c.morphisms[f].tgt != obj) continue;
            int count = 0;
            for (int g = 0; g < c.mor_count(); ++g) {
              if (c.morphisms[g].src != c.morphisms[f].src || c.morphisms[g].tgt != rc) continue;
              if (!in_d(c.morphisms[g].src)) continue;
              if (c.compose_table[eps][g] == f) ++count;
            }
            universal = count == 1;
          }
          if (universal) {
            w.reflection[obj] = rc;
            w.counit[obj] = eps;
            found = true;
          }
        }
      }
      all_ok = found;
    }
    if (all_ok) return w;
  }
  return std::nullopt;
}

Coreflector coreflector_from_witness(const FiniteCategory& c, const GroupoidWitness& w) {
  Coreflector t;
  int no = c.obj_count(), nm = c.mor_count();
  t.object_map.resize(no);
  for (int o = 0; o < no; ++o) t.object_map[o] = w.reflection[o];
  t.morphism_map.resize(nm);
  for (int f = 0; f < nm; ++f) {
    int a = c.morphisms[f].src, b = c.morphisms[f].tgt;
    // Rf : RA -> RB is the unique subcategory morphism with
    // eps_B . Rf = f . eps_A
    int target = c.compose_table[f][w.counit[a]];
    int rf = -1;
    for (int g = 0; g < nm; ++g) {
      if (c.morphisms[g].src != w.reflection[a] || c.morphisms[g].tgt != w.reflection[b]) continue;
      if (c.compose_table[w.counit[b]][g] == target) {
        if (rf >= 0) throw std::logic_error("witness is not universal: Rf is not unique");
        rf = g;
      }
    }
    if (rf < 0) throw std::logic_error("witness is not universal: Rf does not exist");
    auto inv = c.inverse_of(rf);
    if (!inv) throw std::logic_error("witness subcategory is not a groupoid");
    t.morphism_map[f] = c.compose_table[w.counit[a]][*inv];
  }
  ValidationReport rep = t.validate(c);
  if (!rep.ok()) throw std::logic_error("witness produced an invalid coreflector:\n" + rep.str());
  return t;
}

std::vector<Coreflector> enumerate_coreflectors(const FiniteCategory& c) {
  ValidationReport rep = c.validate();
  if (!rep.ok()) throw std::invalid_argument("invalid category:\n" + rep.str());
  if (c.mor_count() > 8)
    throw std::invalid_argument("direct coreflector enumeration is limited to |Mor| <= 8");
  std::vector<Coreflector> out;
  int no = c.obj_count(), nm = c.mor_count();
  std::vector<int> omap(no, 0);
  std::function<void(int)> rec_obj = [&](int opos) {
    if (opos == no) {
      // assign morphism images with pruning on the triangle rule
      std::vector<int> mmap(nm, -1);
      std::function<void(int)> rec_mor = [&](int f) {
        if (f == nm) {
          Coreflector cand{omap, mmap};
          if (cand.validate(c).ok()) out.push_back(cand);
          return;
        }
        for (int tf = 0; tf < nm; ++tf) {
          if (c.morphisms[tf].src != omap[c.morphisms[f].tgt] ||
              c.morphisms[tf].tgt != c.morphisms[f].src)
            continue;
          mmap[f] = tf;
          // partial triangle-rule pruning over already-assigned morphisms
          bool ok = true;
          for (int g = 0; g <= f && ok; ++g) {
            if (mmap[g] < 0) continue;
            for (int f2 = 0; f2 <= f && ok; ++f2) {
              if (mmap[f2] < 0 || !c.composable(g, f2)) continue;
              int h = c.compose_table[g][f2];
              if (h <= f && mmap[h] >= 0)
                ok = mmap[g] == c.compose_table[f2][mmap[h]];
            }
          }
          if (ok) rec_mor(f + 1);
        }
        mmap[f] = -1;
      };
      rec_mor(0);
      return;
    }
    for (int img = 0; img < no; ++img) {
      omap[opos] = img;
      rec_obj(opos + 1);
    }
  };
  rec_obj(0);
  return out;
}

// ---- duplicial structure on the nerve ----------------------------------------

DuplicialNerve duplicial_on_nerve(const FiniteCategory& c, const Coreflector& coref, int top) {
  ValidationReport crep = coref.validate(c);
  if (!crep.ok())
    throw std::invalid_argument("invalid coreflector:\n" + crep.str());
  DuplicialNerve dn;
  dn.nerve = nerve(c, top);
  dn.t.resize(top + 1);
  // degree 0: the object map; degree n: rotate and apply t to the composite
  for (int s = 0; s < dn.nerve.count(0); ++s)
    dn.t[0].push_back(coref.object_map[dn.nerve.simplices[0][s][0]]);
  for (int n = 1; n <= top; ++n)
    for (int s = 0; s < dn.nerve.count(n); ++s) {
      const std::vector<int>& tuple = dn.nerve.simplices[n][s];
      int comp = tuple.back();
      for (int k = static_cast<int>(tuple.size()) - 2; k >= 0; --k)
        comp = c.compose(tuple[k], comp);
      std::vector<int> out(tuple.begin() + 1, tuple.end());
      out.push_back(coref.morphism_map[comp]);
      dn.t[n].push_back(dn.nerve.index_of(n, out));
    }
  // full duplicial identity suite on index maps
  ValidationReport& rep = dn.report;
  for (int n = 1; n <= top; ++n)
    for (int s = 0; s < dn.nerve.count(n); ++s) {
      for (int i = 1; i <= n; ++i) {
        ++rep.checked;
        if (dn.nerve.face(n, i, dn.t[n][s]) != dn.t[n - 1][dn.nerve.face(n, i - 1, s)])
          rep.fail("d_i t = t d_{i-1}", n);
      }
      ++rep.checked;
      if (dn.nerve.face(n, 0, dn.t[n][s]) != dn.nerve.face(n, n, s)) rep.fail("d_0 t = d_n", n);
    }
  for (int n = 0; n + 1 <= top; ++n)
    for (int s = 0; s < dn.nerve.count(n); ++s) {
      for (int j = 1; j <= n; ++j) {
        ++rep.checked;
        if (dn.nerve.degen(n, j, dn.t[n][s]) != dn.t[n + 1][dn.nerve.degen(n, j - 1, s)])
          rep.fail("s_j t = t s_{j-1}", n);
      }
      ++rep.checked;
      if (dn.nerve.degen(n, 0, dn.t[n][s]) != dn.t[n + 1][dn.t[n + 1][dn.nerve.degen(n, n, s)]])
        rep.fail("s_0 t = t^2 s_n", n);
    }
  return dn;
}

int cyclic_failure_degree(const DuplicialNerve& dn) {
  for (int n = 0; n <= dn.nerve.top; ++n) {
    for (int s = 0; s < dn.nerve.count(n); ++s) {
      int cur = s;
      for (int k = 0; k <= n; ++k) cur = dn.t[n][cur];
      if (cur != s) return n;
    }
  }
  return -1;
}

CyclicDecision cyclic_iff_groupoid(const FiniteCategory& c, int top) {
  CyclicDecision out;
  out.groupoid = c.is_groupoid();
  if (out.groupoid) {
    // identity witness: D = C, eps = identities
    GroupoidWitness w;
    for (int o = 0; o < c.obj_count(); ++o) {
      w.subcategory_objects.push_back(o);
      w.reflection.push_back(o);
      w.counit.push_back(c.identity[o]);
    }
    Coreflector coref = coreflector_from_witness(c, w);
    DuplicialNerve dn = duplicial_on_nerve(c, coref, top);
    if (!dn.report.ok())
      throw std::logic_error("identity witness failed the duplicial suite:\n" + dn.report.str());
    out.duplicial = true;
    out.witness = std::move(w);
    out.cyclic_failure = cyclic_failure_degree(dn);
    if (out.cyclic_failure != -1)
      throw std::logic_error("groupoid nerve failed the cyclicity check");
    return out;
  }
  out.witness = find_coreflective_groupoid(c);
  out.duplicial = out.witness.has_value();
  if (out.duplicial) {
    Coreflector coref = coreflector_from_witness(c, *out.witness);
    DuplicialNerve dn = duplicial_on_nerve(c, coref, top);
    if (!dn.report.ok())
      throw std::logic_error("witness coreflector failed the duplicial suite:\n" + dn.report.str());
    out.cyclic_failure = cyclic_failure_degree(dn);
    if (out.cyclic_failure == -1)
      throw std::logic_error("non-groupoid nerve passed the cyclicity check");
  }
  return out;
}

}  // namespace cychom
