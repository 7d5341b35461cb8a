#include "cychom/io.hpp"

#include <fstream>
#include <map>

namespace cychom::io {

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field: ") + key);
  return j.at(key);
}

int need_int(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string(key) + " must be a nonnegative integer");
  return v.get<int>();
}

Scalar parse_scalar(const json& j, const Field& f) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar::of(f, j.get<long>());
  throw ParseError("scalars must be strings like \"p/q\" (or integers)");
}

void check_invariants(const ValidationReport& rep, const std::string& what) {
  if (!rep.ok()) throw InvariantError(what + ":\n" + rep.str());
}

}  // namespace

Field parse_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::Q();
  if (j.is_object() && j.contains("Fp")) {
    const json& p = j.at("Fp");
    if (!p.is_number_unsigned() && !p.is_number_integer()) throw ParseError("Fp must hold a prime");
    try {
      return Field::Fp(p.get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  throw ParseError("field must be \"Q\" or {\"Fp\": p}");
}

json field_json(const Field& f) {
  if (f.is_rationals()) return "Q";
  return json{{"Fp", f.p}};
}

Matrix parse_matrix(const json& j, int rows, int cols, const Field& f) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw ParseError("matrix must be a row-major array of " + std::to_string(rows * cols) +
                     " entries, got " + std::to_string(j.size()));
  Matrix m(rows, cols, f);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = parse_scalar(j[i * cols + c], f);
  return m;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int c = 0; c < m.cols(); ++c) out.push_back(m.at(i, c).str());
  return out;
}

DuchainComplex parse_complex(const json& j) {
  Field f = parse_field(need(j, "field"));
  const json& dims = need(j, "dims");
  if (!dims.is_array() || dims.empty()) throw ParseError("dims must be a nonempty array");
  DuchainComplex c;
  c.grading.field = f;
  for (const json& d : dims) {
    if (!d.is_number_integer() || d.get<int>() < 0) throw ParseError("dims must be nonnegative");
    c.grading.dims.push_back(d.get<int>());
  }
  int N = c.top();
  const json& b = need(j, "b");
  if (!b.is_array() || static_cast<int>(b.size()) != N)
    throw ParseError("b must hold one matrix per degree 1..top");
  c.b.assign(N + 1, Matrix());
  for (int n = 1; n <= N; ++n) c.b[n] = parse_matrix(b[n - 1], c.grading.dim(n - 1), c.grading.dim(n), f);
  if (j.contains("B")) {
    const json& B = j.at("B");
    if (!B.is_array() || static_cast<int>(B.size()) != N)
      throw ParseError("B must hold one matrix per degree 0..top-1");
    c.B.assign(std::max(N, 0), Matrix());
    for (int n = 0; n < N; ++n) c.B[n] = parse_matrix(B[n], c.grading.dim(n + 1), c.grading.dim(n), f);
  }
  return c;
}

json complex_json(const DuchainComplex& c) {
  json out;
  out["field"] = field_json(c.field());
  out["dims"] = c.grading.dims;
  json b = json::array();
  for (int n = 1; n <= c.top(); ++n) b.push_back(matrix_json(c.b[n]));
  out["b"] = b;
  if (c.has_B()) {
    json B = json::array();
    for (int n = 0; n < c.top(); ++n) B.push_back(matrix_json(c.B[n]));
    out["B"] = B;
  }
  return out;
}

TruncatedDuplicialModule parse_simplicial(const json& j) {
  Field f = parse_field(need(j, "field"));
  const json& dims = need(j, "dims");
  if (!dims.is_array() || dims.empty()) throw ParseError("dims must be a nonempty array");
  TruncatedDuplicialModule x;
  x.field = f;
  for (const json& d : dims) x.dims.push_back(d.get<int>());
  int N = x.top();
  const json& faces = need(j, "faces");
  if (!faces.is_array() || static_cast<int>(faces.size()) != N)
    throw ParseError("faces must hold one entry per degree 1..top");
  x.faces.resize(N + 1);
  for (int n = 1; n <= N; ++n) {
    const json& level = faces[n - 1];
    if (!level.is_array() || static_cast<int>(level.size()) != n + 1)
      throw ParseError("degree " + std::to_string(n) + " must carry n+1 faces");
    for (int i = 0; i <= n; ++i) x.faces[n].push_back(parse_matrix(level[i], x.dim(n - 1), x.dim(n), f));
  }
  const json& degens = need(j, "degens");
  if (!degens.is_array() || static_cast<int>(degens.size()) != N)
    throw ParseError("degens must hold one entry per degree 0..top-1");
  x.degens.resize(std::max(N, 0));
  for (int n = 0; n < N; ++n) {
    const json& level = degens[n];
    if (!level.is_array() || static_cast<int>(level.size()) != n + 1)
      throw ParseError("degree " + std::to_string(n) + " must carry n+1 degeneracies");
    for (int jj = 0; jj <= n; ++jj)
      x.degens[n].push_back(parse_matrix(level[jj], x.dim(n + 1), x.dim(n), f));
  }
  if (j.contains("t")) {
    const json& t = j.at("t");
    if (!t.is_array() || static_cast<int>(t.size()) != N + 1)
      throw ParseError("t must hold one matrix per degree 0..top");
    for (int n = 0; n <= N; ++n) x.t.push_back(parse_matrix(t[n], x.dim(n), x.dim(n), f));
  }
  if (j.contains("augmentation")) {
    const json& aug = j.at("augmentation");
    int rows = need_int(aug, "rows");
    x.augmentation = parse_matrix(need(aug, "matrix"), rows, x.dim(0), f);
  }
  return x;
}

json simplicial_json(const TruncatedDuplicialModule& x) {
  json out;
  out["field"] = field_json(x.field);
  out["dims"] = x.dims;
  json faces = json::array();
  for (int n = 1; n <= x.top(); ++n) {
    json level = json::array();
    for (int i = 0; i <= n; ++i) level.push_back(matrix_json(x.d(n, i)));
    faces.push_back(level);
  }
  out["faces"] = faces;
  json degens = json::array();
  for (int n = 0; n < x.top(); ++n) {
    json level = json::array();
    for (int jj = 0; jj <= n; ++jj) level.push_back(matrix_json(x.s(n, jj)));
    degens.push_back(level);
  }
  out["degens"] = degens;
  if (x.has_t()) {
    json t = json::array();
    for (const Matrix& m : x.t) t.push_back(matrix_json(m));
    out["t"] = t;
  }
  if (x.augmented()) {
    out["augmentation"] = json{{"rows", x.augmentation->rows()}, {"matrix", matrix_json(*x.augmentation)}};
  }
  return out;
}

Algebra parse_algebra(const json& j) {
  Field f = parse_field(need(j, "field"));
  int dim = need_int(j, "dim");
  if (dim <= 0) throw ParseError("algebra dimension must be positive");
  Algebra a;
  a.field = f;
  a.dim = dim;
  if (j.contains("basis")) {
    for (const json& b : j.at("basis")) a.basis.push_back(b.get<std::string>());
  } else {
    for (int i = 0; i < dim; ++i) a.basis.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(a.basis.size()) != dim) throw ParseError("basis label count mismatch");
  const json& mult = need(j, "mult");
  if (!mult.is_array() || static_cast<int>(mult.size()) != dim) throw ParseError("mult must be dim x dim x dim");
  a.mult.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(f))));
  for (int i = 0; i < dim; ++i) {
    if (!mult[i].is_array() || static_cast<int>(mult[i].size()) != dim)
      throw ParseError("mult must be dim x dim x dim");
    for (int k = 0; k < dim; ++k) {
      const json& cell = mult[i][k];
      if (!cell.is_array() || static_cast<int>(cell.size()) != dim)
        throw ParseError("mult must be dim x dim x dim");
      for (int l = 0; l < dim; ++l) a.mult[i][k][l] = parse_scalar(cell[l], f);
    }
  }
  const json& unit = need(j, "unit");
  if (!unit.is_array() || static_cast<int>(unit.size()) != dim)
    throw ParseError("unit must be a coordinate vector of length dim");
  a.unit.assign(dim, Scalar(f));
  for (int i = 0; i < dim; ++i) a.unit[i] = parse_scalar(unit[i], f);
  return a;
}

json algebra_json(const Algebra& a) {
  json out;
  out["field"] = field_json(a.field);
  out["dim"] = a.dim;
  out["basis"] = a.basis;
  json mult = json::array();
  for (int i = 0; i < a.dim; ++i) {
    json row = json::array();
    for (int jj = 0; jj < a.dim; ++jj) {
      json cell = json::array();
      for (int k = 0; k < a.dim; ++k) cell.push_back(a.mult[i][jj][k].str());
      row.push_back(cell);
    }
    mult.push_back(row);
  }
  out["mult"] = mult;
  json unit = json::array();
  for (const Scalar& s : a.unit) unit.push_back(s.str());
  out["unit"] = unit;
  return out;
}

Bimodule parse_bimodule(const json& j, const Algebra& a) {
  int dim = need_int(j, "dim");
  Bimodule m;
  m.dim = dim;
  const json& left = need(j, "left");
  const json& right = need(j, "right");
  if (!left.is_array() || static_cast<int>(left.size()) != a.dim || !right.is_array() ||
      static_cast<int>(right.size()) != a.dim)
    throw ParseError("bimodule actions must hold one matrix per algebra basis element");
  for (int i = 0; i < a.dim; ++i) {
    m.left.push_back(parse_matrix(left[i], dim, dim, a.field));
    m.right.push_back(parse_matrix(right[i], dim, dim, a.field));
  }
  return m;
}

json bimodule_json(const Bimodule& m) {
  json out;
  out["dim"] = m.dim;
  json l = json::array(), r = json::array();
  for (const Matrix& a : m.left) l.push_back(matrix_json(a));
  for (const Matrix& a : m.right) r.push_back(matrix_json(a));
  out["left"] = l;
  out["right"] = r;
  return out;
}

AlgebraMap parse_algebra_map(const json& j, const Algebra& a) {
  return AlgebraMap{parse_matrix(need(j, "matrix"), a.dim, a.dim, a.field)};
}

Bialgebra parse_bialgebra(const json& j) {
  Bialgebra h;
  h.algebra = parse_algebra(j);
  h.comult = parse_matrix(need(j, "comult"), h.dim() * h.dim(), h.dim(), h.field());
  h.counit = parse_matrix(need(j, "counit"), 1, h.dim(), h.field());
  return h;
}

json bialgebra_json(const Bialgebra& h) {
  json out = algebra_json(h.algebra);
  out["comult"] = matrix_json(h.comult);
  out["counit"] = matrix_json(h.counit);
  return out;
}

FiniteCategory parse_category(const json& j) {
  FiniteCategory c;
  for (const json& o : need(j, "objects")) c.objects.push_back(o.get<std::string>());
  if (c.objects.empty()) throw ParseError("a category needs at least one object");
  std::map<std::string, int> obj_index, mor_index;
  for (int i = 0; i < c.obj_count(); ++i) {
    if (obj_index.count(c.objects[i])) throw ParseError("duplicate object name: " + c.objects[i]);
    obj_index[c.objects[i]] = i;
  }
  for (const json& m : need(j, "morphisms")) {
    FiniteCategory::Mor mor;
    mor.name = need(m, "id").get<std::string>();
    std::string src = need(m, "src").get<std::string>(), tgt = need(m, "tgt").get<std::string>();
    if (!obj_index.count(src) || !obj_index.count(tgt))
      throw ParseError("morphism " + mor.name + " has unknown endpoints");
    mor.src = obj_index[src];
    mor.tgt = obj_index[tgt];
    if (mor_index.count(mor.name)) throw ParseError("duplicate morphism name: " + mor.name);
    mor_index[mor.name] = c.mor_count();
    c.morphisms.push_back(std::move(mor));
  }
  c.identity.assign(c.obj_count(), -1);
  for (auto& [obj, morid] : need(j, "identities").items()) {
    if (!obj_index.count(obj)) throw ParseError("identity for unknown object: " + obj);
    std::string name = morid.get<std::string>();
    if (!mor_index.count(name)) throw ParseError("unknown identity morphism: " + name);
    c.identity[obj_index[obj]] = mor_index[name];
  }
  for (int o = 0; o < c.obj_count(); ++o)
    if (c.identity[o] < 0) throw ParseError("missing identity for object " + c.objects[o]);
  c.compose_table.assign(c.mor_count(), std::vector<int>(c.mor_count(), -1));
  for (auto& [key, val] : need(j, "compose").items()) {
    // key format "(g,f)" meaning g . f
    if (key.size() < 5 || key.front() != '(' || key.back() != ')')
      throw ParseError("compose keys must look like \"(g,f)\": " + key);
    std::string inner = key.substr(1, key.size() - 2);
    auto comma = inner.find(',');
    if (comma == std::string::npos) throw ParseError("compose keys must look like \"(g,f)\": " + key);
    std::string gname = inner.substr(0, comma), fname = inner.substr(comma + 1);
    if (!mor_index.count(gname) || !mor_index.count(fname) || !mor_index.count(val.get<std::string>()))
      throw ParseError("compose entry names an unknown morphism: " + key);
    c.compose_table[mor_index[gname]][mor_index[fname]] = mor_index[val.get<std::string>()];
  }
  return c;
}

json category_json(const FiniteCategory& c) {
  json out;
  out["objects"] = c.objects;
  json mors = json::array();
  for (const auto& m : c.morphisms)
    mors.push_back(json{{"id", m.name}, {"src", c.objects[m.src]}, {"tgt", c.objects[m.tgt]}});
  out["morphisms"] = mors;
  json ids;
  for (int o = 0; o < c.obj_count(); ++o) ids[c.objects[o]] = c.morphisms[c.identity[o]].name;
  out["identities"] = ids;
  json comp;
  for (int g = 0; g < c.mor_count(); ++g)
    for (int f = 0; f < c.mor_count(); ++f)
      if (c.compose_table[g][f] >= 0)
        comp["(" + c.morphisms[g].name + "," + c.morphisms[f].name + ")"] =
            c.morphisms[c.compose_table[g][f]].name;
  out["compose"] = comp;
  return out;
}

sets::FiniteMonoid parse_monoid(const json& j) {
  sets::FiniteMonoid m;
  m.n = need_int(j, "n");
  m.identity = need_int(j, "identity");
  const json& table = need(j, "table");
  if (!table.is_array() || static_cast<int>(table.size()) != m.n)
    throw ParseError("monoid table must be n x n");
  for (const json& row : table) {
    if (!row.is_array() || static_cast<int>(row.size()) != m.n)
      throw ParseError("monoid table must be n x n");
    std::vector<int> r;
    for (const json& v : row) {
      int e = v.get<int>();
      if (e < 0 || e >= m.n) throw ParseError("monoid table entry out of range");
      r.push_back(e);
    }
    m.table.push_back(std::move(r));
  }
  if (m.identity < 0 || m.identity >= m.n) throw ParseError("monoid identity out of range");
  ValidationReport rep = m.validate();
  if (!rep.ok()) throw InvariantError("monoid laws:\n" + rep.str());
  return m;
}

SchemaKind schema_from_string(const std::string& s) {
  if (s == "algebra") return SchemaKind::algebra;
  if (s == "bimodule") return SchemaKind::bimodule;
  if (s == "map" || s == "algebra-map") return SchemaKind::algebra_map;
  if (s == "bialgebra") return SchemaKind::bialgebra;
  if (s == "category") return SchemaKind::category;
  if (s == "complex") return SchemaKind::complex;
  if (s == "simplicial") return SchemaKind::simplicial;
  throw ParseError("unknown schema: " + s);
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  return j;
}

ValidationReport validate_input(const std::string& path, SchemaKind kind) {
  json j = load_file(path);
  switch (kind) {
    case SchemaKind::algebra: {
      Algebra a = parse_algebra(j);
      ValidationReport rep = a.validate();
      check_invariants(rep, "algebra invariants");
      return rep;
    }
    case SchemaKind::bimodule: {
      // needs the algebra inline under "algebra"
      Algebra a = parse_algebra(need(j, "algebra"));
      check_invariants(a.validate(), "algebra invariants");
      Bimodule m = parse_bimodule(j, a);
      ValidationReport rep = m.validate(a);
      check_invariants(rep, "bimodule invariants");
      return rep;
    }
    case SchemaKind::algebra_map: {
      Algebra a = parse_algebra(need(j, "algebra"));
      check_invariants(a.validate(), "algebra invariants");
      AlgebraMap s = parse_algebra_map(j, a);
      ValidationReport rep = s.validate(a);
      check_invariants(rep, "algebra map invariants");
      return rep;
    }
    case SchemaKind::bialgebra: {
      Bialgebra h = parse_bialgebra(j);
      ValidationReport rep = h.validate();
      check_invariants(rep, "bialgebra invariants");
      return rep;
    }
    case SchemaKind::category: {
      FiniteCategory c = parse_category(j);
      ValidationReport rep = c.validate();
      check_invariants(rep, "category laws");
      return rep;
    }
    case SchemaKind::complex: {
      DuchainComplex c = parse_complex(j);
      ValidationReport rep = validate(c, c.has_B() ? ComplexKind::duchain : ComplexKind::chain_only);
      check_invariants(rep, "complex identities");
      return rep;
    }
    case SchemaKind::simplicial: {
      TruncatedDuplicialModule x = parse_simplicial(j);
      ValidationReport rep =
          check_structure(x, x.has_t() ? StructureLevel::duplicial : StructureLevel::simplicial);
      check_invariants(rep, "simplicial identities");
      return rep;
    }
  }
  throw ParseError("unknown schema");
}

}  // namespace cychom::io
