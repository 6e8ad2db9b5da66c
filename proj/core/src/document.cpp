#include "compalg/document.hpp"

#include <algorithm>
#include <cctype>

#include "compalg/fixtures.hpp"
#include "json.hpp"

namespace compalg {

namespace {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& v, const std::string& where) {
  try {
    if (v.is_number_integer())
      return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": scalar must be an integer or a \"p/q\" string");
}

int int_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) ||
      !obj[key].is_number_integer())
    throw InputError(where + ": missing integer field \"" + key + "\"");
  return obj[key].get<int>();
}

void check_index(int v, int bound, const std::string& where) {
  if (v < 0 || v >= bound)
    throw InputError(where + ": index " + std::to_string(v) +
                     " out of range [0," + std::to_string(bound) + ")");
}

struct Triple {
  int i = 0, j = 0, k = 0;
  Rational c;
};

std::vector<Triple> read_triples(const json& arr, int di, int dj, int dk,
                                 const std::string& where) {
  if (!arr.is_array())
    throw InputError(where + ": expected an array of {i,j,k,c} triples");
  std::vector<Triple> out;
  for (size_t t = 0; t < arr.size(); ++t) {
    std::string at = where + "[" + std::to_string(t) + "]";
    const json& e = arr[t];
    Triple tr;
    tr.i = int_field(e, "i", at);
    tr.j = int_field(e, "j", at);
    tr.k = int_field(e, "k", at);
    if (!e.contains("c")) throw InputError(at + ": missing scalar field \"c\"");
    tr.c = rational_from_json(e["c"], at);
    check_index(tr.i, di, at);
    check_index(tr.j, dj, at);
    check_index(tr.k, dk, at);
    out.push_back(std::move(tr));
  }
  return out;
}

BilinearMap bilinear_from_triples(const json& arr, int dim_in, int dim_out,
                                  const std::string& where) {
  BilinearMap f = make_bilinear(dim_in, dim_out);
  for (const Triple& t : read_triples(arr, dim_in, dim_in, dim_out, where))
    f.at(t.k, {t.i, t.j}) = f.at(t.k, {t.i, t.j}) + t.c;
  return f;
}

Matrix matrix_from_json(const json& rows, int dim, const std::string& where) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw InputError(where + ": row " + std::to_string(r) + " must hold " +
                       std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c)
      m(r, c) = rational_from_json(
          row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) +
                      "]");
  }
  return m;
}

CompatCochain pair_from_json(const json& obj, int dim, int dim_out,
                             const std::string& where) {
  if (!obj.is_object() || !obj.contains("f1") || !obj.contains("f2"))
    throw InputError(where + ": expected fields \"f1\" and \"f2\"");
  return CompatCochain(
      {bilinear_from_triples(obj["f1"], dim, dim_out, where + ".f1"),
       bilinear_from_triples(obj["f2"], dim, dim_out, where + ".f2")});
}

Cochain cochain_from_entries(const json& arr, int arity, int dim_in,
                             int dim_out, const std::string& where) {
  if (!arr.is_array()) throw InputError(where + ": expected an entry array");
  Cochain f(arity, dim_in, dim_out);
  for (size_t t = 0; t < arr.size(); ++t) {
    std::string at = where + "[" + std::to_string(t) + "]";
    const json& e = arr[t];
    if (!e.is_object() || !e.contains("in") || !e["in"].is_array() ||
        static_cast<int>(e["in"].size()) != arity)
      throw InputError(at + ": field \"in\" must list " +
                       std::to_string(arity) + " indices");
    std::vector<int> multi;
    for (const json& v : e["in"]) {
      if (!v.is_number_integer())
        throw InputError(at + ": \"in\" entries must be integers");
      multi.push_back(v.get<int>());
      check_index(multi.back(), dim_in, at);
    }
    int out = int_field(e, "out", at);
    check_index(out, dim_out, at);
    if (!e.contains("c")) throw InputError(at + ": missing scalar field \"c\"");
    Rational c = rational_from_json(e["c"], at);
    f.at(out, multi) = f.at(out, multi) + c;
  }
  return f;
}

CompatCochain tuple_from_json(const json& obj, int dim,
                              const std::string& where) {
  int degree = int_field(obj, "degree", where);
  if (degree < 1) throw InputError(where + ": degree must be at least 1");
  if (!obj.contains("components") || !obj["components"].is_array() ||
      static_cast<int>(obj["components"].size()) != degree)
    throw InputError(where + ": \"components\" must list " +
                     std::to_string(degree) + " cochains");
  std::vector<Cochain> comps;
  for (int p = 0; p < degree; ++p)
    comps.push_back(cochain_from_entries(
        obj["components"][p], degree, dim, dim,
        where + ".components[" + std::to_string(p) + "]"));
  return CompatCochain(std::move(comps));
}

json triples_json(const BilinearMap& f) {
  json arr = json::array();
  for (int i = 0; i < f.dim_in(); ++i)
    for (int j = 0; j < f.dim_in(); ++j)
      for (int k = 0; k < f.dim_out(); ++k) {
        const Rational& c = f.at(k, {i, j});
        if (c.is_zero()) continue;
        json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        e["c"] = c.str();
        arr.push_back(std::move(e));
      }
  return arr;
}

json action_triples(const BimoduleActions& act, bool left) {
  json arr = json::array();
  int di = left ? act.dim_a() : act.dim_m();
  int dj = left ? act.dim_m() : act.dim_a();
  for (int i = 0; i < di; ++i)
    for (int j = 0; j < dj; ++j)
      for (int k = 0; k < act.dim_m(); ++k) {
        const Rational& c = left ? act.l(k, i, j) : act.r(k, i, j);
        if (c.is_zero()) continue;
        json e;
        e["i"] = i;
        e["j"] = j;
        e["k"] = k;
        e["c"] = c.str();
        arr.push_back(std::move(e));
      }
  return arr;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json entries_json(const Cochain& f) {
  json arr = json::array();
  std::vector<int> multi(f.arity(), 0);
  if (f.dim_in() == 0 && f.arity() > 0) return arr;
  for (int out = 0; out < f.dim_out(); ++out) {
    std::vector<int> m = multi;
    do {
      const Rational& c = f.at(out, m);
      if (!c.is_zero()) {
        json e;
        e["in"] = m;
        e["out"] = out;
        e["c"] = c.str();
        arr.push_back(std::move(e));
      }
    } while (next_multi(m, f.dim_in()));
  }
  return arr;
}

json tuple_json(const CompatCochain& t) {
  json obj;
  obj["degree"] = t.degree();
  json comps = json::array();
  for (int p = 0; p < t.degree(); ++p)
    comps.push_back(entries_json(t.comp(p)));
  obj["components"] = std::move(comps);
  return obj;
}

bool algebra_equal(const CompatibleAlgebra& a, const CompatibleAlgebra& b) {
  return a.dim == b.dim && a.mu1 == b.mu1 && a.mu2 == b.mu2;
}

bool module_equal(const CompatibleBimodule& a, const CompatibleBimodule& b) {
  return a.dim_m == b.dim_m && a.act1 == b.act1 && a.act2 == b.act2;
}

bool deformation_equal(const TruncatedDeformation& a,
                       const TruncatedDeformation& b) {
  return algebra_equal(a.base, b.base) && a.order == b.order &&
         a.mu1_terms == b.mu1_terms && a.mu2_terms == b.mu2_terms;
}

}  // namespace

CompatibleBimodule AlgebraDocument::coefficients() const {
  return module ? *module : adjoint_bimodule(algebra);
}

bool AlgebraDocument::operator==(const AlgebraDocument& o) const {
  if (dim != o.dim || basis != o.basis || !algebra_equal(algebra, o.algebra))
    return false;
  if (module.has_value() != o.module.has_value()) return false;
  if (module && !module_equal(*module, *o.module)) return false;
  if (operators != o.operators) return false;
  if (deformation.has_value() != o.deformation.has_value()) return false;
  if (deformation && !deformation_equal(*deformation, *o.deformation))
    return false;
  return cocycle == o.cocycle && cocycle2 == o.cocycle2 &&
         bracket_f == o.bracket_f && bracket_g == o.bracket_g &&
         sum_unit == o.sum_unit;
}

AlgebraDocument parse_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("document root must be an object");
  if (!doc.contains("format") || doc["format"] != 1)
    throw InputError("document must declare \"format\": 1");

  AlgebraDocument out;
  out.dim = int_field(doc, "dim", "document");
  if (out.dim < 0) throw InputError("dim must be nonnegative");
  int dim = out.dim;

  if (doc.contains("basis")) {
    const json& b = doc["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != dim)
      throw InputError("basis must list one name per dimension");
    for (const json& v : b) {
      if (!v.is_string()) throw InputError("basis names must be strings");
      out.basis.push_back(v.get<std::string>());
    }
  }

  out.algebra.dim = dim;
  out.algebra.mu1 = doc.contains("mu1")
                        ? bilinear_from_triples(doc["mu1"], dim, dim, "mu1")
                        : make_bilinear(dim, dim);
  out.algebra.mu2 = doc.contains("mu2")
                        ? bilinear_from_triples(doc["mu2"], dim, dim, "mu2")
                        : make_bilinear(dim, dim);

  if (doc.contains("module")) {
    const json& m = doc["module"];
    int dm = int_field(m, "dim", "module");
    if (dm < 0) throw InputError("module.dim must be nonnegative");
    CompatibleBimodule mod;
    mod.dim_m = dm;
    mod.act1 = BimoduleActions(dim, dm);
    mod.act2 = BimoduleActions(dim, dm);
    auto fill = [&](BimoduleActions& act, const char* lk, const char* rk) {
      if (m.contains(lk))
        for (const Triple& t :
             read_triples(m[lk], dim, dm, dm, std::string("module.") + lk))
          act.l(t.k, t.i, t.j) = act.l(t.k, t.i, t.j) + t.c;
      if (m.contains(rk))
        for (const Triple& t :
             read_triples(m[rk], dm, dim, dm, std::string("module.") + rk))
          act.r(t.k, t.i, t.j) = act.r(t.k, t.i, t.j) + t.c;
    };
    fill(mod.act1, "l1", "r1");
    fill(mod.act2, "l2", "r2");
    out.module = std::move(mod);
  }

  if (doc.contains("operators")) {
    const json& ops = doc["operators"];
    if (!ops.is_object())
      throw InputError("operators must map names to square matrices");
    for (auto it = ops.begin(); it != ops.end(); ++it)
      out.operators[it.key()] =
          matrix_from_json(it.value(), dim, "operators." + it.key());
  }

  if (doc.contains("deformation")) {
    const json& df = doc["deformation"];
    int order = int_field(df, "order", "deformation");
    if (order < 1) throw InputError("deformation.order must be at least 1");
    TruncatedDeformation d;
    d.base = out.algebra;
    d.order = order;
    d.mu1_terms.push_back(out.algebra.mu1);
    d.mu2_terms.push_back(out.algebra.mu2);
    auto fill_terms = [&](std::vector<BilinearMap>& terms, const char* key) {
      if (!df.contains(key) || !df[key].is_array() ||
          static_cast<int>(df[key].size()) != order)
        throw InputError(std::string("deformation.") + key + " must list " +
                         std::to_string(order) + " term arrays");
      for (int p = 0; p < order; ++p)
        terms.push_back(bilinear_from_triples(
            df[key][p], dim, dim,
            std::string("deformation.") + key + "[" + std::to_string(p) +
                "]"));
    };
    fill_terms(d.mu1_terms, "mu1_terms");
    fill_terms(d.mu2_terms, "mu2_terms");
    out.deformation = std::move(d);
  }

  int dm = out.module ? out.module->dim_m : dim;
  if (doc.contains("cocycle"))
    out.cocycle = pair_from_json(doc["cocycle"], dim, dm, "cocycle");
  if (doc.contains("cocycle2"))
    out.cocycle2 = pair_from_json(doc["cocycle2"], dim, dm, "cocycle2");

  if (doc.contains("bracket")) {
    const json& br = doc["bracket"];
    if (!br.is_object() || !br.contains("f") || !br.contains("g"))
      throw InputError("bracket must carry tuple fields \"f\" and \"g\"");
    out.bracket_f = tuple_from_json(br["f"], dim, "bracket.f");
    out.bracket_g = tuple_from_json(br["g"], dim, "bracket.g");
  }

  if (doc.contains("sum_unit")) {
    const json& u = doc["sum_unit"];
    if (!u.is_array() || static_cast<int>(u.size()) != dim)
      throw InputError("sum_unit must list one scalar per dimension");
    Vec unit;
    for (size_t i = 0; i < u.size(); ++i)
      unit.push_back(rational_from_json(
          u[i], "sum_unit[" + std::to_string(i) + "]"));
    out.sum_unit = std::move(unit);
  }
  return out;
}

std::string serialize_document(const AlgebraDocument& d) {
  json out;
  out["format"] = 1;
  out["dim"] = d.dim;
  if (!d.basis.empty()) out["basis"] = d.basis;
  out["mu1"] = triples_json(d.algebra.mu1);
  out["mu2"] = triples_json(d.algebra.mu2);
  if (d.module) {
    json m;
    m["dim"] = d.module->dim_m;
    m["l1"] = action_triples(d.module->act1, true);
    m["r1"] = action_triples(d.module->act1, false);
    m["l2"] = action_triples(d.module->act2, true);
    m["r2"] = action_triples(d.module->act2, false);
    out["module"] = std::move(m);
  }
  if (!d.operators.empty()) {
    json ops;
    for (const auto& [name, mat] : d.operators) ops[name] = matrix_json(mat);
    out["operators"] = std::move(ops);
  }
  if (d.deformation) {
    json df;
    df["order"] = d.deformation->order;
    json t1 = json::array(), t2 = json::array();
    for (int p = 1; p <= d.deformation->order; ++p) {
      t1.push_back(triples_json(d.deformation->mu1_terms[p]));
      t2.push_back(triples_json(d.deformation->mu2_terms[p]));
    }
    df["mu1_terms"] = std::move(t1);
    df["mu2_terms"] = std::move(t2);
    out["deformation"] = std::move(df);
  }
  auto pair_json = [](const CompatCochain& p) {
    json obj;
    obj["f1"] = triples_json(p.comp(0));
    obj["f2"] = triples_json(p.comp(1));
    return obj;
  };
  if (d.cocycle) out["cocycle"] = pair_json(*d.cocycle);
  if (d.cocycle2) out["cocycle2"] = pair_json(*d.cocycle2);
  if (d.bracket_f && d.bracket_g) {
    json br;
    br["f"] = tuple_json(*d.bracket_f);
    br["g"] = tuple_json(*d.bracket_g);
    out["bracket"] = std::move(br);
  }
  if (d.sum_unit) {
    json u = json::array();
    for (const Rational& c : *d.sum_unit) u.push_back(c.str());
    out["sum_unit"] = std::move(u);
  }
  return out.dump(2) + "\n";
}

AlgebraDocument fixture_document(const std::string& name) {
  std::string canon;
  for (char ch : name) canon.push_back(static_cast<char>(std::toupper(
      static_cast<unsigned char>(ch))));
  AlgebraDocument doc;
  doc.algebra = fixture(canon);
  doc.dim = doc.algebra.dim;
  if (canon == "F1") {
    doc.basis = {"1"};
  } else if (canon == "F2") {
    doc.basis = {"1", "x"};
    doc.operators["N"] = fixture_nijenhuis_n();
    doc.operators["R"] = fixture_nijenhuis_n();
    doc.operators["S"] = Matrix(2, 2);
  } else if (canon == "F3") {
    doc.basis = {"1", "x"};
    doc.sum_unit = Vec{Rational(1), Rational(-1)};
  } else if (canon == "F4") {
    doc.basis = {"e", "f"};
  } else if (canon == "NC") {
    doc.basis = {"e", "f"};
  }
  return doc;
}

}  // namespace compalg
