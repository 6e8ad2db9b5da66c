#include "compalg/commands.hpp"

#include <functional>

#include "compalg/cohomology.hpp"
#include "compalg/deformation.hpp"
#include "compalg/fixtures.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/homology.hpp"
#include "compalg/liebridge.hpp"
#include "compalg/operators.hpp"
#include "json.hpp"

namespace compalg {

namespace {

using json = nlohmann::ordered_json;

json vec_json(const Vec& v) {
  json arr = json::array();
  for (const Rational& c : v) arr.push_back(c.str());
  return arr;
}

json vecs_json(const std::vector<Vec>& vs) {
  json arr = json::array();
  for (const Vec& v : vs) arr.push_back(vec_json(v));
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

json tuple_json(const CompatCochain& t) {
  json obj;
  obj["degree"] = t.degree();
  json comps = json::array();
  for (int p = 0; p < t.degree(); ++p)
    comps.push_back(vec_json(t.comp(p).coords()));
  obj["components"] = std::move(comps);
  return obj;
}

json check_json(const CheckResult& c) {
  json e;
  e["name"] = c.name;
  e["passed"] = c.passed;
  if (!c.witness.empty()) e["witness"] = c.witness;
  if (!c.detail.empty()) e["detail"] = c.detail;
  return e;
}

json validation_json(const ValidationReport& r) {
  json e;
  e["passed"] = r.passed();
  json arr = json::array();
  for (const CheckResult& c : r.checks) arr.push_back(check_json(c));
  e["checks"] = std::move(arr);
  return e;
}

json degree_json(const DegreeReport& d) {
  json e;
  e["degree"] = d.degree;
  e["dim_cochain"] = d.dim_cochain;
  e["dim_cocycle"] = d.dim_cocycle;
  e["dim_coboundary"] = d.dim_coboundary;
  e["dim"] = d.dim;
  e["representatives"] = vecs_json(d.representatives);
  return e;
}

json homology_degree_json(const HomologyDegree& d) {
  json e;
  e["degree"] = d.degree;
  e["dim_chain"] = d.dim_chain;
  e["dim_cycle"] = d.dim_cycle;
  e["dim_boundary"] = d.dim_boundary;
  e["dim"] = d.dim;
  e["representatives"] = vecs_json(d.representatives);
  return e;
}

// Commands built on the complexes insist on valid inputs up front; the
// reports such commands produce are meaningless otherwise.
void require_valid(const AlgebraDocument& doc, bool with_module) {
  ValidationReport r = validate_compatible_algebra(doc.algebra);
  if (!r.passed())
    throw MathError("document algebra fails check " + r.first_failure()->name);
  if (with_module && doc.module) {
    ValidationReport m =
        validate_compatible_bimodule(doc.algebra, *doc.module);
    if (!m.passed())
      throw MathError("document module fails check " +
                      m.first_failure()->name);
  }
}

TruncatedDeformation doc_deformation(const AlgebraDocument& doc) {
  return doc.deformation ? *doc.deformation : undeformed(doc.algebra, 1);
}

const Matrix& doc_operator(const AlgebraDocument& doc,
                           const std::string& name) {
  auto it = doc.operators.find(name);
  if (it == doc.operators.end())
    throw InputError("document provides no operator \"" + name + "\"");
  return it->second;
}

struct Outcome {
  json body;
  int exit_code = 0;
};

Outcome cmd_validate(const AlgebraDocument& doc, int) {
  ValidationReport alg = validate_compatible_algebra(doc.algebra);
  bool ok = alg.passed();
  json body;
  body["status"] = "";
  body["algebra"] = validation_json(alg);
  if (doc.module) {
    ValidationReport mod =
        validate_compatible_bimodule(doc.algebra, *doc.module);
    ok = ok && mod.passed();
    body["module"] = validation_json(mod);
  }
  body["status"] = ok ? "pass" : "fail";
  return {std::move(body), ok ? 0 : 1};
}

Outcome cmd_cohomology(const AlgebraDocument& doc, int max_degree) {
  require_valid(doc, true);
  CochainComplexReport r =
      cohomology(doc.algebra, doc.coefficients(), max_degree);
  json body;
  body["status"] = "ok";
  body["coefficients"] = doc.module ? "module" : "adjoint";
  json ds = json::array();
  for (const DegreeReport& d : r.degrees) ds.push_back(degree_json(d));
  body["degrees"] = std::move(ds);
  return {std::move(body), 0};
}

Outcome cmd_homology(const AlgebraDocument& doc, int max_degree) {
  require_valid(doc, true);
  ChainComplexReport r = homology(doc.algebra, doc.coefficients(), max_degree);
  json body;
  body["status"] = "ok";
  body["coefficients"] = doc.module ? "module" : "adjoint";
  json ds = json::array();
  for (const HomologyDegree& d : r.degrees)
    ds.push_back(homology_degree_json(d));
  body["degrees"] = std::move(ds);
  return {std::move(body), 0};
}

Outcome cmd_derivations(const AlgebraDocument& doc, int) {
  require_valid(doc, true);
  DerivationReport r = derivations(doc.algebra, doc.coefficients());
  json body;
  body["status"] = "ok";
  body["coefficients"] = doc.module ? "module" : "adjoint";
  body["dim_derivations"] = static_cast<int64_t>(r.derivations.size());
  body["dim_inner"] = static_cast<int64_t>(r.inner.size());
  body["h1_dim"] = r.h1_dim;
  body["derivations"] = vecs_json(r.derivations);
  body["inner"] = vecs_json(r.inner);
  body["representatives"] = vecs_json(r.representatives);
  return {std::move(body), 0};
}

Outcome cmd_mc_check(const AlgebraDocument& doc, int) {
  MaurerCartanResult r = is_maurer_cartan(doc.algebra.mu1, doc.algebra.mu2);
  json body;
  body["status"] = r.holds ? "pass" : "fail";
  body["holds"] = r.holds;
  if (!r.holds) {
    body["witness_component"] = r.witness_component;
    body["witness"] = vec_json(r.witness.coords());
  }
  return {std::move(body), r.holds ? 0 : 1};
}

Outcome cmd_bracket(const AlgebraDocument& doc, int) {
  if (!doc.bracket_f || !doc.bracket_g)
    throw InputError("document provides no bracket block");
  CompatCochain b = compat_bracket(*doc.bracket_f, *doc.bracket_g);
  json body;
  body["status"] = "ok";
  body["degree_f"] = doc.bracket_f->degree();
  body["degree_g"] = doc.bracket_g->degree();
  body["result"] = tuple_json(b);
  body["is_zero"] = b.is_zero();
  return {std::move(body), 0};
}

Outcome cmd_nijenhuis(const AlgebraDocument& doc, int) {
  require_valid(doc, false);
  const Matrix& n = doc_operator(doc, "N");
  ValidationReport nij = is_nijenhuis(doc.algebra, n);
  json body;
  body["status"] = "";
  body["nijenhuis"] = validation_json(nij);
  if (!nij.passed()) {
    body["status"] = "fail";
    return {std::move(body), 1};
  }
  NijenhuisDeformation nd = nijenhuis_trivial_deformation(doc.algebra, n);
  body["omega"] = tuple_json(nd.omega);
  body["deformation"] = validation_json(nd.checks);
  bool ok = nd.checks.passed();
  body["status"] = ok ? "pass" : "fail";
  return {std::move(body), ok ? 0 : 1};
}

Outcome cmd_rb(const AlgebraDocument& doc, int) {
  const Matrix& r = doc_operator(doc, "R");
  ValidationReport rr = is_rota_baxter(doc.algebra.mu1, r);
  bool ok = rr.passed();
  json body;
  body["status"] = "";
  body["rota_baxter_r"] = validation_json(rr);
  auto it = doc.operators.find("S");
  if (it != doc.operators.end()) {
    ValidationReport rs = is_rota_baxter(doc.algebra.mu1, it->second);
    body["rota_baxter_s"] = validation_json(rs);
    ValidationReport comp = are_compatible_rb(doc.algebra.mu1, r, it->second);
    body["compatible"] = validation_json(comp);
    ok = ok && rs.passed() && comp.passed();
    if (ok) {
      AssociativeAlgebra base{doc.dim, doc.algebra.mu1};
      CompatibleAlgebra derived =
          rb_compatible_pair_algebras(base, r, it->second);
      ValidationReport dv = validate_compatible_algebra(derived);
      body["derived_mu1"] = triples_json(derived.mu1);
      body["derived_mu2"] = triples_json(derived.mu2);
      body["derived_pair"] = validation_json(dv);
      ok = ok && dv.passed();
    }
  }
  body["status"] = ok ? "pass" : "fail";
  return {std::move(body), ok ? 0 : 1};
}

Outcome cmd_deform_validate(const AlgebraDocument& doc, int) {
  TruncatedDeformation d = doc_deformation(doc);
  DeformationReport r = validate_deformation(d);
  json body;
  body["status"] = r.valid ? "pass" : "fail";
  body["order"] = d.order;
  body["valid"] = r.valid;
  if (!r.valid) body["first_failing_order"] = r.first_failing_order;
  body["checks"] = validation_json(r.details);
  return {std::move(body), r.valid ? 0 : 1};
}

Outcome cmd_deform_obstruction(const AlgebraDocument& doc, int) {
  TruncatedDeformation d = doc_deformation(doc);
  ObstructionResult r = obstruction(d);
  json body;
  body["status"] = "ok";
  body["order"] = d.order;
  body["obstruction"] = tuple_json(r.ob);
  body["is_zero"] = r.ob.is_zero();
  body["is_cocycle"] = r.is_cocycle;
  return {std::move(body), 0};
}

Outcome cmd_deform_extend(const AlgebraDocument& doc, int) {
  TruncatedDeformation d = doc_deformation(doc);
  ExtendResult r = extend(d);
  json body;
  body["status"] = "";
  body["extended"] = r.extended;
  if (!r.extended) {
    body["status"] = "fail";
    body["obstruction"] = tuple_json(r.ob);
    body["obstruction_class"] = vec_json(r.obstruction_class);
    return {std::move(body), 1};
  }
  body["new_order"] = r.extension.order;
  json next;
  next["mu1"] = triples_json(r.extension.mu1_terms.back());
  next["mu2"] = triples_json(r.extension.mu2_terms.back());
  body["next_terms"] = std::move(next);
  DeformationReport rv = validate_deformation(r.extension);
  body["extension_valid"] = rv.valid;
  body["status"] = rv.valid ? "pass" : "fail";
  return {std::move(body), rv.valid ? 0 : 1};
}

Outcome cmd_deform_normalize(const AlgebraDocument& doc, int) {
  TruncatedDeformation d = doc_deformation(doc);
  NormalizeResult r = normalize(d);
  json body;
  body["status"] = "ok";
  body["order"] = d.order;
  body["trivialized"] = r.trivialized;
  body["leading_order"] = r.leading_order;
  json gauge = json::array();
  for (const Matrix& m : r.gauge.terms) gauge.push_back(matrix_json(m));
  body["gauge"] = std::move(gauge);
  json t1 = json::array(), t2 = json::array();
  for (int p = 1; p <= r.reduced.order; ++p) {
    t1.push_back(triples_json(r.reduced.mu1_terms[p]));
    t2.push_back(triples_json(r.reduced.mu2_terms[p]));
  }
  json reduced;
  reduced["mu1_terms"] = std::move(t1);
  reduced["mu2_terms"] = std::move(t2);
  body["reduced"] = std::move(reduced);
  return {std::move(body), 0};
}

Outcome cmd_extension_from_cocycle(const AlgebraDocument& doc, int) {
  require_valid(doc, true);
  CompatibleBimodule m = doc.coefficients();
  CompatCochain c =
      doc.cocycle ? *doc.cocycle : CompatCochain::zero(2, doc.dim, m.dim_m);
  ExtensionDatum e = extension_from_cocycle(doc.algebra, m, c);
  ValidationReport v = validate_extension(doc.algebra, m, e);
  CompatCochain back = cocycle_from_extension(doc.algebra, m, e);
  bool ok = v.passed() && back == c;
  json body;
  body["status"] = ok ? "pass" : "fail";
  body["total_dim"] = e.total.dim;
  body["mu1"] = triples_json(e.total.mu1);
  body["mu2"] = triples_json(e.total.mu2);
  body["i"] = matrix_json(e.i);
  body["j"] = matrix_json(e.j);
  body["s"] = matrix_json(e.s);
  body["checks"] = validation_json(v);
  body["round_trip"] = back == c;
  return {std::move(body), ok ? 0 : 1};
}

Outcome cmd_extension_classify(const AlgebraDocument& doc, int) {
  require_valid(doc, true);
  CompatibleBimodule m = doc.coefficients();
  const CompatibleAlgebra& a = doc.algebra;
  CochainComplexReport coh = cohomology(a, m, 2);
  const DegreeReport& h2 = coh.degrees[2];
  Matrix d2 = delta_c_matrix(a, m, 2);
  Matrix d1 = delta_c_matrix(a, m, 1);
  std::vector<Vec> span = h2.representatives;
  for (Vec& b : image_basis(d1)) span.push_back(std::move(b));
  Matrix span_m(span.empty() ? d2.cols() : static_cast<int>(span[0].size()),
                static_cast<int>(span.size()));
  for (int c = 0; c < span_m.cols(); ++c)
    for (int r = 0; r < span_m.rows(); ++r) span_m(r, c) = span[c][r];

  auto classify = [&](const CompatCochain& c) {
    if (!vec_is_zero(d2.apply(c.coords())))
      throw MathError("the given pair is not a 2-cocycle");
    std::optional<Vec> z = solve(span_m, c.coords());
    if (!z) throw MathError("cocycle escapes the computed cocycle space");
    return Vec(z->begin(), z->begin() + h2.representatives.size());
  };

  CompatCochain c1 =
      doc.cocycle ? *doc.cocycle : CompatCochain::zero(2, doc.dim, m.dim_m);
  Vec cls1 = classify(c1);
  json body;
  body["status"] = "ok";
  body["h2_dim"] = h2.dim;
  body["class"] = vec_json(cls1);
  body["trivial"] = vec_is_zero(cls1);
  if (doc.cocycle2) {
    Vec cls2 = classify(*doc.cocycle2);
    body["class2"] = vec_json(cls2);
    body["trivial2"] = vec_is_zero(cls2);
    ExtensionDatum e1 = extension_from_cocycle(a, m, c1);
    ExtensionDatum e2 = extension_from_cocycle(a, m, *doc.cocycle2);
    EquivalenceResult eq = extensions_equivalent(a, m, e1, e2);
    body["equivalent"] = eq.equivalent;
    if (eq.equivalent) body["g"] = vec_json(eq.g_coords);
    body["classes_agree"] = (cls1 == cls2);
  }
  return {std::move(body), 0};
}

Outcome cmd_lie_skew(const AlgebraDocument& doc, int) {
  CompatibleLieAlgebra g = skew_symmetrize_algebra(doc.algebra);
  ValidationReport vg = validate_compatible_lie(g);
  CompatibleBimodule m = doc.coefficients();
  CompatibleLieRep rep = skew_symmetrize_bimodule(doc.algebra, m);
  ValidationReport vr = validate_lie_rep(g, rep);
  bool ok = vg.passed() && vr.passed();
  json body;
  body["status"] = ok ? "pass" : "fail";
  body["bracket1"] = triples_json(g.b1);
  body["bracket2"] = triples_json(g.b2);
  body["lie"] = validation_json(vg);
  body["rep"] = validation_json(vr);
  return {std::move(body), ok ? 0 : 1};
}

Outcome cmd_lie_cohomology(const AlgebraDocument& doc, int max_degree) {
  require_valid(doc, true);
  CompatibleLieAlgebra g = skew_symmetrize_algebra(doc.algebra);
  CompatibleLieRep rep = skew_symmetrize_bimodule(doc.algebra,
                                                  doc.coefficients());
  CochainComplexReport r = lie_cohomology(g, rep, max_degree);
  json body;
  body["status"] = "ok";
  body["coefficients"] = doc.module ? "module" : "adjoint";
  json ds = json::array();
  for (const DegreeReport& d : r.degrees) ds.push_back(degree_json(d));
  body["degrees"] = std::move(ds);
  return {std::move(body), 0};
}

Outcome cmd_kahler(const AlgebraDocument& doc, int) {
  KahlerReport r = kahler_check(doc.algebra, doc.sum_unit);
  bool ok = r.dims_match && r.action_well_defined;
  json body;
  body["status"] = ok ? "pass" : "fail";
  body["dim_h1"] = r.dim_h1;
  body["dim_quotient"] = r.dim_quotient;
  body["dims_match"] = r.dims_match;
  body["action_well_defined"] = r.action_well_defined;
  body["spans_coincide"] = r.spans_coincide;
  body["relation_span"] = vecs_json(r.relation_span);
  body["boundary_span"] = vecs_json(r.boundary_span);
  return {std::move(body), ok ? 0 : 1};
}

using Handler = Outcome (*)(const AlgebraDocument&, int);

struct CommandEntry {
  const char* name;
  Handler handler;
};

const CommandEntry kCommands[] = {
    {"validate", cmd_validate},
    {"cohomology", cmd_cohomology},
    {"homology", cmd_homology},
    {"derivations", cmd_derivations},
    {"mc-check", cmd_mc_check},
    {"bracket", cmd_bracket},
    {"nijenhuis-check", cmd_nijenhuis},
    {"rb-check", cmd_rb},
    {"deform-validate", cmd_deform_validate},
    {"deform-obstruction", cmd_deform_obstruction},
    {"deform-extend", cmd_deform_extend},
    {"deform-normalize", cmd_deform_normalize},
    {"extension-from-cocycle", cmd_extension_from_cocycle},
    {"extension-classify", cmd_extension_classify},
    {"lie-skew", cmd_lie_skew},
    {"lie-cohomology", cmd_lie_cohomology},
    {"kahler-check", cmd_kahler},
};

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const CommandEntry& e : kCommands) v.push_back(e.name);
    return v;
  }();
  return names;
}

CommandResult input_error_result(const std::string& command,
                                 const std::string& message) {
  json out;
  out["command"] = command;
  out["status"] = "input-error";
  out["error"] = message;
  return {2, out.dump(2) + "\n"};
}

CommandResult run_command(const std::string& command,
                          const AlgebraDocument& doc, int max_degree) {
  json out;
  out["command"] = command;
  try {
    if (max_degree < 0) throw InputError("max degree must be nonnegative");
    const CommandEntry* entry = nullptr;
    for (const CommandEntry& e : kCommands)
      if (command == e.name) entry = &e;
    if (!entry) throw InputError("unknown command \"" + command + "\"");
    Outcome oc = entry->handler(doc, max_degree);
    for (auto& [k, v] : oc.body.items()) out[k] = v;
    return {oc.exit_code, out.dump(2) + "\n"};
  } catch (const InputError& e) {
    out["status"] = "input-error";
    out["error"] = e.what();
    return {2, out.dump(2) + "\n"};
  } catch (const MathError& e) {
    out["status"] = "error";
    out["error"] = e.what();
    return {1, out.dump(2) + "\n"};
  }
}

}  // namespace compalg
