// Acceptance gate. Each criterion prints exactly one PASS/FAIL line; the
// process exits nonzero when any criterion fails. Golden dimensions are
// checked against the independent rank oracle in oracle.cpp plus frozen
// literals derived by hand.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "compalg/algebra.hpp"
#include "compalg/cohomology.hpp"
#include "compalg/commands.hpp"
#include "compalg/deformation.hpp"
#include "compalg/document.hpp"
#include "compalg/fixtures.hpp"
#include "compalg/gerstenhaber.hpp"
#include "compalg/homology.hpp"
#include "compalg/liebridge.hpp"
#include "compalg/matrix.hpp"
#include "compalg/operators.hpp"
#include "oracle.hpp"

namespace {

using namespace compalg;

Rational sgn(long long e) { return Rational(e % 2 == 0 ? 1 : -1); }

const std::vector<std::string> kAssocFixtures = {"F1", "F2", "F3", "F4"};
const std::vector<std::string> kAllFixtures = {"F1", "F2", "F3", "F4", "NC"};

Cochain random_cochain(std::mt19937& rng, int arity, int dim) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Cochain f(arity, dim, dim);
    for (Rational& x : f.coords()) x = Rational(coef(rng));
    return f;
}

CompatCochain random_tuple(std::mt19937& rng, int degree, int dim) {
    std::vector<Cochain> comps;
    for (int i = 0; i < degree; ++i) comps.push_back(random_cochain(rng, degree, dim));
    return CompatCochain(std::move(comps));
}

// Valid order-1 deformation with theta_1 a random kernel element of the
// degree-2 compatible coboundary (the order-1 condition is exactly
// delta_c(theta_1) = 0).
TruncatedDeformation random_order1(std::mt19937& rng, const CompatibleAlgebra& a) {
    CompatibleBimodule adj = adjoint_bimodule(a);
    std::vector<Vec> ker = kernel_basis(delta_c_matrix(a, adj, 2));
    Vec v = vec_zero(2 * a.dim * pow_dim(a.dim, 2));
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const Vec& k : ker) v = vec_add(v, vec_scale(Rational(coef(rng)), k));
    CompatCochain t1 = CompatCochain::from_coords(2, a.dim, a.dim, v);
    TruncatedDeformation d;
    d.base = a;
    d.order = 1;
    d.mu1_terms = {a.mu1, t1.comp(0)};
    d.mu2_terms = {a.mu2, t1.comp(1)};
    return d;
}

// The scaling deformation mu_i(t) = (1 + t) mu_i: every term equals the
// base product, and it satisfies the deformation equation at all orders.
TruncatedDeformation scaling_deformation(const CompatibleAlgebra& a) {
    TruncatedDeformation d;
    d.base = a;
    d.order = 1;
    d.mu1_terms = {a.mu1, a.mu1};
    d.mu2_terms = {a.mu2, a.mu2};
    return d;
}

bool criterion1(std::string& note) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(20260819);
    std::uniform_int_distribution<int> coef(-2, 2);
    int total = 0, valid = 0;
    bool ok = true;
    auto check_pair = [&](const CompatibleAlgebra& c) {
        bool ax = validate_compatible_algebra(c).passed();
        bool mc = is_maurer_cartan(c.mu1, c.mu2).holds;
        ++total;
        if (ax) ++valid;
        if (ax != mc) ok = false;
    };
    // Valid family: every pair of linear combinations of a compatible
    // fixture's two products is again compatible.
    for (int t = 0; t < 100 && ok; ++t) {
        CompatibleAlgebra base = fixture(kAssocFixtures[t % kAssocFixtures.size()]);
        CompatibleAlgebra c;
        c.dim = base.dim;
        c.mu1 = base.mu1.scaled(Rational(coef(rng))) + base.mu2.scaled(Rational(coef(rng)));
        c.mu2 = base.mu1.scaled(Rational(coef(rng))) + base.mu2.scaled(Rational(coef(rng)));
        check_pair(c);
    }
    // Random perturbations, mostly invalid.
    for (int t = 0; t < 100 && ok; ++t) {
        int dim = 1 + t % 2;
        CompatibleAlgebra c;
        c.dim = dim;
        c.mu1 = make_bilinear(dim, dim);
        c.mu2 = make_bilinear(dim, dim);
        for (Rational& x : c.mu1.coords()) x = Rational(coef(rng));
        for (Rational& x : c.mu2.coords()) x = Rational(coef(rng));
        check_pair(c);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << total << " pairs, " << valid << " valid, " << (total - valid)
       << " invalid, " << secs << " s";
    note = os.str();
    return ok && total == 200 && secs < 10.0;
}

bool criterion2(std::string& note) {
    for (const std::string& name : kAssocFixtures) {
        CompatibleAlgebra a = fixture(name);
        CompatibleBimodule adj = adjoint_bimodule(a);
        for (int n = 0; n <= 2; ++n) {
            Matrix d1n = hochschild_delta(a.mu1, adj.act1, n);
            Matrix d2n = hochschild_delta(a.mu2, adj.act2, n);
            Matrix d1n1 = hochschild_delta(a.mu1, adj.act1, n + 1);
            Matrix d2n1 = hochschild_delta(a.mu2, adj.act2, n + 1);
            if (!(d1n1 * d2n + d2n1 * d1n).is_zero()) {
                note = name + ": delta1 delta2 + delta2 delta1 != 0 at degree " + std::to_string(n);
                return false;
            }
            if (!(delta_c_matrix(a, adj, n + 1) * delta_c_matrix(a, adj, n)).is_zero()) {
                note = name + ": delta_c^2 != 0 at degree " + std::to_string(n);
                return false;
            }
        }
        PresimplicialPair p = hochschild_faces(a, adj, 4);
        for (int n = 1; n <= 3; ++n) {
            if (!(boundary1(p, n) * boundary2(p, n + 1) + boundary2(p, n) * boundary1(p, n + 1)).is_zero()) {
                note = name + ": boundary anticommutator != 0 at level " + std::to_string(n);
                return false;
            }
        }
        CompatChainComplex cc = compat_chain_complex(p);
        for (int n = 1; n + 1 < static_cast<int>(cc.boundaries.size()); ++n) {
            if (!(cc.boundaries[n] * cc.boundaries[n + 1]).is_zero()) {
                note = name + ": compatible boundary square != 0 at level " + std::to_string(n);
                return false;
            }
        }
    }
    note = "all identities exact through degree 3, F1-F4 adjoint";
    return true;
}

bool criterion3(std::string& note) {
    std::mt19937 rng(33);
    for (const std::string& name : kAllFixtures) {
        CompatibleAlgebra a = fixture(name);
        CompatibleBimodule adj = adjoint_bimodule(a);
        CompatCochain theta = pair_cochain(a);
        for (int t = 0; t < 50; ++t) {
            int degree = 1 + t % 3;
            CompatCochain f = random_tuple(rng, degree, a.dim);
            CompatCochain lhs = delta_c_tuple(a, adj, f);
            CompatCochain rhs = compat_bracket(theta, f).scaled(sgn(degree - 1));
            if (!(lhs == rhs)) {
                note = name + ": identification fails at degree " + std::to_string(degree);
                return false;
            }
        }
    }
    note = "delta_c(F) = (-1)^{n-1} [[theta, F]] on 50 tuples per fixture, degrees 1-3";
    return true;
}

bool criterion4(std::string& note) {
    std::mt19937 rng(44);
    std::uniform_int_distribution<int> ar(1, 3);
    for (int t = 0; t < 40; ++t) {
        int dim = 1 + t % 2;
        int am = ar(rng), an = ar(rng), ap = ar(rng);
        Cochain f = random_cochain(rng, am, dim);
        Cochain g = random_cochain(rng, an, dim);
        Cochain h = random_cochain(rng, ap, dim);
        long long m = am - 1, n = an - 1, p = ap - 1;
        if (!(bracket_g(f, g) == bracket_g(g, f).scaled(sgn(m * n + 1)))) {
            note = "[.,.]_G antisymmetry fails";
            return false;
        }
        Cochain jac = bracket_g(bracket_g(f, g), h).scaled(sgn(m * p)) +
                      bracket_g(bracket_g(g, h), f).scaled(sgn(n * m)) +
                      bracket_g(bracket_g(h, f), g).scaled(sgn(p * n));
        if (!jac.is_zero()) {
            note = "[.,.]_G Jacobi fails";
            return false;
        }
    }
    for (int t = 0; t < 40; ++t) {
        int dim = 1 + t % 2;
        int dm = ar(rng), dn = ar(rng), dp = ar(rng);
        CompatCochain F = random_tuple(rng, dm, dim);
        CompatCochain G = random_tuple(rng, dn, dim);
        CompatCochain H = random_tuple(rng, dp, dim);
        long long m = dm - 1, n = dn - 1, p = dp - 1;
        if (!(compat_bracket(F, G) == compat_bracket(G, F).scaled(sgn(m * n + 1)))) {
            note = "[[.,.]] antisymmetry fails";
            return false;
        }
        CompatCochain jac = compat_bracket(compat_bracket(F, G), H).scaled(sgn(m * p)) +
                            compat_bracket(compat_bracket(G, H), F).scaled(sgn(n * m)) +
                            compat_bracket(compat_bracket(H, F), G).scaled(sgn(p * n));
        if (!jac.is_zero()) {
            note = "[[.,.]] Jacobi fails";
            return false;
        }
        if (!(phi(compat_bracket(F, G)) == bracket_g(phi(F), phi(G)))) {
            note = "morphism law phi[[F,G]] = [phi F, phi G] fails";
            return false;
        }
    }
    note = "antisymmetry, Jacobi, morphism law on 80 randomized cases";
    return true;
}

bool criterion5(std::string& note) {
    // Hand-derived golden values, frozen. See the unit suite for the
    // degree-by-degree derivations on F1 and F2.
    // F1 and F2 were derived by hand degree by degree; F3 and F4 were
    // frozen after the main assembly and the dense oracle agreed and the
    // degree-0/1 values were reproduced by hand (C^0_c = A for the
    // commutative fixtures, derivation spaces trivial for F3/F4).
    const std::map<std::string, std::vector<int64_t>> golden_coh = {
        {"F1", {1, 0, 1, 0}},
        {"F2", {2, 1, 5, 7}},
        {"F3", {2, 0, 2, 1}},
        {"F4", {2, 0, 2, 0}},
    };
    const std::map<std::string, std::vector<int64_t>> golden_hom = {
        {"F1", {1, 0, 1, 0}},
        {"F2", {2, 1, 5, 7}},
        {"F3", {2, 0, 2, 1}},
        {"F4", {2, 0, 2, 0}},
    };
    std::ostringstream os;
    for (const std::string& name : kAssocFixtures) {
        CompatibleAlgebra a = fixture(name);
        CompatibleBimodule adj = adjoint_bimodule(a);
        std::vector<int64_t> coh, hom;
        for (const DegreeReport& d : cohomology(a, adj, 3).degrees) coh.push_back(d.dim);
        for (const HomologyDegree& d : homology(a, adj, 3).degrees) hom.push_back(d.dim);
        std::vector<int64_t> ocoh = oracle::cohomology_dims(a, adj, 3);
        std::vector<int64_t> ohom = oracle::homology_dims(a, adj, 3);
        os << name << " H^*=";
        for (int64_t d : coh) os << " " << d;
        os << ", H_*=";
        for (int64_t d : hom) os << " " << d;
        os << "; ";
        if (coh != ocoh) {
            note = name + ": cohomology differs from oracle";
            return false;
        }
        if (hom != ohom) {
            note = name + ": homology differs from oracle";
            return false;
        }
        if (coh != golden_coh.at(name) || hom != golden_hom.at(name)) {
            note = name + ": dims differ from frozen golden values (" + os.str() + ")";
            return false;
        }
    }
    note = os.str();
    return true;
}

bool criterion6(std::string& note) {
    std::mt19937 rng(66);
    int reps_total = 0, pairs_total = 0;
    for (const std::string& name : {std::string("F2"), std::string("F3"), std::string("F4")}) {
        CompatibleAlgebra a = fixture(name);
        CompatibleBimodule adj = adjoint_bimodule(a);
        std::vector<Vec> reps = cohomology(a, adj, 2).degrees[2].representatives;
        std::vector<ExtensionDatum> exts;
        for (const Vec& r : reps) {
            CompatCochain pair = CompatCochain::from_coords(2, a.dim, a.dim, r);
            ExtensionDatum e = extension_from_cocycle(a, adj, pair);
            if (!validate_extension(a, adj, e).passed()) {
                note = name + ": built extension fails validation";
                return false;
            }
            if (!(cocycle_from_extension(a, adj, e) == pair)) {
                note = name + ": cocycle round trip differs";
                return false;
            }
            // A cohomologous cocycle gives an equivalent extension.
            CompatCochain g = random_tuple(rng, 1, a.dim);
            ExtensionDatum shifted =
                extension_from_cocycle(a, adj, pair + delta_c_tuple(a, adj, g));
            if (!extensions_equivalent(a, adj, e, shifted).equivalent) {
                note = name + ": coboundary shift not recognized as equivalent";
                return false;
            }
            exts.push_back(e);
            ++reps_total;
        }
        for (size_t i = 0; i < exts.size(); ++i) {
            for (size_t j = i + 1; j < exts.size(); ++j) {
                if (extensions_equivalent(a, adj, exts[i], exts[j]).equivalent) {
                    note = name + ": distinct classes reported equivalent";
                    return false;
                }
                ++pairs_total;
            }
        }
        // A nonzero class is never equivalent to its double.
        if (!reps.empty()) {
            CompatCochain pair =
                CompatCochain::from_coords(2, a.dim, a.dim, reps[0]);
            ExtensionDatum doubled = extension_from_cocycle(a, adj, pair.scaled(Rational(2)));
            if (extensions_equivalent(a, adj, exts[0], doubled).equivalent) {
                note = name + ": class equivalent to its double";
                return false;
            }
        }
    }
    std::ostringstream os;
    os << reps_total << " representatives round-tripped, " << pairs_total
       << " distinct pairs separated, F2-F4";
    note = os.str();
    return true;
}

bool criterion7(std::string& note) {
    CompatibleAlgebra a = fixture("F2");
    Matrix n = fixture_nijenhuis_n();
    if (!is_nijenhuis(a, n).passed()) {
        note = "is_nijenhuis rejects left multiplication by x";
        return false;
    }
    NijenhuisDeformation nd = nijenhuis_trivial_deformation(a, n);
    if (!nd.checks.passed()) {
        note = "pointwise certificates fail: " + nd.checks.first_failure()->name;
        return false;
    }
    Vec ncoords;
    for (const Vec& row : n.rows_as_vectors())
        for (const Rational& x : row) ncoords.push_back(x);
    CompatCochain as_tuple(
        {Cochain::from_coords(1, a.dim, a.dim, ncoords)});
    if (!(nd.omega == delta_c_tuple(a, adjoint_bimodule(a), as_tuple))) {
        note = "omega differs from delta_c(N)";
        return false;
    }
    TruncatedDeformation d;
    d.base = a;
    d.order = 1;
    d.mu1_terms = {a.mu1, nd.omega.comp(0)};
    d.mu2_terms = {a.mu2, nd.omega.comp(1)};
    DeformationReport rep = validate_deformation(d);
    if (!rep.valid) {
        note = "order-1 deformation by delta_c(N) fails validation";
        return false;
    }
    note = "N passes, omega = delta_c(N), certificates exact, order-1 deformation valid";
    return true;
}

bool criterion8(std::string& note) {
    std::mt19937 rng(88);
    int extended_count = 0, obstructed_count = 0;
    for (const std::string& name : {std::string("F2"), std::string("F4")}) {
        CompatibleAlgebra a = fixture(name);
        for (int t = 0; t < 10; ++t) {
            TruncatedDeformation d = random_order1(rng, a);
            if (!validate_deformation(d).valid) {
                note = name + ": sampled order-1 deformation invalid";
                return false;
            }
            ObstructionResult ob = obstruction(d);
            if (!ob.is_cocycle) {
                note = name + ": delta_c(Ob) != 0";
                return false;
            }
            ExtendResult ext = extend(d);
            if (ext.extended) {
                if (ext.extension.order != 2 || !validate_deformation(ext.extension).valid) {
                    note = name + ": extended deformation fails at order 2";
                    return false;
                }
                ++extended_count;
            } else {
                if (vec_is_zero(ext.obstruction_class)) {
                    note = name + ": extension refused with zero obstruction class";
                    return false;
                }
                ++obstructed_count;
            }
        }
        // The scaling deformation extends at every order up to 4.
        TruncatedDeformation s = scaling_deformation(a);
        for (int target = 2; target <= 4; ++target) {
            ExtendResult ext = extend(s);
            if (!ext.extended || !validate_deformation(ext.extension).valid) {
                note = name + ": scaling deformation stuck at order " + std::to_string(target - 1);
                return false;
            }
            s = ext.extension;
        }
        if (s.order != 4) {
            note = name + ": scaling deformation order bookkeeping wrong";
            return false;
        }
    }
    std::ostringstream os;
    os << "20 valid order-1 deformations: obstruction cocycle exact, "
       << extended_count << " extended, " << obstructed_count
       << " obstructed with nonzero class; scaling extends to order 4";
    note = os.str();
    return true;
}

bool criterion9(std::string& note) {
    for (const std::string& name : kAllFixtures) {
        CompatibleAlgebra a = fixture(name);
        if (!phi_chain_map_check(a, 2).all_zero) {
            note = name + ": phi chain map residual nonzero";
            return false;
        }
        if (!phi_skew_chain_map(a, adjoint_bimodule(a), 2).all_zero) {
            note = name + ": skew chain map residual nonzero";
            return false;
        }
    }
    note = "zero residuals through degree 2 on F1-F4 and NC";
    return true;
}

bool criterion10(std::string& note) {
    // The quotient presentation ties the same basis triple across both
    // products, while the degree-2 boundary space takes independent
    // arguments in its two slots. F1 and F2 cannot separate the two
    // (F1 is one dimensional, F2 has a zero second product), and for
    // them the dimensions must agree exactly. F3 does separate them:
    // the summed relation span has rank 3 while the boundary span has
    // rank 4, so the presentation gives dimension 1 against H_1 = 0.
    // That adjudication was verified by hand (the vector 2 x@1 - 1@x
    // lies in the second boundary image but not in the summed span) and
    // must be reproduced and reported with both spans.
    struct Case {
        std::string name;
        Vec unit;
        int64_t h1, quotient;
        bool match;
        size_t rel, bnd;
    };
    const std::vector<Case> cases = {
        {"F1", {Rational(1, 2)}, 0, 0, true, 1, 1},
        {"F2", {Rational(1), Rational(0)}, 1, 1, true, 3, 3},
        {"F3", {Rational(1), Rational(-1)}, 0, 1, false, 3, 4},
    };
    std::ostringstream os;
    for (const Case& c : cases) {
        KahlerReport rep = kahler_check(fixture(c.name), c.unit);
        os << c.name << " H_1=" << rep.dim_h1 << " quotient=" << rep.dim_quotient
           << (rep.dims_match ? " equal" : " MISMATCH")
           << " (spans " << rep.relation_span.size() << " vs "
           << rep.boundary_span.size() << "); ";
        if (!rep.action_well_defined) {
            note = c.name + ": left action not well-defined on the quotient";
            return false;
        }
        if (rep.dim_h1 != c.h1 || rep.dim_quotient != c.quotient ||
            rep.dims_match != c.match || rep.relation_span.size() != c.rel ||
            rep.boundary_span.size() != c.bnd) {
            note = c.name + ": adjudicated values not reproduced: " + os.str();
            return false;
        }
        if (!rep.dims_match &&
            (rep.relation_span.empty() || rep.boundary_span.empty())) {
            note = c.name + ": mismatch reported without both spans";
            return false;
        }
    }
    note = os.str();
    return true;
}

bool criterion11(std::string& note) {
    for (const std::string& name : kAllFixtures) {
        AlgebraDocument doc = fixture_document(name);
        std::string text = serialize_document(doc);
        AlgebraDocument reparsed = parse_document(text);
        if (!(reparsed == doc) || serialize_document(reparsed) != text) {
            note = name + ": parse/serialize round trip not the identity";
            return false;
        }
        for (const std::string& cmd : command_names()) {
            CommandResult r1 = run_command(cmd, doc, 2);
            CommandResult r2 = run_command(cmd, doc, 2);
            if (r1.report != r2.report || r1.exit_code != r2.exit_code) {
                note = name + "/" + cmd + ": reports differ between runs";
                return false;
            }
            if (r1.report.empty() || r1.report.back() != '\n') {
                note = name + "/" + cmd + ": report missing trailing newline";
                return false;
            }
        }
    }
    std::ostringstream os;
    os << command_names().size() << " commands x " << kAllFixtures.size()
       << " fixtures byte-stable, documents round trip";
    note = os.str();
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<bool(std::string&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "axiom/bracket agreement", criterion1},
        {2, "differential identities", criterion2},
        {3, "self-coefficient identification", criterion3},
        {4, "graded Lie laws", criterion4},
        {5, "golden dimensions", criterion5},
        {6, "extension round trip", criterion6},
        {7, "Nijenhuis pipeline", criterion7},
        {8, "obstruction calculus", criterion8},
        {9, "chain maps", criterion9},
        {10, "Kahler check", criterion10},
        {11, "CLI determinism", criterion11},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            ok = false;
        }
        std::printf("criterion %02d %-4s %s: %s\n", c.id, ok ? "PASS" : "FAIL",
                    c.label, detail.c_str());
        std::fflush(stdout);
        if (!ok) all = false;
    }
    std::printf("%s\n", all ? "acceptance: all criteria passed"
                            : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
