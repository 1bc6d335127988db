#include "kleinian/suites.hpp"

#include <functional>
#include <random>

#include "kleinian/errors.hpp"
#include "kleinian/geometry.hpp"
#include "kleinian/invariants.hpp"
#include "kleinian/polynomial.hpp"

namespace kleinian::suites {

using catalog::Family;
using catalog::NamespaceId;
using catalog::Suite;

namespace {

Check pass_fail(std::string id, bool ok, std::string details) {
    return {std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details), {}};
}

void run_identity(std::vector<Check>& out, const catalog::Identity& ident) {
    const Namespace& ns = catalog::namespace_of(ident.ns);
    bool ok = eq_projective(evaluate(*ident.lhs, ns), evaluate(*ident.rhs, ns));
    out.push_back(pass_fail(ident.id, ok, ident.description));
}

void run_fixed_point(std::vector<Check>& out, const catalog::FixedPointCheck& fp) {
    const Namespace& ns = catalog::namespace_of(fp.ns);
    Matrix m = evaluate(*fp.word, ns);
    bool ok = m.is_parabolic() && m.parabolic_fixed_point() == fp.point &&
              m.apply(fp.point) == fp.point;
    out.push_back(pass_fail(fp.id, ok, fp.description));
}

FieldElement links_modulus_normal_form(int n) {
    // i(1 + 2n sqrt2)
    return {0, 1, 0, Rational(2 * n)};
}

FieldElement onecusped_modulus_normal_form(int n) {
    // 1 + 4i(n sqrt2 + 1)
    return {1, 4, 0, Rational(4 * n)};
}

void check_modulus(std::vector<Check>& out, const std::string& id, const Matrix& alpha,
                   const Matrix& beta, const FieldElement& normal_form) {
    try {
        invariants::ModulusClass cls = invariants::cusp_modulus(alpha, beta);
        bool ok = invariants::moduli_equivalent(cls.representative, ProjPoint(normal_form));
        out.push_back(pass_fail(id, ok,
                                "modulus " + cls.representative.str() + " ~ " +
                                    normal_form.str()));
    } catch (const Error& e) {
        out.push_back(pass_fail(id, false, e.what()));
    }
}

void check_subfield(std::vector<Check>& out, const std::string& id, Subfield got,
                    Subfield expected, const std::string& what) {
    out.push_back(pass_fail(id, got == expected,
                            what + ": " + subfield_str(got) + " (expected " +
                                subfield_str(expected) + ")"));
}

catalog::GroupSpec named_group(const std::string& name, NamespaceId ns,
                               const std::vector<std::string>& words) {
    catalog::GroupSpec spec;
    spec.name = name;
    const Namespace& table = catalog::namespace_of(ns);
    for (const auto& w : words) spec.generators.emplace_back(w, evaluate_word(w, table));
    return spec;
}

void section4_extra(std::vector<Check>& out) {
    const Namespace& ns = catalog::links_namespace();
    const Matrix p1 = ns.lookup("p1");
    const Matrix p2 = ns.lookup("p2");
    for (int n = 1; n <= 8; ++n) {
        check_modulus(out, "section4.modulus.knotted.n" + std::to_string(n), p1,
                      catalog::links_lambda1(n), links_modulus_normal_form(n));
        check_modulus(out, "section4.modulus.other.n" + std::to_string(n), p2,
                      catalog::links_lambda2(n), links_modulus_normal_form(n));
    }
    for (int m = 1; m <= 10; ++m)
        for (int n = m + 1; n <= 10; ++n) {
            bool eq = invariants::moduli_equivalent(ProjPoint(links_modulus_normal_form(m)),
                                                    ProjPoint(links_modulus_normal_form(n)));
            out.push_back(pass_fail(
                "section4.moduli_distinct.m" + std::to_string(m) + ".n" + std::to_string(n), !eq,
                "cusp moduli of members " + std::to_string(m) + " and " + std::to_string(n) +
                    " are inequivalent"));
        }
    for (int n = 0; n <= 8; ++n)
        check_subfield(out, "section4.trace_field.n" + std::to_string(n),
                       invariants::trace_field(catalog::family_generators(Family::Links, n)),
                       Subfield::Q_i_sqrt2, "trace field of links member " + std::to_string(n));
}

void section5_extra(std::vector<Check>& out) {
    const Namespace& ns = catalog::links_namespace();

    FieldElement t1 = evaluate_word("m*s*m^-1*Bar(s)", ns).trace();
    out.push_back(pass_fail("section5.trace.msm1_sbar", t1 == FieldElement(-10),
                            "trace of m s m^-1 bar(s) = " + t1.str() + " (expected -10)"));
    FieldElement t2 = evaluate_word("r*m*s*m^-1*Bar(s)", ns).trace();
    out.push_back(pass_fail("section5.trace.rmsm1_sbar", t2 == FieldElement(-18, 6, 0, 0),
                            "trace of r m s m^-1 bar(s) = " + t2.str() + " (expected -18+6i)"));

    FieldElement wt = evaluate_word("m*s*m^-1*g", ns).trace();
    IntPolynomial mp = minimal_polynomial(wt);
    IntPolynomial expected{{Integer(13673), Integer(836), Integer(-106), Integer(-60), Integer(25)}};
    out.push_back(pass_fail("section5.witness.trace",
                            wt == FieldElement(Rational(-7, 5), Rational(86, 5), Rational(17, 5),
                                               Rational(9, 5)),
                            "trace of m s m^-1 g = " + wt.str()));
    out.push_back(
        pass_fail("section5.witness.minpoly", mp == expected, "minimal polynomial " + mp.str()));
    out.push_back(pass_fail("section5.witness.nonintegral", !is_algebraic_integer(wt),
                            "the witness trace is not an algebraic integer"));

    const std::vector<std::string> spanning = {
        "r",       "m*s*m^-1",        "Bar(s)",          "r*m*s*m^-1",
        "r*Bar(s)", "m*s*m^-1*Bar(s)", "r*m*s*m^-1*Bar(s)"};
    for (std::size_t k = 0; k < spanning.size(); ++k) {
        FieldElement t = evaluate_word(spanning[k], ns).trace();
        out.push_back(pass_fail("section5.spanning_integral.w" + std::to_string(k + 1),
                                is_algebraic_integer(t),
                                "trace of " + spanning[k] + " = " + t.str() +
                                    " is an algebraic integer"));
    }

    for (int n = 0; n <= 4; ++n) {
        auto res = invariants::integral_traces(catalog::family_generators(Family::Links, n), 1);
        out.push_back(pass_fail("section5.integral_certificate.n" + std::to_string(n),
                                res.kind == invariants::IntegralityResult::Kind::Certificate,
                                "integral entries certify integral traces for links member " +
                                    std::to_string(n)));
    }
    auto witness = invariants::integral_traces(
        named_group("mutant witness", NamespaceId::Links, {"m*s*m^-1*g"}), 1);
    out.push_back(pass_fail("section5.mutant_witness",
                            witness.kind == invariants::IntegralityResult::Kind::Witness &&
                                witness.minpoly == IntPolynomial{{Integer(13673), Integer(836),
                                                                  Integer(-106), Integer(-60),
                                                                  Integer(25)}},
                            "word search finds the nonintegral trace witness"));
}

void section6_extra(std::vector<Check>& out) {
    const Namespace& ns = catalog::onecusped_namespace();
    const Matrix mu = ns.lookup("mu");
    for (int n = 1; n <= 8; ++n)
        check_modulus(out, "section6.modulus.n" + std::to_string(n), mu,
                      catalog::onecusped_lambda(n), onecusped_modulus_normal_form(n));
    for (int m = 1; m <= 10; ++m)
        for (int n = m + 1; n <= 10; ++n) {
            bool eq = invariants::moduli_equivalent(ProjPoint(onecusped_modulus_normal_form(m)),
                                                    ProjPoint(onecusped_modulus_normal_form(n)));
            out.push_back(pass_fail(
                "section6.moduli_distinct.m" + std::to_string(m) + ".n" + std::to_string(n), !eq,
                "cusp moduli of members " + std::to_string(m) + " and " + std::to_string(n) +
                    " are inequivalent"));
        }

    for (int n = 1; n <= 8; ++n) {
        invariants::Presentation2 pres = invariants::homology_presentation(n);
        int rank = invariants::gf2_rank(pres.relations);
        int dim = static_cast<int>(pres.generators.size()) - rank;
        out.push_back(pass_fail("section6.homology.n" + std::to_string(n),
                                dim == n + 1 && rank == 2 * n + 3,
                                "mod-2 homology dimension " + std::to_string(dim) +
                                    ", relation rank " + std::to_string(rank)));
    }

    out.push_back(pass_fail("section6.mod3_containment", invariants::mod3_congruence_containment(),
                            "p1..p4 reduce to +-identity mod 3"));

    check_subfield(out, "section6.trace_field.cap",
                   invariants::trace_field(named_group("octahedral cap", NamespaceId::OneCusped,
                                                       {"a", "b"})),
                   Subfield::Q_i, "trace field of <a,b>");
    check_subfield(out, "section6.invariant_trace_field.cap",
                   invariants::invariant_trace_field_lower(
                       named_group("octahedral cap", NamespaceId::OneCusped, {"a", "b"}), 2),
                   Subfield::Q_i, "invariant trace field lower bound for <a,b>");
    check_subfield(out, "section6.invariant_trace_field.middle",
                   invariants::invariant_trace_field_lower(
                       named_group("cuboctahedral block", NamespaceId::OneCusped, {"x", "y", "z"}),
                       2),
                   Subfield::Q_isqrt2, "invariant trace field lower bound for <x,y,z>");
    for (int n = 1; n <= 4; ++n) {
        auto spec = catalog::family_generators(Family::OneCusped, n);
        check_subfield(out, "section6.trace_field.n" + std::to_string(n),
                       invariants::trace_field(spec), Subfield::Q_i_sqrt2,
                       "trace field of onecusped member " + std::to_string(n));
        check_subfield(out, "section6.invariant_trace_field.n" + std::to_string(n),
                       invariants::invariant_trace_field_lower(spec, 2), Subfield::Q_i_sqrt2,
                       "invariant trace field lower bound for onecusped member " +
                           std::to_string(n));
    }
    for (int n = 1; n <= 4; ++n) {
        auto res =
            invariants::integral_traces(catalog::family_generators(Family::OneCusped, n), 1);
        out.push_back(pass_fail("section6.integral_certificate.n" + std::to_string(n),
                                res.kind == invariants::IntegralityResult::Kind::Certificate,
                                "integral entries certify integral traces for onecusped member " +
                                    std::to_string(n)));
    }
}

}  // namespace

std::vector<Check> identity_checks(Suite suite) {
    std::vector<Check> out;
    for (const auto& ident : catalog::named_identities(suite)) run_identity(out, ident);
    for (const auto& fp : catalog::fixed_point_checks(suite)) run_fixed_point(out, fp);
    return out;
}

std::vector<Check> section_checks(Suite suite) {
    std::vector<Check> out = identity_checks(suite);
    switch (suite) {
        case Suite::Section4: section4_extra(out); break;
        case Suite::Section5: section5_extra(out); break;
        case Suite::Section6: section6_extra(out); break;
        default: break;
    }
    return out;
}

std::vector<Check> geometry_checks() {
    std::vector<Check> out;
    geometry::MapResolver resolve = [](const std::string& ns, const std::string& word) {
        return evaluate_word(word, catalog::namespace_of(catalog::parse_namespace(ns)));
    };
    for (const geometry::PolyhedronData* data :
         {&geometry::octahedron_config(), &geometry::cuboctahedron_config()}) {
        for (const auto& r : geometry::verify_polyhedron(*data, resolve))
            out.push_back(pass_fail(r.id, r.pass, r.details));
    }

    const Namespace& ns = catalog::links_namespace();
    const FieldElement minus_sqrt2(0, 0, -1, 0);
    geometry::ExtendedCircle far_line = geometry::ExtendedCircle::horizontal_line(minus_sqrt2);
    out.push_back(pass_fail(
        "geometry.c_boundary_plane",
        eq_circle(image_circle(ns.lookup("c"), far_line), geometry::ExtendedCircle::real_line()),
        "c carries the line Im z = -sqrt2 to the real line"));
    for (int j = 1; j <= 3; ++j) {
        Matrix spjs = evaluate_word("Conj(sigma, p" + std::to_string(j) + ")", ns);
        out.push_back(pass_fail("geometry.sigma_p" + std::to_string(j) + "_far_plane",
                                eq_circle(image_circle(spjs, far_line), far_line),
                                "sigma p" + std::to_string(j) +
                                    " sigma^-1 preserves the line Im z = -sqrt2"));
    }
    return out;
}

std::vector<Check> all_checks() {
    std::vector<Check> out;
    for (Suite s : {Suite::Section2, Suite::Section3, Suite::Section4, Suite::Section5,
                    Suite::Section6}) {
        std::vector<Check> part = section_checks(s);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::vector<Check> geo = geometry_checks();
    out.insert(out.end(), geo.begin(), geo.end());
    return out;
}

// ---------------------------------------------------------------------------
// randomized exact property suites

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}

    Rational rational(int span = 9) {
        std::uniform_int_distribution<int> num(-span, span);
        std::uniform_int_distribution<int> den(1, span);
        return {num(gen), den(gen)};
    }
    FieldElement element() {
        // mix of dense and sparse coordinate patterns
        std::uniform_int_distribution<int> shape(0, 3);
        int keep = shape(gen);
        auto coord = [&](int k) { return k <= keep ? rational() : Rational(0); };
        return {coord(0), coord(1), coord(2), coord(3)};
    }
    FieldElement nonzero_element() {
        for (;;) {
            FieldElement e = element();
            if (!e.is_zero()) return e;
        }
    }
    Matrix invertible() {
        for (;;) {
            FieldElement a = element(), b = element(), c = element(), d = element();
            if (!(a * d - b * c).is_zero()) return Matrix(a, b, c, d);
        }
    }
    // products of elementary shears have determinant exactly 1
    Matrix unimodular() {
        Matrix m = Matrix::identity();
        std::uniform_int_distribution<int> count(2, 4);
        int k = count(gen);
        for (int t = 0; t < k; ++t) {
            FieldElement u = element();
            m = (t % 2 == 0) ? m * Matrix(FieldElement(1), u, FieldElement(0), FieldElement(1))
                             : m * Matrix(FieldElement(1), FieldElement(0), u, FieldElement(1));
        }
        return m;
    }
    Matrix rational_invertible() {
        for (;;) {
            FieldElement a{rational()}, b{rational()}, c{rational()}, d{rational()};
            if (!(a * d - b * c).is_zero()) return Matrix(a, b, c, d);
        }
    }
    FieldElement irrational() {
        for (;;) {
            FieldElement e = element();
            if (subfield_of(e) != Subfield::Q) return e;
        }
    }
};

Check run_property(const std::string& id, int samples, Rng& rng,
                   const std::function<bool(Rng&)>& one) {
    for (int k = 0; k < samples; ++k) {
        if (!one(rng))
            return {id, CheckStatus::Fail, "counterexample at sample " + std::to_string(k), {}};
    }
    return {id, CheckStatus::Pass, std::to_string(samples) + " samples", {}};
}

}  // namespace

std::vector<Check> property_checks(int samples, std::uint64_t seed) {
    std::vector<Check> out;
    Rng rng(seed);

    out.push_back(run_property("properties.field_axioms", samples, rng, [](Rng& r) {
        FieldElement a = r.element(), b = r.element(), c = r.element();
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a * b != b * a) return false;
        FieldElement n = r.nonzero_element();
        if (n * n.inverse() != FieldElement(1)) return false;
        return (a * b).complex_conjugate() == a.complex_conjugate() * b.complex_conjugate();
    }));

    out.push_back(run_property("properties.minpoly_vanishing", samples, rng, [](Rng& r) {
        FieldElement a = r.element();
        IntPolynomial p = minimal_polynomial(a);
        if (!evaluate(p, a).is_zero()) return false;
        int d = p.degree();
        return d == 1 || d == 2 || d == 4;
    }));

    out.push_back(run_property("properties.trace_conjugation", samples, rng, [](Rng& r) {
        Matrix x = r.unimodular();
        Matrix g = r.invertible();
        return x.conjugated_by(g).trace() == x.trace();
    }));

    out.push_back(run_property("properties.image_circle_functorial", samples, rng, [](Rng& r) {
        FieldElement center{r.rational(), 0, r.rational(), 0};
        Rational rad = r.rational();
        if (rad <= 0) rad = 1 - rad;
        geometry::ExtendedCircle circ =
            geometry::ExtendedCircle::circle(center, FieldElement(rad));
        Matrix m1 = r.invertible(), m2 = r.invertible();
        if (!eq_circle(image_circle(m1 * m2, circ), image_circle(m1, image_circle(m2, circ))))
            return false;
        // a point lies on the circle iff its image lies on the image circle
        ProjPoint p(center + FieldElement(rad));  // on the circle
        return image_circle(m1, circ).contains(m1.apply(p));
    }));

    out.push_back(run_property("properties.moduli_equivalence_relation", samples, rng, [](Rng& r) {
        FieldElement z = r.irrational();
        Matrix g1 = r.rational_invertible(), g2 = r.rational_invertible();
        ProjPoint pz(z);
        ProjPoint pz1 = g1.apply(pz);
        ProjPoint pz2 = g2.apply(pz1);
        if (!invariants::moduli_equivalent(pz, pz)) return false;  // reflexive
        if (!invariants::moduli_equivalent(pz, pz1) || !invariants::moduli_equivalent(pz1, pz))
            return false;  // symmetric on an equivalent pair
        if (!invariants::moduli_equivalent(pz, pz2)) return false;  // transitive reach
        // inequivalent pair stays inequivalent in both directions
        FieldElement w{0, 1, 0, 2};   // i(1 + 2 sqrt2)
        FieldElement v{0, 1, 0, 4};   // i(1 + 4 sqrt2)
        return invariants::moduli_equivalent(ProjPoint(w), ProjPoint(v)) ==
               invariants::moduli_equivalent(ProjPoint(v), ProjPoint(w));
    }));

    return out;
}

}  // namespace kleinian::suites
