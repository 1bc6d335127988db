#include "kleinian/catalog.hpp"

#include "kleinian/errors.hpp"

namespace kleinian::catalog {

namespace {

FieldElement fe(int one, int i, int sqrt2, int isqrt2) {
    return {Rational(one), Rational(i), Rational(sqrt2), Rational(isqrt2)};
}

Matrix mat(FieldElement a, FieldElement b, FieldElement c, FieldElement d) {
    return Matrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

Matrix imat(int a, int b, int c, int d) {
    return mat(FieldElement(a), FieldElement(b), FieldElement(c), FieldElement(d));
}

// Defining a name by a word in the names already present keeps the word
// grammar as the single source of truth for every displayed expression.
void define_word(Namespace& ns, const std::string& name, const std::string& word) {
    ns.define(name, evaluate_word(word, ns));
}

Namespace build_links() {
    Namespace ns("links");
    ns.define("r", imat(1, 0, -1, 1));
    ns.define("s", mat(fe(0, 2, 0, 0), fe(2, -1, 0, 0), fe(0, 1, 0, 0), fe(1, -1, 0, 0)));
    ns.define("f", imat(1, 0, -1, 1));
    ns.define("g", mat(fe(-1, 0, 0, 1), fe(1, 0, 0, -2), fe(-2, 0, 0, 0), fe(3, 0, 0, -1)));
    ns.define("h", mat(fe(0, 0, 0, 2), fe(-3, 0, 0, -1), fe(-3, 0, 0, 1), fe(0, 0, 0, -3)));
    ns.define("sigma", mat(fe(0, 1, 0, 0), fe(0, 1, -1, 0), fe(0, 0, 0, 0), fe(0, -1, 0, 0)));
    ns.define("c", mat(fe(1, 0, 0, 0), fe(0, 0, 0, 1), fe(0, 0, 0, 0), fe(1, 0, 0, 0)));
    // Projective stand-ins for the conjugators with entries outside K:
    //   [[0, sqrt5], [-1/sqrt5, 0]]      -> [[0, 5], [-1, 0]]   (det 5)
    //   diag(i sqrt5/5, -i sqrt5)        -> [[1, 0], [0, -5]]   (det -5)
    ns.define("m", imat(0, 5, -1, 0), /*projective=*/true);
    ns.define("tau", mat(fe(0, 0, 0, 0), fe(0, 1, 0, 0), fe(0, 1, 0, 0), fe(0, 0, 0, 0)));
    ns.define("omega", imat(1, 0, 0, -5), /*projective=*/true);

    define_word(ns, "p1", "r^-1");
    define_word(ns, "p2", "r*s*r*s^-2");
    define_word(ns, "p3", "(s*r*s)*r^-1*(s*r*s)^-1");
    define_word(ns, "p4", "p1*p2*p3^-1");
    define_word(ns, "gamma1", "g^-1*h*(h*g)^-1");
    ns.define("gamma2", Matrix::identity());
    define_word(ns, "gamma3", "f*h^-1*f*g");
    define_word(ns, "gamma4", "g^-1*f*g");
    for (int j = 1; j <= 4; ++j) {
        std::string gj = "gamma" + std::to_string(j);
        define_word(ns, "delta" + std::to_string(j), "Conj(c^2, " + gj + "^-1)*Bar(" + gj + ")");
    }
    return ns;
}

Namespace build_onecusped() {
    Namespace ns("onecusped");
    ns.define("a", mat(fe(0, 1, 0, 0), fe(0, -1, 0, 0), fe(1, -1, 0, 0), fe(-1, 0, 0, 0)));
    ns.define("b", mat(fe(0, 2, 0, 0), fe(2, -1, 0, 0), fe(0, 1, 0, 0), fe(1, -1, 0, 0)));
    ns.define("x", mat(fe(0, 1, 0, 0), fe(0, -1, 0, 0), fe(0, -1, -1, 0), fe(0, 0, 1, 0)));
    ns.define("y", mat(fe(1, 0, 0, -2), fe(2, 0, 0, 1), fe(1, 0, 0, -1), fe(1, 0, 0, 1)));
    ns.define("z", mat(fe(0, 4, 0, 0), fe(0, -3, -2, 0), fe(0, 1, -2, 0), fe(0, -3, 1, 0)));
    ns.define("m", imat(1, 1, 0, 1));
    ns.define("c", mat(fe(1, 0, 0, 0), fe(0, 0, 0, 1), fe(0, 0, 0, 0), fe(1, 0, 0, 0)));
    // [[0, sqrt3/3], [-sqrt3, 0]] -> [[0, 1], [-3, 0]] (det 3)
    ns.define("tau", imat(0, 1, -3, 0), /*projective=*/true);

    define_word(ns, "p1", "a*b*a");
    define_word(ns, "p2", "b^2*a^-1");
    define_word(ns, "p3", "a^-2*b^-1");
    define_word(ns, "p4", "p3*p2*p1");
    define_word(ns, "q1", "x*y^-1*z^-1");
    define_word(ns, "q2", "y*z*x^-1");
    define_word(ns, "q3", "z^2*y^-1");
    define_word(ns, "q4", "q3*q2*q1");
    define_word(ns, "alpha", "y*z^-1*c^-1*x^-1*c*y^-1");
    define_word(ns, "beta", "a^-1*m^-1*x^-1*m*a*b^-1");
    define_word(ns, "gamma", "Bar(b*a^-1)*c*x*y^-1*c^-1*Bar(b*a)");
    define_word(ns, "mu", "Bar(a*b*a)");
    return ns;
}

}  // namespace

const Namespace& links_namespace() {
    static const Namespace ns = build_links();
    return ns;
}

const Namespace& onecusped_namespace() {
    static const Namespace ns = build_onecusped();
    return ns;
}

const Namespace& namespace_of(NamespaceId id) {
    return id == NamespaceId::Links ? links_namespace() : onecusped_namespace();
}

NamespaceId parse_namespace(const std::string& name) {
    if (name == "links") return NamespaceId::Links;
    if (name == "onecusped") return NamespaceId::OneCusped;
    throw DomainError("unknown namespace '" + name + "' (expected links or onecusped)");
}

std::string namespace_str(NamespaceId id) {
    return id == NamespaceId::Links ? "links" : "onecusped";
}

Matrix links_lambda1(int n) {
    if (n < 1) throw DomainError("links_lambda1 requires n >= 1");
    const Namespace& ns = links_namespace();
    const Matrix c = ns.lookup("c");
    const Matrix srs = evaluate_word("s*r*s", ns);
    const Matrix d1 = ns.lookup("delta1");
    const Matrix d3inv = ns.lookup("delta3").inverse();
    Matrix acc = srs.inverse().complex_conjugate();
    for (int k = 0; k < n; ++k) acc = acc * d3inv.conjugated_by(c.pow(2 * k));
    acc = acc * srs.conjugated_by(c.pow(2 * n));
    for (int k = n - 1; k >= 0; --k) acc = acc * d1.conjugated_by(c.pow(2 * k));
    return acc;
}

Matrix links_lambda2(int n) {
    if (n < 1) throw DomainError("links_lambda2 requires n >= 1");
    const Namespace& ns = links_namespace();
    const Matrix c = ns.lookup("c");
    const Matrix srs1 = evaluate_word("s*r*s^-1", ns);
    const Matrix d4inv = ns.lookup("delta4").inverse();
    Matrix acc = srs1.inverse().complex_conjugate();
    for (int k = 0; k < n; ++k) acc = acc * d4inv.conjugated_by(c.pow(2 * k));
    return acc * srs1.conjugated_by(c.pow(2 * n));
}

Matrix onecusped_lambda(int n) {
    if (n < 1) throw DomainError("onecusped_lambda requires n >= 1");
    const Namespace& ns = onecusped_namespace();
    const Matrix c = ns.lookup("c");
    Matrix acc = ns.lookup("y").inverse().conjugated_by(c);
    const Matrix alpha = ns.lookup("alpha");
    for (int k = 2; k <= n; ++k) acc = acc * alpha.conjugated_by(c.pow(k));
    acc = acc * ns.lookup("beta").conjugated_by(c.pow(n) * ns.lookup("m"));
    return acc * ns.lookup("gamma");
}

Family parse_family(const std::string& name) {
    if (name == "links") return Family::Links;
    if (name == "mutant") return Family::Mutant;
    if (name == "onecusped") return Family::OneCusped;
    throw DomainError("unknown family '" + name + "' (expected links, mutant or onecusped)");
}

std::string family_str(Family f) {
    switch (f) {
        case Family::Links: return "links";
        case Family::Mutant: return "mutant";
        case Family::OneCusped: return "onecusped";
    }
    return "?";
}

NamespaceId family_namespace(Family family) {
    return family == Family::OneCusped ? NamespaceId::OneCusped : NamespaceId::Links;
}

namespace {

std::string conj_label(const std::string& outer, const std::string& inner) {
    return "Conj(" + outer + ", " + inner + ")";
}

std::string c_power(int k) { return k == 1 ? std::string("c") : "c^" + std::to_string(k); }

}  // namespace

GroupSpec family_generators(Family family, int n) {
    GroupSpec spec;
    spec.name = family_str(family) + " n=" + std::to_string(n);
    const Namespace& ns = namespace_of(family_namespace(family));

    auto push = [&](const std::string& label) {
        Matrix m = evaluate_word(label, ns);
        if (!m.is_unimodular()) throw DomainError("family generator '" + label + "' is not unimodular");
        spec.generators.emplace_back(label, std::move(m));
    };

    switch (family) {
        case Family::Links:
        case Family::Mutant: {
            if (n < 0) throw DomainError("family index must be >= 0");
            const bool mutant = family == Family::Mutant;
            for (const std::string& gen : {"r", "s"}) {
                std::string outer;
                if (n > 0) outer = c_power(2 * n);
                if (mutant) outer = outer.empty() ? "m" : outer + "*m";
                push(outer.empty() ? gen : conj_label(outer, gen));
            }
            for (int j = n; j >= 1; --j)
                for (const std::string& gen : {"f", "g", "h"})
                    push(conj_label(c_power(2 * j), gen));
            push("Bar(r)");
            push("Bar(s)");
            break;
        }
        case Family::OneCusped: {
            if (n < 1) throw DomainError("onecusped family requires n >= 1");
            for (const std::string& gen : {"a", "b"})
                push(conj_label(c_power(n) + "*m", gen));
            for (int i = n; i >= 1; --i)
                for (const std::string& gen : {"x", "y", "z"})
                    push(conj_label(c_power(i), gen));
            push("Bar(a)");
            push("Bar(b)");
            break;
        }
    }
    return spec;
}

Suite parse_suite(const std::string& name) {
    if (name == "section2") return Suite::Section2;
    if (name == "section3") return Suite::Section3;
    if (name == "section4") return Suite::Section4;
    if (name == "section5") return Suite::Section5;
    if (name == "section6") return Suite::Section6;
    throw DomainError("unknown suite '" + name + "'");
}

std::string suite_str(Suite s) {
    switch (s) {
        case Suite::Section2: return "section2";
        case Suite::Section3: return "section3";
        case Suite::Section4: return "section4";
        case Suite::Section5: return "section5";
        case Suite::Section6: return "section6";
    }
    return "?";
}

namespace {

struct IdentityList {
    std::vector<Identity> out;
    NamespaceId ns;

    void words(const std::string& id, const std::string& desc, const std::string& lhs,
               const std::string& rhs) {
        out.push_back({id, desc, ns, parse_word(lhs), parse_word(rhs)});
    }
    void display(const std::string& id, const std::string& desc, const std::string& lhs,
                 Matrix rhs) {
        out.push_back({id, desc, ns, parse_word(lhs), word_literal(std::move(rhs))});
    }
    void exprs(const std::string& id, const std::string& desc, WordPtr lhs, WordPtr rhs) {
        out.push_back({id, desc, ns, std::move(lhs), std::move(rhs)});
    }
};

constexpr int kCuspRangeMax = 8;  // the n = 1..8 instances checked by the suites

Matrix upper_unipotent(FieldElement t) {
    return Matrix(FieldElement(1), std::move(t), FieldElement(0), FieldElement(1));
}

std::vector<Identity> build_section2() {
    IdentityList l{{}, NamespaceId::Links};
    l.display("section2.p1_display", "p1 = r^-1 equals the stated matrix", "r^-1",
              imat(1, 0, 1, 1));
    l.display("section2.p2_display", "p2 = rsrs^-2 equals the stated matrix", "r*s*r*s^-2",
              imat(-1, 5, 0, -1));
    l.display("section2.p3_display", "p3 = (srs)r^-1(srs)^-1 equals the stated matrix",
              "(s*r*s)*r^-1*(s*r*s)^-1", imat(-14, 25, -9, 16));
    l.display("section2.p4_display", "p4 = p1 p2 p3^-1 equals the stated matrix",
              "p1*p2*p3^-1", imat(29, -45, 20, -31));
    l.display("section2.rho_v", "the boundary generator image of v is p3^-1",
              "Conj(s*r*s, r^-1)^-1", imat(16, -25, 9, -14));
    l.display("section2.rho_e", "the boundary generator image of e is p2", "r*s*r*s^-2",
              imat(-1, 5, 0, -1));
    return l.out;
}

std::vector<Identity> build_section3() {
    IdentityList l{{}, NamespaceId::Links};
    l.words("section3.p1_words", "p1 = r^-1 = f^-1", "f^-1", "r^-1");
    l.words("section3.p2_words", "p2 rewritten over f, g, h", "f*g^-1*f^-1*h^-1*g", "p2");
    l.words("section3.p3_words", "p3 rewritten over f, g, h",
            "(g^-1*f^-1*h)*g^-1*(h^-1*f*g)", "p3");
    l.words("section3.sigma_f", "sigma f sigma^-1 = f g f^-1", "Conj(sigma, f)", "f*g*f^-1");
    l.words("section3.sigma_g", "sigma g sigma^-1 = (fg^-1) f (gf^-1)", "Conj(sigma, g)",
            "(f*g^-1)*f*(g*f^-1)");
    l.words("section3.sigma_h", "sigma h sigma^-1 = (fg^-1) h^-1 (gf^-1)", "Conj(sigma, h)",
            "(f*g^-1)*h^-1*(g*f^-1)");
    l.words("section3.sigma_swap", "sigma swaps f and f g f^-1", "Conj(sigma, f*g*f^-1)", "f");
    l.words("section3.sigma_p2", "sigma inverts p2", "Conj(sigma, p2)", "p2^-1");
    return l.out;
}

std::vector<Identity> build_section4() {
    IdentityList l{{}, NamespaceId::Links};
    for (int j = 1; j <= 4; ++j) {
        std::string pj = "p" + std::to_string(j);
        l.words("section4.delta_conj.j" + std::to_string(j),
                "delta" + std::to_string(j) + " conjugates " + pj + " like c^2",
                "Conj(delta" + std::to_string(j) + ", " + pj + ")", "Conj(c^2, " + pj + ")");
    }
    l.display("section4.tau_p1", "tau normalizes p1 to the unit translation", "Conj(tau, p1)",
              imat(1, 1, 0, 1));
    l.display("section4.omega_p2", "omega normalizes p2 to the unit translation",
              "Conj(omega, p2)", imat(1, 1, 0, 1));
    for (int n = 1; n <= kCuspRangeMax; ++n) {
        const std::string sn = ".n" + std::to_string(n);
        WordPtr lam1 = word_literal(links_lambda1(n));
        WordPtr lam2 = word_literal(links_lambda2(n));
        l.exprs("section4.lambda1_commutes" + sn, "lambda1 commutes with p1",
                word_product({lam1, word_name("p1")}), word_product({word_name("p1"), lam1}));
        l.exprs("section4.lambda2_commutes" + sn, "lambda2 commutes with p2",
                word_product({lam2, word_name("p2")}), word_product({word_name("p2"), lam2}));
        // tau lambda1 tau^-1 = [[1, 2i(1+2n sqrt2)], [0, 1]]
        l.exprs("section4.lambda1_normal_form" + sn,
                "lambda1 normalized by tau is the stated translation",
                word_conj(word_name("tau"), lam1),
                word_literal(upper_unipotent(fe(0, 2, 0, 4 * n))));
        // omega lambda2 omega^-1 = [[1, (2i/5)(1+2n sqrt2)], [0, 1]]
        l.exprs("section4.lambda2_normal_form" + sn,
                "lambda2 normalized by omega is the stated translation",
                word_conj(word_name("omega"), lam2),
                word_literal(upper_unipotent(
                    FieldElement(0, Rational(2, 5), 0, Rational(4 * n, 5)))));
    }
    return l.out;
}

std::vector<Identity> build_section5() {
    IdentityList l{{}, NamespaceId::Links};
    l.words("section5.m_p1", "m conjugates p1 to p2", "Conj(m, p1)", "p2");
    l.words("section5.m_p2", "m conjugates p2 to p1", "Conj(m, p2)", "p1");
    l.words("section5.m_p3", "m conjugates p3 to p4 conjugated by p1^-1", "Conj(m, p3)",
            "Conj(p1^-1, p4)");
    l.display("section5.msm1g_display", "m s m^-1 g equals the stated matrix", "m*s*m^-1*g",
              mat(FieldElement(-1, 11, 1, 1), FieldElement(1, -16, -7, -2),
                  FieldElement(Rational(2, 5), Rational(-21, 5), Rational(-1, 5), Rational(-2, 5)),
                  FieldElement(Rational(-2, 5), Rational(31, 5), Rational(12, 5), Rational(4, 5))));
    return l.out;
}

std::vector<Identity> build_section6() {
    IdentityList l{{}, NamespaceId::OneCusped};
    l.display("section6.p1_display", "p1 = aba equals the stated matrix", "a*b*a",
              imat(1, 0, -3, 1));
    l.words("section6.p1_words", "p1 = aba = xyx", "x*y*x", "p1");
    l.display("section6.p2_display", "p2 = b^2 a^-1 equals the stated matrix", "b^2*a^-1",
              imat(-1, -3, 0, -1));
    l.words("section6.p2_words", "p2 = b^2 a^-1 = yzx^-1", "y*z*x^-1", "p2");
    l.display("section6.p3_display", "p3 = a^-2 b^-1 equals the stated matrix", "a^-2*b^-1",
              imat(-2, 3, -3, 4));
    l.words("section6.p3_words", "p3 = a^-2 b^-1 = x^-2 y^-1", "x^-2*y^-1", "p3");
    l.words("section6.p4_gword", "p4 = p3 p2 p1 = a^-2 b^2 a", "a^-2*b^2*a", "p4");
    l.words("section6.p4_xword", "p4 = p3 p2 p1 = x^-2 z y x", "x^-2*z*y*x", "p4");
    l.words("section6.m_p1", "m conjugates p1 to p3", "Conj(m, p1)", "p3");
    l.words("section6.m_p2", "m fixes p2", "Conj(m, p2)", "p2");
    l.words("section6.m_p3", "m conjugates p3 to p4^-1 conjugated by p3^-1", "Conj(m, p3)",
            "Conj(p3^-1, p4^-1)");
    for (int j = 1; j <= 4; ++j) {
        std::string sj = std::to_string(j);
        l.words("section6.q_to_p.j" + sj, "c q" + sj + " c^-1 = p" + sj, "Conj(c, q" + sj + ")",
                "p" + sj);
    }
    l.words("section6.q4_word", "q4 = q3 q2 q1 = z^3 y^-1 z^-1", "z^3*y^-1*z^-1", "q4");
    l.display("section6.mu_tau", "tau normalizes mu to the unit translation", "Conj(tau, mu)",
              imat(1, 1, 0, 1));
    for (int n = 1; n <= kCuspRangeMax; ++n) {
        const std::string sn = ".n" + std::to_string(n);
        WordPtr lam = word_literal(onecusped_lambda(n));
        l.exprs("section6.lambda_commutes" + sn, "lambda commutes with mu",
                word_product({lam, word_name("mu")}), word_product({word_name("mu"), lam}));
        // tau lambda tau^-1 = [[1, (1 + 4i(n sqrt2 + 1))/3], [0, 1]]
        l.exprs("section6.lambda_normal_form" + sn,
                "lambda normalized by tau is the stated translation",
                word_conj(word_name("tau"), lam),
                word_literal(upper_unipotent(FieldElement(
                    Rational(1, 3), Rational(4, 3), 0, Rational(4 * n, 3)))));
    }
    return l.out;
}

}  // namespace

std::vector<Identity> named_identities(Suite suite) {
    switch (suite) {
        case Suite::Section2: return build_section2();
        case Suite::Section3: return build_section3();
        case Suite::Section4: return build_section4();
        case Suite::Section5: return build_section5();
        case Suite::Section6: return build_section6();
    }
    return {};
}

std::vector<FixedPointCheck> fixed_point_checks(Suite suite) {
    std::vector<FixedPointCheck> out;
    auto add = [&](NamespaceId ns, const std::string& id, const std::string& word,
                   ProjPoint point) {
        out.push_back({id, word + " fixes " + point.str(), ns, parse_word(word), std::move(point)});
    };
    switch (suite) {
        case Suite::Section5:
            add(NamespaceId::Links, "section5.fixed_point.p1", "p1", ProjPoint(FieldElement(0)));
            add(NamespaceId::Links, "section5.fixed_point.p2", "p2", ProjPoint::infinity());
            add(NamespaceId::Links, "section5.fixed_point.p3", "p3",
                ProjPoint(FieldElement(Rational(5, 3))));
            break;
        case Suite::Section6:
            add(NamespaceId::OneCusped, "section6.fixed_point.p1", "p1",
                ProjPoint(FieldElement(0)));
            add(NamespaceId::OneCusped, "section6.fixed_point.p2", "p2", ProjPoint::infinity());
            add(NamespaceId::OneCusped, "section6.fixed_point.p3", "p3",
                ProjPoint(FieldElement(1)));
            add(NamespaceId::OneCusped, "section6.fixed_point.p4", "p4",
                ProjPoint(FieldElement(Rational(1, 2))));
            add(NamespaceId::OneCusped, "section6.fixed_point.q1", "q1",
                ProjPoint(fe(0, 0, 0, -1)));
            add(NamespaceId::OneCusped, "section6.fixed_point.q2", "q2", ProjPoint::infinity());
            add(NamespaceId::OneCusped, "section6.fixed_point.q3", "q3",
                ProjPoint(fe(1, 0, 0, -1)));
            break;
        default:
            break;
    }
    return out;
}

}  // namespace kleinian::catalog
