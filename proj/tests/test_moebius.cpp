#include <doctest.h>

#include "helpers.hpp"
#include "kleinian/catalog.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/moebius.hpp"

using namespace kleinian;
using kleinian::testing::fe;
using kleinian::testing::imat;

TEST_CASE("construction rejects singular matrices") {
    CHECK_THROWS_AS(imat(1, 2, 2, 4), DomainError);
    CHECK_NOTHROW(imat(1, 2, 2, 5));
}

TEST_CASE("trace and determinant of the catalog generators") {
    const Namespace& ns = catalog::links_namespace();
    CHECK(ns.lookup("s").trace() == fe(1, 1, 0, 0));
    CHECK(ns.lookup("h").trace() == fe(0, 0, 0, -1));
    CHECK(ns.lookup("r").det() == FieldElement(1));
    Matrix r = ns.lookup("r");
    CHECK(r * r.inverse() == Matrix::identity());
}

TEST_CASE("projective equality") {
    Matrix m = imat(2, 3, 1, 4);
    Matrix neg = imat(-2, -3, -1, -4);
    CHECK(eq_projective(m, neg));
    Matrix scaled(fe(0, 2, 0, 0) * m.a(), fe(0, 2, 0, 0) * m.b(), fe(0, 2, 0, 0) * m.c(),
                  fe(0, 2, 0, 0) * m.d());
    CHECK(eq_projective(m, scaled));
    const Namespace& ns = catalog::links_namespace();
    CHECK(eq_projective(ns.lookup("p2"), imat(-1, 5, 0, -1)));
    CHECK_FALSE(eq_projective(ns.lookup("r"), ns.lookup("s")));
}

TEST_CASE("eq_projective is an equivalence relation on random samples") {
    kleinian::testing::Rng rng(23);
    for (int k = 0; k < 300; ++k) {
        Matrix a = rng.invertible();
        FieldElement lam = rng.nonzero_element();
        Matrix b(lam * a.a(), lam * a.b(), lam * a.c(), lam * a.d());
        Matrix c = rng.invertible();
        CHECK(eq_projective(a, a));
        CHECK(eq_projective(a, b));
        CHECK(eq_projective(b, a));
        if (eq_projective(a, c)) CHECK(eq_projective(b, c));  // transitivity through the scaling
    }
}

TEST_CASE("parabolic classification and fixed points") {
    const Namespace& ns = catalog::links_namespace();
    Matrix p3 = ns.lookup("p3");
    CHECK(p3.is_parabolic());
    CHECK(p3.parabolic_fixed_point() == ProjPoint(FieldElement(Rational(5, 3))));
    CHECK(ns.lookup("p2").parabolic_fixed_point() == ProjPoint::infinity());
    CHECK(ns.lookup("p1").parabolic_fixed_point() == ProjPoint(FieldElement(0)));

    const Namespace& oc = catalog::onecusped_namespace();
    CHECK(evaluate_word("x^-2*z*y*x", oc).parabolic_fixed_point() ==
          ProjPoint(FieldElement(Rational(1, 2))));

    CHECK_FALSE(Matrix::identity().is_parabolic());  // scalar is excluded
    CHECK_FALSE(ns.lookup("s").is_parabolic());
    CHECK_THROWS_AS(ns.lookup("s").parabolic_fixed_point(), DomainError);
}

TEST_CASE("parabolic fixed points are genuinely fixed") {
    kleinian::testing::Rng rng(29);
    for (int k = 0; k < 300; ++k) {
        Matrix p = rng.parabolic();
        if (p.is_scalar()) continue;  // conjugated identity shear can collapse
        REQUIRE(p.is_parabolic());
        ProjPoint fp = p.parabolic_fixed_point();
        CHECK(p.apply(fp) == fp);
    }
}

TEST_CASE("moebius action") {
    const Namespace& ns = catalog::links_namespace();
    Matrix c = ns.lookup("c");
    CHECK(c.apply(ProjPoint(fe(0, 0, 0, -1))) == ProjPoint(FieldElement(0)));
    CHECK(Matrix::identity().apply(ProjPoint(FieldElement(7))) == ProjPoint(FieldElement(7)));
    Matrix r = ns.lookup("r");
    CHECK(r.apply(ProjPoint::infinity()) == ProjPoint(FieldElement(-1)));
    CHECK(r.apply(ProjPoint(FieldElement(1))) == ProjPoint::infinity());
}

TEST_CASE("conjugation preserves trace and composes contravariantly") {
    kleinian::testing::Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        Matrix x = rng.unimodular();
        Matrix g = rng.invertible();
        Matrix h = rng.invertible();
        CHECK(x.conjugated_by(g).trace() == x.trace());
        CHECK(x.conjugated_by(g * h) == x.conjugated_by(h).conjugated_by(g));
        CHECK((x.conjugated_by(g) * x.conjugated_by(g)).det() == FieldElement(1));
    }
}

TEST_CASE("determinant is multiplicative") {
    kleinian::testing::Rng rng(37);
    for (int k = 0; k < 200; ++k) {
        Matrix a = rng.invertible();
        Matrix b = rng.invertible();
        CHECK((a * b).det() == a.det() * b.det());
    }
}

TEST_CASE("powers") {
    const Namespace& ns = catalog::links_namespace();
    Matrix c = ns.lookup("c");
    CHECK(c.pow(0) == Matrix::identity());
    CHECK(c.pow(3) == c * c * c);
    CHECK(c.pow(-2) == (c * c).inverse());
}

TEST_CASE("matrix json round-trip") {
    const Namespace& ns = catalog::links_namespace();
    Matrix g = ns.lookup("g");
    CHECK(Matrix::from_json(g.json()) == g);
}

TEST_CASE("projpoint parsing") {
    CHECK(ProjPoint::parse("inf") == ProjPoint::infinity());
    CHECK(ProjPoint::parse("(1/2 + 0*i + 0*s2 + 0*i*s2)") ==
          ProjPoint(FieldElement(Rational(1, 2))));
    CHECK_THROWS_AS(ProjPoint::parse("oo"), ParseError);
}
