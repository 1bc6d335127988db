#include <doctest.h>

#include <array>

#include "helpers.hpp"
#include "kleinian/polynomial.hpp"

using namespace kleinian;
using kleinian::testing::fe;

namespace {

// Independent oracle: expand prod (x - tau(a)) over the four automorphism
// images of a. The result has rational coefficients; when a has degree 4 it
// is the minimal polynomial.
std::array<FieldElement, 5> galois_product(const FieldElement& a) {
    std::array<FieldElement, 4> roots = {a, a.complex_conjugate(), a.sqrt2_conjugate(),
                                         a.complex_conjugate().sqrt2_conjugate()};
    std::array<FieldElement, 5> coeffs{};  // poly = sum coeffs[k] x^k, start with 1
    coeffs[0] = FieldElement(1);
    int deg = 0;
    for (const FieldElement& r : roots) {
        // multiply by (x - r)
        std::array<FieldElement, 5> next{};
        for (int k = 0; k <= deg; ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= r * coeffs[k];
        }
        coeffs = next;
        ++deg;
    }
    return coeffs;
}

}  // namespace

TEST_CASE("minimal polynomial of simple elements") {
    IntPolynomial p = minimal_polynomial(FieldElement::unit_i());
    CHECK(p.coeffs == std::vector<Integer>{1, 0, 1});  // x^2 + 1
    CHECK(p.str() == "x^2 + 1");

    CHECK(minimal_polynomial(FieldElement(Rational(3, 2))).coeffs ==
          std::vector<Integer>{-3, 2});  // 2x - 3
    CHECK(minimal_polynomial(FieldElement::unit_isqrt2()).coeffs ==
          std::vector<Integer>{2, 0, 1});  // x^2 + 2
}

TEST_CASE("degree-4 element against the Galois-product oracle") {
    FieldElement a = fe(0, 1, 1, 0);  // i + sqrt2
    auto oracle = galois_product(a);
    // the oracle coefficients are rational: x^4 - 2x^2 + 9
    std::array<int, 5> expected = {9, 0, -2, 0, 1};
    for (int k = 0; k <= 4; ++k) {
        CHECK(subfield_of(oracle[k]) == Subfield::Q);
        CHECK(oracle[k] == FieldElement(expected[k]));
    }
    IntPolynomial p = minimal_polynomial(a);
    CHECK(p.coeffs == std::vector<Integer>{9, 0, -2, 0, 1});
    CHECK(p.is_monic());
}

TEST_CASE("half-integer elements are not algebraic integers") {
    FieldElement a{Rational(1, 2), Rational(1, 2), 0, 0};  // (1+i)/2
    IntPolynomial p = minimal_polynomial(a);
    CHECK(p.coeffs == std::vector<Integer>{1, -2, 2});  // 2x^2 - 2x + 1
    CHECK_FALSE(p.is_monic());
    CHECK_FALSE(is_algebraic_integer(a));
}

TEST_CASE("eighth roots of unity are algebraic integers with fractional coordinates") {
    FieldElement zeta{0, 0, Rational(1, 2), Rational(1, 2)};  // (sqrt2 + i sqrt2)/2
    CHECK(is_algebraic_integer(zeta));
    CHECK(minimal_polynomial(zeta).coeffs == std::vector<Integer>{1, 0, 0, 0, 1});  // x^4 + 1
}

TEST_CASE("minimal polynomial vanishes and has degree 1, 2 or 4") {
    kleinian::testing::Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        FieldElement a = rng.element();
        IntPolynomial p = minimal_polynomial(a);
        CHECK(evaluate(p, a).is_zero());
        int d = p.degree();
        CHECK((d == 1 || d == 2 || d == 4));
        CHECK(p.coeffs.back() > 0);
    }
}

TEST_CASE("algebraic integers are closed under addition and multiplication") {
    kleinian::testing::Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        FieldElement a = rng.algebraic_integer();
        FieldElement b = rng.algebraic_integer();
        CHECK(is_algebraic_integer(a));
        CHECK(is_algebraic_integer(a + b));
        CHECK(is_algebraic_integer(a * b));
    }
}
