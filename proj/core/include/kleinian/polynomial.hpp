#pragma once

#include <string>
#include <vector>

#include "kleinian/field.hpp"
#include "kleinian/rational.hpp"

namespace kleinian {

// Primitive integer polynomial (content 1, positive leading coefficient),
// coefficients in ascending degree order. Produced as a minimal polynomial it
// is irreducible over Q with degree 1, 2 or 4.
struct IntPolynomial {
    std::vector<Integer> coeffs;  // coeffs[k] multiplies x^k; never empty, lead != 0

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }

    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    // E.g. "25x^4 - 60x^3 - 106x^2 + 836x + 13673".
    std::string str() const;
};

// Exact evaluation of p at a point of K.
FieldElement evaluate(const IntPolynomial& p, const FieldElement& a);

// The minimal polynomial of a over Q, found as the first linear dependence
// among 1, a, a^2, a^3, a^4 and then cleared to a primitive integer polynomial
// with positive leading coefficient.
IntPolynomial minimal_polynomial(const FieldElement& a);

// True iff the minimal polynomial is monic.
bool is_algebraic_integer(const FieldElement& a);

}  // namespace kleinian
