#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "kleinian/rational.hpp"

namespace kleinian {

// The five subfields of K = Q(i, sqrt2). K/Q is Galois with group (Z/2)^2, so
// the subfield lattice is Q at the bottom, the three quadratic fields in the
// middle, and K on top.
enum class Subfield { Q, Q_i, Q_sqrt2, Q_isqrt2, Q_i_sqrt2 };

// Join in the subfield lattice (the compositum).
Subfield compositum(Subfield a, Subfield b);

// "Q", "Q(i)", "Q(sqrt2)", "Q(i*sqrt2)", "Q(i,sqrt2)".
std::string subfield_str(Subfield f);

// An element of K = Q(i, sqrt2), stored as exact coordinates on the ordered
// basis {1, i, sqrt2, i*sqrt2}. The representation is unique, so operator==
// is exact equality in K.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(Rational one) : c1_(std::move(one)) {}  // NOLINT: implicit Q -> K
    FieldElement(int one) : c1_(one) {}                  // NOLINT
    FieldElement(Rational one, Rational i, Rational sqrt2, Rational isqrt2)
        : c1_(std::move(one)), ci_(std::move(i)), cs_(std::move(sqrt2)), cis_(std::move(isqrt2)) {}

    static FieldElement unit_i() { return {0, 1, 0, 0}; }
    static FieldElement unit_sqrt2() { return {0, 0, 1, 0}; }
    static FieldElement unit_isqrt2() { return {0, 0, 0, 1}; }

    const Rational& one_coord() const { return c1_; }
    const Rational& i_coord() const { return ci_; }
    const Rational& sqrt2_coord() const { return cs_; }
    const Rational& isqrt2_coord() const { return cis_; }

    bool is_zero() const { return c1_ == 0 && ci_ == 0 && cs_ == 0 && cis_ == 0; }
    bool is_in(Subfield f) const;
    bool is_rational() const { return is_in(Subfield::Q); }
    // "real" means fixed by complex conjugation, i.e. lies in Q(sqrt2).
    bool is_real() const { return is_in(Subfield::Q_sqrt2); }

    FieldElement operator-() const { return {-c1_, -ci_, -cs_, -cis_}; }
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;  // throws DomainError on o == 0
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    bool operator==(const FieldElement& o) const {
        return c1_ == o.c1_ && ci_ == o.ci_ && cs_ == o.cs_ && cis_ == o.cis_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // The automorphism i -> -i (entrywise complex conjugation downstream).
    FieldElement complex_conjugate() const { return {c1_, -ci_, cs_, -cis_}; }
    // The automorphism sqrt2 -> -sqrt2.
    FieldElement sqrt2_conjugate() const { return {c1_, ci_, -cs_, -cis_}; }

    // Real/imaginary parts as elements of the real subfield Q(sqrt2).
    FieldElement real_part() const { return {c1_, 0, cs_, 0}; }
    FieldElement imag_part() const { return {ci_, 0, cis_, 0}; }

    FieldElement inverse() const;  // throws DomainError on zero

    // Exact sign of a real element (in Q(sqrt2)): -1, 0 or +1.
    // Throws DomainError if the element is not real.
    int sign_real() const;

    // Floating-point approximation, for diagnostics only.
    std::complex<double> approx() const;

    // Canonical form "(a + b*i + c*s2 + d*i*s2)" with reduced rationals.
    std::string str() const;
    static FieldElement parse(std::string_view text);  // throws ParseError

    // JSON object {"one": "...", "i": "...", "sqrt2": "...", "isqrt2": "..."}
    // with coordinates as exact decimal strings. Round-trips exactly.
    std::string json() const;
    static FieldElement from_json(std::string_view text);

private:
    Rational c1_, ci_, cs_, cis_;
};

// Smallest of the five subfields containing the element.
Subfield subfield_of(const FieldElement& a);

// Smallest subfield containing every element of the set (join of the above).
Subfield subfield_generated(const std::vector<FieldElement>& elements);

}  // namespace kleinian
