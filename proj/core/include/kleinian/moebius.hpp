#pragma once

#include <string>
#include <string_view>

#include "kleinian/field.hpp"

namespace kleinian {

// A point of the boundary sphere C u {inf}, restricted to K u {inf}.
class ProjPoint {
public:
    ProjPoint() = default;  // the point 0
    ProjPoint(FieldElement v) : value_(std::move(v)) {}  // NOLINT
    static ProjPoint infinity() {
        ProjPoint p;
        p.infinite_ = true;
        return p;
    }

    bool is_infinity() const { return infinite_; }
    const FieldElement& value() const;  // throws DomainError at infinity

    bool operator==(const ProjPoint& o) const {
        if (infinite_ != o.infinite_) return false;
        return infinite_ || value_ == o.value_;
    }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    std::string str() const;                            // "inf" or the element form
    static ProjPoint parse(std::string_view text);      // throws ParseError

private:
    bool infinite_ = false;
    FieldElement value_;
};

// 2x2 matrix over K with nonzero determinant. Construction rejects det = 0.
// Values are immutable; all operations are exact.
class Matrix {
public:
    Matrix(FieldElement a, FieldElement b, FieldElement c, FieldElement d);
    static Matrix identity();

    const FieldElement& a() const { return a_; }
    const FieldElement& b() const { return b_; }
    const FieldElement& c() const { return c_; }
    const FieldElement& d() const { return d_; }

    FieldElement det() const { return a_ * d_ - b_ * c_; }
    FieldElement trace() const { return a_ + d_; }
    bool is_unimodular() const { return det() == FieldElement(1); }
    bool is_scalar() const { return b_.is_zero() && c_.is_zero() && a_ == d_; }

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix inverse() const;            // adjugate / det
    Matrix pow(long e) const;          // negative exponents via inverse
    Matrix complex_conjugate() const;  // entrywise, the "bar" operation

    // Trace/det-preserving conjugation g * this * g^-1, computed through the
    // adjugate with one exact division by det(g).
    Matrix conjugated_by(const Matrix& g) const;

    // Parabolic iff trace^2 = 4 det and the matrix is not scalar.
    bool is_parabolic() const;
    // The unique fixed point of a parabolic: (a - d)/(2c), or inf when c = 0.
    // Throws DomainError when not parabolic.
    ProjPoint parabolic_fixed_point() const;

    // Moebius action z -> (az + b)/(cz + d), with the usual inf conventions.
    ProjPoint apply(const ProjPoint& p) const;

    std::string str() const;  // "[[a, b], [c, d]]" with canonical element forms

    // JSON object {"a": <element>, "b": ..., "c": ..., "d": ...}.
    std::string json() const;
    static Matrix from_json(std::string_view text);

private:
    Matrix() = default;  // used by identity()
    FieldElement a_, b_, c_, d_;
};

// True iff m1 = k * m2 for some nonzero k in K. For unimodular inputs this is
// exactly m1 = +-m2, i.e. equality in PSL2.
bool eq_projective(const Matrix& m1, const Matrix& m2);

}  // namespace kleinian
