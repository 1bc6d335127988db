#include "kleinian/moebius.hpp"

#include <cctype>

#include "kleinian/errors.hpp"
#include "json_detail.hpp"

namespace kleinian {

const FieldElement& ProjPoint::value() const {
    if (infinite_) throw DomainError("the point at infinity has no finite value");
    return value_;
}

std::string ProjPoint::str() const { return infinite_ ? "inf" : value_.str(); }

ProjPoint ProjPoint::parse(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view body = text.substr(b, e - b);
    if (body == "inf") return infinity();
    return ProjPoint(FieldElement::parse(body));
}

Matrix::Matrix(FieldElement a, FieldElement b, FieldElement c, FieldElement d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (det().is_zero()) throw DomainError("singular matrix");
}

Matrix Matrix::identity() {
    Matrix m;
    m.a_ = FieldElement(1);
    m.d_ = FieldElement(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    Matrix r;
    r.a_ = a_ * o.a_ + b_ * o.c_;
    r.b_ = a_ * o.b_ + b_ * o.d_;
    r.c_ = c_ * o.a_ + d_ * o.c_;
    r.d_ = c_ * o.b_ + d_ * o.d_;
    return r;
}

Matrix Matrix::inverse() const {
    FieldElement dt = det();
    Matrix r;
    r.a_ = d_ / dt;
    r.b_ = -b_ / dt;
    r.c_ = -c_ / dt;
    r.d_ = a_ / dt;
    return r;
}

Matrix Matrix::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Matrix acc = identity();
    Matrix base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Matrix Matrix::complex_conjugate() const {
    Matrix r;
    r.a_ = a_.complex_conjugate();
    r.b_ = b_.complex_conjugate();
    r.c_ = c_.complex_conjugate();
    r.d_ = d_.complex_conjugate();
    return r;
}

Matrix Matrix::conjugated_by(const Matrix& g) const { return g * *this * g.inverse(); }

bool Matrix::is_parabolic() const {
    FieldElement tr = trace();
    return tr * tr == FieldElement(4) * det() && !is_scalar();
}

ProjPoint Matrix::parabolic_fixed_point() const {
    if (!is_parabolic()) throw DomainError("fixed point requested for a non-parabolic matrix");
    if (c_.is_zero()) return ProjPoint::infinity();
    return ProjPoint((a_ - d_) / (FieldElement(2) * c_));
}

ProjPoint Matrix::apply(const ProjPoint& p) const {
    if (p.is_infinity()) {
        if (c_.is_zero()) return ProjPoint::infinity();
        return ProjPoint(a_ / c_);
    }
    const FieldElement& z = p.value();
    FieldElement den = c_ * z + d_;
    if (den.is_zero()) return ProjPoint::infinity();
    return ProjPoint((a_ * z + b_) / den);
}

std::string Matrix::str() const {
    return "[[" + a_.str() + ", " + b_.str() + "], [" + c_.str() + ", " + d_.str() + "]]";
}

std::string Matrix::json() const { return detail::matrix_to_json(*this).dump(); }

Matrix Matrix::from_json(std::string_view text) {
    return detail::matrix_from_json(detail::parse_json(text));
}

bool eq_projective(const Matrix& m1, const Matrix& m2) {
    const FieldElement u[4] = {m1.a(), m1.b(), m1.c(), m1.d()};
    const FieldElement v[4] = {m2.a(), m2.b(), m2.c(), m2.d()};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return true;
}

}  // namespace kleinian
