#include "kleinian/field.hpp"

#include <cctype>
#include <cmath>

#include "kleinian/errors.hpp"
#include "json_detail.hpp"

namespace kleinian {

std::string rational_str(const Rational& q) {
    Integer num = numerator(q);
    Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    if (!all_digits(num)) throw ParseError("bad rational '" + std::string(text) + "'", 0);
    Integer n{std::string(num)};
    Integer d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(den)) throw ParseError("bad rational '" + std::string(text) + "'", slash + 1);
        d = Integer{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
    }
    Rational q{n, d};
    return negative ? Rational(-q) : q;
}

Subfield compositum(Subfield a, Subfield b) {
    if (a == b) return a;
    if (a == Subfield::Q) return b;
    if (b == Subfield::Q) return a;
    // two distinct quadratic subfields generate everything
    return Subfield::Q_i_sqrt2;
}

std::string subfield_str(Subfield f) {
    switch (f) {
        case Subfield::Q: return "Q";
        case Subfield::Q_i: return "Q(i)";
        case Subfield::Q_sqrt2: return "Q(sqrt2)";
        case Subfield::Q_isqrt2: return "Q(i*sqrt2)";
        case Subfield::Q_i_sqrt2: return "Q(i,sqrt2)";
    }
    return "?";
}

bool FieldElement::is_in(Subfield f) const {
    switch (f) {
        case Subfield::Q: return ci_ == 0 && cs_ == 0 && cis_ == 0;
        case Subfield::Q_i: return cs_ == 0 && cis_ == 0;
        case Subfield::Q_sqrt2: return ci_ == 0 && cis_ == 0;
        case Subfield::Q_isqrt2: return ci_ == 0 && cs_ == 0;
        case Subfield::Q_i_sqrt2: return true;
    }
    return false;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return {c1_ + o.c1_, ci_ + o.ci_, cs_ + o.cs_, cis_ + o.cis_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return {c1_ - o.c1_, ci_ - o.ci_, cs_ - o.cs_, cis_ - o.cis_};
}

// Basis products: i^2 = -1, sqrt2^2 = 2, (i sqrt2)^2 = -2, i*sqrt2 = isqrt2,
// i*isqrt2 = -sqrt2, sqrt2*isqrt2 = 2i.
FieldElement FieldElement::operator*(const FieldElement& o) const {
    const Rational &a1 = c1_, &a2 = ci_, &a3 = cs_, &a4 = cis_;
    const Rational &b1 = o.c1_, &b2 = o.ci_, &b3 = o.cs_, &b4 = o.cis_;
    return {a1 * b1 - a2 * b2 + 2 * (a3 * b3 - a4 * b4),
            a1 * b2 + a2 * b1 + 2 * (a3 * b4 + a4 * b3),
            a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2,
            a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2};
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(i,sqrt2)");
    // u = a * a^(sqrt2 -> -sqrt2) lies in Q(i); u * conj(u) is the norm in Q.
    FieldElement s = sqrt2_conjugate();
    FieldElement u = *this * s;
    FieldElement ubar = u.complex_conjugate();
    FieldElement norm = u * ubar;  // rational, nonzero
    Rational n = norm.one_coord();
    FieldElement inv = s * ubar;
    return {inv.c1_ / n, inv.ci_ / n, inv.cs_ / n, inv.cis_ / n};
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

int FieldElement::sign_real() const {
    if (!is_real()) throw DomainError("sign of a non-real element");
    const Rational& x = c1_;
    const Rational& y = cs_;
    if (x == 0 && y == 0) return 0;
    if (x >= 0 && y >= 0) return 1;
    if (x <= 0 && y <= 0) return -1;
    // mixed signs: compare x^2 with 2 y^2
    bool x_dominates = x * x > 2 * y * y;
    if (x > 0) return x_dominates ? 1 : -1;  // y < 0
    return x_dominates ? -1 : 1;             // x < 0, y > 0
}

std::complex<double> FieldElement::approx() const {
    const double s2 = std::sqrt(2.0);
    auto d = [](const Rational& q) { return q.convert_to<double>(); };
    return {d(c1_) + s2 * d(cs_), d(ci_) + s2 * d(cis_)};
}

std::string FieldElement::str() const {
    return "(" + rational_str(c1_) + " + " + rational_str(ci_) + "*i + " + rational_str(cs_) +
           "*s2 + " + rational_str(cis_) + "*i*s2)";
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(std::string_view token) {
        skip_ws();
        if (text.substr(pos, token.size()) != token)
            throw ParseError("expected '" + std::string(token) + "'", pos);
        pos += token.size();
    }
    Rational rational() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos == start) throw ParseError("expected a rational", pos);
        return parse_rational(text.substr(start, pos - start));
    }
    void end() {
        skip_ws();
        if (pos != text.size()) throw ParseError("trailing input", pos);
    }
};

}  // namespace

FieldElement FieldElement::parse(std::string_view text) {
    Cursor cur{text};
    cur.expect("(");
    Rational c1 = cur.rational();
    cur.expect("+");
    Rational ci = cur.rational();
    cur.expect("*i");
    cur.expect("+");
    Rational cs = cur.rational();
    cur.expect("*s2");
    cur.expect("+");
    Rational cis = cur.rational();
    cur.expect("*i*s2");
    cur.expect(")");
    cur.end();
    return {std::move(c1), std::move(ci), std::move(cs), std::move(cis)};
}

std::string FieldElement::json() const { return detail::element_to_json(*this).dump(); }

FieldElement FieldElement::from_json(std::string_view text) {
    return detail::element_from_json(detail::parse_json(text));
}

Subfield subfield_of(const FieldElement& a) {
    if (a.is_in(Subfield::Q)) return Subfield::Q;
    if (a.is_in(Subfield::Q_i)) return Subfield::Q_i;
    if (a.is_in(Subfield::Q_sqrt2)) return Subfield::Q_sqrt2;
    if (a.is_in(Subfield::Q_isqrt2)) return Subfield::Q_isqrt2;
    return Subfield::Q_i_sqrt2;
}

Subfield subfield_generated(const std::vector<FieldElement>& elements) {
    Subfield acc = Subfield::Q;
    for (const auto& a : elements) acc = compositum(acc, subfield_of(a));
    return acc;
}

}  // namespace kleinian
