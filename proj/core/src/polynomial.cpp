#include "kleinian/polynomial.hpp"

#include <array>

#include "kleinian/errors.hpp"

namespace kleinian {

std::string IntPolynomial::str() const {
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Integer& c = coeffs[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool show_coeff = (mag != 1) || k == 0;
        if (show_coeff) out += mag.str();
        if (k > 0) {
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement evaluate(const IntPolynomial& p, const FieldElement& a) {
    FieldElement acc;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * a + FieldElement(Rational(*it));
    return acc;
}

namespace {

using Coords = std::array<Rational, 4>;

Coords coords_of(const FieldElement& a) {
    return {a.one_coord(), a.i_coord(), a.sqrt2_coord(), a.isqrt2_coord()};
}

// Solve sum_j t_j rows[j] = target over Q, if possible.
bool solve_combination(const std::vector<Coords>& rows, const Coords& target,
                       std::vector<Rational>& out) {
    const std::size_t n = rows.size();
    // augmented system: 4 equations, n unknowns
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(n + 1));
    for (std::size_t eq = 0; eq < 4; ++eq) {
        for (std::size_t j = 0; j < n; ++j) m[eq][j] = rows[j][eq];
        m[eq][n] = target[eq];
    }
    std::vector<int> pivot_col(4, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < 4; ++col) {
        std::size_t sel = rank;
        while (sel < 4 && m[sel][col] == 0) ++sel;
        if (sel == 4) continue;
        std::swap(m[sel], m[rank]);
        Rational inv = m[rank][col];
        for (std::size_t j = col; j <= n; ++j) m[rank][j] /= inv;
        for (std::size_t eq = 0; eq < 4; ++eq) {
            if (eq == rank || m[eq][col] == 0) continue;
            Rational f = m[eq][col];
            for (std::size_t j = col; j <= n; ++j) m[eq][j] -= f * m[rank][j];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (std::size_t eq = rank; eq < 4; ++eq)
        if (m[eq][n] != 0) return false;  // inconsistent
    out.assign(n, Rational(0));
    for (std::size_t r = 0; r < rank; ++r) out[static_cast<std::size_t>(pivot_col[r])] = m[r][n];
    return true;
}

}  // namespace

IntPolynomial minimal_polynomial(const FieldElement& a) {
    std::vector<Coords> powers;
    FieldElement p(1);
    for (int k = 0; k <= 4; ++k) {
        powers.push_back(coords_of(p));
        p = p * a;
    }
    for (int deg = 1; deg <= 4; ++deg) {
        std::vector<Coords> lower(powers.begin(), powers.begin() + deg);
        std::vector<Rational> t;
        if (!solve_combination(lower, powers[static_cast<std::size_t>(deg)], t)) continue;
        // a^deg = sum t_j a^j, so the monic minimal polynomial is
        // x^deg - sum t_j x^j; clear denominators and the content.
        std::vector<Rational> rc(static_cast<std::size_t>(deg) + 1);
        for (int j = 0; j < deg; ++j) rc[static_cast<std::size_t>(j)] = -t[static_cast<std::size_t>(j)];
        rc[static_cast<std::size_t>(deg)] = 1;
        Integer lcm = 1;
        for (const auto& q : rc) lcm = boost::multiprecision::lcm(lcm, denominator(q));
        std::vector<Integer> ic;
        ic.reserve(rc.size());
        for (const auto& q : rc) ic.push_back(numerator(q) * (lcm / denominator(q)));
        Integer content = 0;
        for (const auto& z : ic) content = boost::multiprecision::gcd(content, z);
        if (content > 1)
            for (auto& z : ic) z /= content;
        if (ic.back() < 0)
            for (auto& z : ic) z = -z;
        return IntPolynomial{std::move(ic)};
    }
    throw DomainError("no linear dependence among 1..a^4");  // unreachable in K
}

bool is_algebraic_integer(const FieldElement& a) { return minimal_polynomial(a).is_monic(); }

}  // namespace kleinian
