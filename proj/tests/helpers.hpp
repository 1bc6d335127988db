#pragma once

#include <random>

#include "kleinian/field.hpp"
#include "kleinian/moebius.hpp"

namespace kleinian::testing {

inline FieldElement fe(int one, int i, int sqrt2, int isqrt2) {
    return {Rational(one), Rational(i), Rational(sqrt2), Rational(isqrt2)};
}

inline Matrix imat(int a, int b, int c, int d) {
    return Matrix(FieldElement(a), FieldElement(b), FieldElement(c), FieldElement(d));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed = 987654321) : gen(seed) {}

    Rational rational(int span = 9) {
        std::uniform_int_distribution<int> num(-span, span);
        std::uniform_int_distribution<int> den(1, span);
        return {num(gen), den(gen)};
    }
    FieldElement element() {
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
    Matrix parabolic() {
        FieldElement t = nonzero_element();
        Matrix shear(FieldElement(1), t, FieldElement(0), FieldElement(1));
        return shear.conjugated_by(invertible());
    }
    // random Z-combination of 1, zeta8, i, zeta8^3 (a basis of the integers of K)
    FieldElement algebraic_integer() {
        std::uniform_int_distribution<int> z(-4, 4);
        Rational half(1, 2);
        FieldElement zeta{0, 0, half, half};        // (sqrt2 + i sqrt2)/2
        FieldElement zeta3{0, 0, -half, half};      // (-sqrt2 + i sqrt2)/2
        return FieldElement(z(gen)) + FieldElement(z(gen)) * zeta +
               FieldElement(0, z(gen), 0, 0) + FieldElement(z(gen)) * zeta3;
    }
};

}  // namespace kleinian::testing
