#include "kleinian/invariants.hpp"

#include <algorithm>
#include <cctype>

#include "kleinian/errors.hpp"
#include "json_detail.hpp"

namespace kleinian::invariants {

namespace {

constexpr Subfield kTop = Subfield::Q_i_sqrt2;

void require_unimodular(const catalog::GroupSpec& spec) {
    for (const auto& [label, m] : spec.generators)
        if (!m.is_unimodular())
            throw DomainError("generator '" + label + "' of " + spec.name + " is not unimodular");
}

// Depth-first over nonempty subsets in index order; stops once the subfield
// lattice saturates (the join can only grow, so the result is unchanged).
bool subset_trace_walk(const std::vector<Matrix>& gens, std::size_t from, const Matrix* prefix,
                       Subfield& acc) {
    for (std::size_t j = from; j < gens.size(); ++j) {
        Matrix prod = prefix ? *prefix * gens[j] : gens[j];
        acc = compositum(acc, subfield_of(prod.trace()));
        if (acc == kTop) return true;
        if (subset_trace_walk(gens, j + 1, &prod, acc)) return true;
    }
    return false;
}

}  // namespace

Subfield trace_field(const catalog::GroupSpec& spec) {
    require_unimodular(spec);
    std::vector<Matrix> gens;
    gens.reserve(spec.generators.size());
    for (const auto& [label, m] : spec.generators) gens.push_back(m);
    Subfield acc = Subfield::Q;
    subset_trace_walk(gens, 0, nullptr, acc);
    return acc;
}

namespace {

bool square_trace_walk(const std::vector<Matrix>& letters, int depth, const Matrix* prefix,
                       Subfield& acc) {
    for (const Matrix& letter : letters) {
        Matrix w = prefix ? *prefix * letter : letter;
        // tr(w^2) = tr(w)^2 - 2 det(w), by Cayley-Hamilton
        FieldElement t = w.trace();
        acc = compositum(acc, subfield_of(t * t - FieldElement(2) * w.det()));
        if (acc == kTop) return true;
        if (depth > 1 && square_trace_walk(letters, depth - 1, &w, acc)) return true;
    }
    return false;
}

}  // namespace

Subfield invariant_trace_field_lower(const catalog::GroupSpec& spec, int radius) {
    if (radius < 1) throw DomainError("radius must be >= 1");
    std::vector<Matrix> letters;
    letters.reserve(2 * spec.generators.size());
    for (const auto& [label, m] : spec.generators) {
        letters.push_back(m);
        letters.push_back(m.inverse());
    }
    Subfield acc = Subfield::Q;
    square_trace_walk(letters, radius, nullptr, acc);
    return acc;
}

namespace {

// Integer coordinates are a cheap sufficient condition (Z-combination of the
// algebraic integers 1, i, sqrt2, i sqrt2); fall back to the minimal
// polynomial otherwise.
bool trace_is_integral(const FieldElement& t) {
    if (denominator(t.one_coord()) == 1 && denominator(t.i_coord()) == 1 &&
        denominator(t.sqrt2_coord()) == 1 && denominator(t.isqrt2_coord()) == 1)
        return true;
    return is_algebraic_integer(t);
}

struct Letter {
    Matrix matrix;
    std::string label;
};

bool witness_walk(const std::vector<Letter>& letters, int depth, const Matrix* prefix,
                  const std::string& word_prefix, IntegralityResult& out) {
    for (const Letter& letter : letters) {
        Matrix w = prefix ? *prefix * letter.matrix : letter.matrix;
        std::string word = word_prefix.empty() ? letter.label : word_prefix + "*" + letter.label;
        FieldElement t = w.trace();
        if (!trace_is_integral(t)) {
            out.kind = IntegralityResult::Kind::Witness;
            out.word = word;
            out.trace = t;
            out.minpoly = minimal_polynomial(t);
            return true;
        }
        if (depth > 1 && witness_walk(letters, depth - 1, &w, word, out)) return true;
    }
    return false;
}

std::string power_label(const std::string& label) {
    // keep labels parseable: plain names get "^-1", composite words get (...)^-1
    bool simple = !label.empty() && std::all_of(label.begin(), label.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
    return simple ? label + "^-1" : "(" + label + ")^-1";
}

}  // namespace

IntegralityResult integral_traces(const catalog::GroupSpec& spec, int radius) {
    if (radius < 1) throw DomainError("radius must be >= 1");
    IntegralityResult res;
    res.radius = radius;

    bool integral_entries = true;
    for (const auto& [label, m] : spec.generators) {
        for (const FieldElement* e : {&m.a(), &m.b(), &m.c(), &m.d()}) {
            if (!trace_is_integral(*e)) {
                integral_entries = false;
                break;
            }
        }
        if (!integral_entries) break;
    }
    if (integral_entries) {
        res.kind = IntegralityResult::Kind::Certificate;
        return res;
    }

    std::vector<Letter> letters;
    for (const auto& [label, m] : spec.generators) {
        letters.push_back({m, label});
        letters.push_back({m.inverse(), power_label(label)});
    }
    if (witness_walk(letters, radius, nullptr, "", res)) return res;
    res.kind = IntegralityResult::Kind::Inconclusive;
    return res;
}

std::string IntegralityResult::witness_json() const {
    detail::Json j;
    j["word"] = word;
    j["trace"] = trace.str();
    detail::Json coeffs = detail::Json::array();
    for (const Integer& c : minpoly.coeffs) coeffs.push_back(c.str());
    j["minpoly"] = coeffs;
    return j.dump();
}

namespace {

// Translation length of a parabolic fixing infinity: upper triangular with
// equal diagonal, translation b/a.
FieldElement translation_at_infinity(const Matrix& m, const char* who) {
    if (!m.c().is_zero() || m.a() != m.d())
        throw DomainError(std::string(who) + ": normalization did not fix infinity");
    return m.b() / m.a();
}

}  // namespace

ModulusClass cusp_modulus(const Matrix& alpha, const Matrix& beta) {
    if (!alpha.is_parabolic()) throw DomainError("cusp_modulus: alpha is not parabolic");
    if (!beta.is_parabolic()) throw DomainError("cusp_modulus: beta is not parabolic");
    if (!eq_projective(alpha * beta, beta * alpha))
        throw DomainError("cusp_modulus: inputs do not commute");
    ProjPoint p = alpha.parabolic_fixed_point();
    if (p != beta.parabolic_fixed_point())
        throw DomainError("cusp_modulus: inputs fix different points");

    Matrix n = p.is_infinity()
                   ? Matrix::identity()
                   : Matrix(FieldElement(0), FieldElement(1), FieldElement(1), -p.value());
    FieldElement ta = translation_at_infinity(alpha.conjugated_by(n), "alpha");
    FieldElement tb = translation_at_infinity(beta.conjugated_by(n), "beta");
    return ModulusClass{ProjPoint(tb / ta)};
}

namespace {

using Row = std::vector<Rational>;

// Kernel basis of a rational matrix (rows of equal width).
std::vector<Row> rational_kernel(std::vector<Row> m, std::size_t width) {
    std::vector<int> pivot_of_col(width, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < width && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        Rational inv = m[rank][col];
        for (std::size_t j = 0; j < width; ++j) m[rank][j] /= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < width; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_of_col[col] = static_cast<int>(rank);
        ++rank;
    }
    std::vector<Row> basis;
    for (std::size_t col = 0; col < width; ++col) {
        if (pivot_of_col[col] != -1) continue;
        Row v(width, Rational(0));
        v[col] = 1;
        for (std::size_t pc = 0; pc < width; ++pc)
            if (pivot_of_col[pc] != -1)
                v[pc] = -m[static_cast<std::size_t>(pivot_of_col[pc])][col];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool form_nonzero(const Row& v) { return v[0] * v[3] - v[1] * v[2] != 0; }

bool is_rational_point(const ProjPoint& p) {
    return p.is_infinity() || subfield_of(p.value()) == Subfield::Q;
}

}  // namespace

bool moduli_equivalent(const ProjPoint& z, const ProjPoint& w) {
    bool zr = is_rational_point(z), wr = is_rational_point(w);
    if (zr || wr) return zr && wr;  // Q u {inf} is a single orbit

    // Unknowns (a, b, c, d): the relation w(cz + d) = az + b becomes
    // c*(zw) + d*w - a*z - b = 0, read off on the basis {1, i, sqrt2, i sqrt2}.
    const FieldElement& zv = z.value();
    const FieldElement& wv = w.value();
    FieldElement zw = zv * wv;
    auto coords = [](const FieldElement& e) {
        return Row{e.one_coord(), e.i_coord(), e.sqrt2_coord(), e.isqrt2_coord()};
    };
    Row zc = coords(zv), wc = coords(wv), zwc = coords(zw);
    std::vector<Row> rows;
    for (int t = 0; t < 4; ++t)
        rows.push_back(Row{-zc[static_cast<std::size_t>(t)], t == 0 ? Rational(-1) : Rational(0),
                           zwc[static_cast<std::size_t>(t)], wc[static_cast<std::size_t>(t)]});

    std::vector<Row> basis = rational_kernel(std::move(rows), 4);
    // ad - bc is a quadratic form; in characteristic 0 it vanishes on a
    // subspace iff it vanishes on a basis and on all pairwise sums.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (form_nonzero(basis[i])) return true;
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            Row sum(4);
            for (int t = 0; t < 4; ++t)
                sum[static_cast<std::size_t>(t)] =
                    basis[i][static_cast<std::size_t>(t)] + basis[j][static_cast<std::size_t>(t)];
            if (form_nonzero(sum)) return true;
        }
    }
    return false;
}

Presentation2 homology_presentation(int n) {
    if (n < 1) throw DomainError("homology requires n >= 1");
    Presentation2 pres;
    const int cols = 3 * n + 4;
    auto xi = [](int i) { return 3 * (i - 1); };
    auto yi = [](int i) { return 3 * (i - 1) + 1; };
    auto zi = [](int i) { return 3 * (i - 1) + 2; };
    const int an = 3 * n, bn = 3 * n + 1, a0 = 3 * n + 2, b0 = 3 * n + 3;

    for (int i = 1; i <= n; ++i) {
        pres.generators.push_back("x" + std::to_string(i));
        pres.generators.push_back("y" + std::to_string(i));
        pres.generators.push_back("z" + std::to_string(i));
    }
    pres.generators.insert(pres.generators.end(), {"an", "bn", "a0", "b0"});

    auto add_row = [&](std::initializer_list<int> ones) {
        std::vector<int> row(static_cast<std::size_t>(cols), 0);
        for (int c : ones) row[static_cast<std::size_t>(c)] ^= 1;
        pres.relations.push_back(std::move(row));
    };

    // middle relations, three per adjacent pair of blocks:
    //   x_i y_i x_i         = x_{i+1} y_{i+1}^-1 z_{i+1}^-1
    //   y_i z_i x_i^-1      = y_{i+1} z_{i+1} x_{i+1}^-1
    //   x_i^-2 y_i^-1       = z_{i+1}^2 y_{i+1}^-1
    for (int i = 1; i < n; ++i) {
        add_row({yi(i), xi(i + 1), yi(i + 1), zi(i + 1)});
        add_row({xi(i), yi(i), zi(i), xi(i + 1), yi(i + 1), zi(i + 1)});
        add_row({yi(i), yi(i + 1)});
    }
    // cap relations:
    //   a_n b_n a_n    = x_n^-2 y_n^-1        a_0 b_0 a_0    = x_1 y_1^-1 z_1^-1
    //   b_n^2 a_n^-1   = y_n z_n x_n^-1       b_0^2 a_0^-1   = y_1 z_1 x_1^-1
    //   a_n^-2 b_n^-1  = y_n x_n y_n^-1 z_n^-1 y_n^-1        a_0^-2 b_0^-1 = z_1^2 y_1^-1
    add_row({bn, yi(n)});
    add_row({an, xi(n), yi(n), zi(n)});
    add_row({bn, xi(n), yi(n), zi(n)});
    add_row({b0, xi(1), yi(1), zi(1)});
    add_row({a0, xi(1), yi(1), zi(1)});
    add_row({b0, yi(1)});
    return pres;
}

int gf2_rank(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) return 0;
    std::vector<std::vector<int>> m = rows;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][col] == 0) continue;
            for (std::size_t j = col; j < cols; ++j) m[r][j] ^= m[rank][j];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

int homology_mod2(int n) {
    Presentation2 pres = homology_presentation(n);
    return static_cast<int>(pres.generators.size()) - gf2_rank(pres.relations);
}

namespace {

bool entries_integral_mod3_pm_identity(const Matrix& m) {
    auto residue = [](const FieldElement& e, int shift) {
        if (subfield_of(e) != Subfield::Q || denominator(e.one_coord()) != 1)
            throw DomainError("mod-3 reduction needs rational integer entries");
        Integer r = (numerator(e.one_coord()) + shift) % 3;
        return r == 0;
    };
    bool plus = residue(m.a(), -1) && residue(m.b(), 0) && residue(m.c(), 0) && residue(m.d(), -1);
    bool minus = residue(m.a(), 1) && residue(m.b(), 0) && residue(m.c(), 0) && residue(m.d(), 1);
    return plus || minus;
}

}  // namespace

bool mod3_congruence_containment() {
    const Namespace& ns = catalog::onecusped_namespace();
    for (const char* name : {"p1", "p2", "p3", "p4"})
        if (!entries_integral_mod3_pm_identity(ns.lookup(name))) return false;
    return true;
}

}  // namespace kleinian::invariants
