#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "kleinian/field.hpp"
#include "kleinian/moebius.hpp"

namespace kleinian::geometry {

// A circle or line on the boundary sphere, encoded by the Hermitian form
//   A z z~ + B~ z + B z~ + C = 0
// with A, C in the real subfield Q(sqrt2) and B in K (z~ = complex conjugate).
// Lines are the forms with A = 0. Real (nonempty, nondegenerate) circles have
// |B|^2 - AC > 0; construction enforces this.
class ExtendedCircle {
public:
    ExtendedCircle(FieldElement A, FieldElement B, FieldElement C);

    const FieldElement& A() const { return A_; }
    const FieldElement& B() const { return B_; }
    const FieldElement& C() const { return C_; }

    bool is_line() const { return A_.is_zero(); }
    bool contains(const ProjPoint& p) const;  // inf lies on lines only

    // |B|^2 - AC, a positive element of Q(sqrt2).
    FieldElement discriminant() const;

    // The real line Im z = 0, as (0, i, 0).
    static ExtendedCircle real_line();
    // The horizontal line Im z = y0 for real y0, as (0, i, 2*y0).
    static ExtendedCircle horizontal_line(const FieldElement& y0);
    // |z - center| = radius for real radius > 0.
    static ExtendedCircle circle(const FieldElement& center, const FieldElement& radius);

    std::string str() const;

private:
    FieldElement A_, B_, C_;
};

// Same zero set: proportional by a (necessarily real) nonzero scalar.
bool eq_circle(const ExtendedCircle& c1, const ExtendedCircle& c2);

// Pushforward of the zero set under the Moebius map of m: pull the form back
// by m^-1 (conjugate-transpose congruence, using the K conjugation).
ExtendedCircle image_circle(const Matrix& m, const ExtendedCircle& c);

// With D_i = |B_i|^2 - A_i C_i and Delta = 2 Re(B1 conj(B2)) - A1 C2 - A2 C1:
// orthogonal iff Delta = 0, tangent iff Delta^2 = 4 D1 D2. Exact in Q(sqrt2).
enum class InversivePosition { Orthogonal, Tangent, Other };
InversivePosition inversive_test(const ExtendedCircle& c1, const ExtendedCircle& c2);

// Checked description of one ideal polyhedron: labeled internal carriers,
// labeled ideal vertices with their carrier incidences, the truncation
// circles with the internal carriers each meets at right angles, and the
// face pairings with their vertex correspondences.
struct PolyhedronData {
    struct Truncation {
        std::string label;
        ExtendedCircle circle;
        std::vector<std::string> carriers;
    };
    struct Pairing {
        std::string ns;        // namespace name for the map word
        std::string map_word;  // e.g. "r"
        std::string source;    // carrier labels
        std::string target;
        std::vector<std::pair<std::string, std::string>> vertex_map;
    };

    std::string name;
    bool derived = false;  // carrier equations reconstructed, not printed data
    std::vector<std::pair<std::string, ExtendedCircle>> carriers;
    std::vector<std::pair<std::string, ProjPoint>> vertices;
    std::vector<std::pair<std::string, std::vector<std::string>>> incidence;
    std::vector<Truncation> truncations;
    std::vector<Pairing> pairings;

    const ExtendedCircle& carrier(const std::string& label) const;
    const ProjPoint& vertex(const std::string& label) const;
};

PolyhedronData parse_polyhedron_json(std::string_view text);  // throws ParseError

// The two shipped configurations (embedded copies of data/*.json).
const PolyhedronData& octahedron_config();
const PolyhedronData& cuboctahedron_config();

struct CheckResult {
    std::string id;
    bool pass;
    std::string details;
};

// Resolves a pairing's (namespace, word) to a matrix; supplied by the caller
// so this module stays independent of the catalog.
using MapResolver = std::function<Matrix(const std::string& ns, const std::string& word)>;

// Exact verification: every listed vertex lies on its carriers, carriers
// sharing a vertex are tangent there, every truncation circle is orthogonal
// to its listed carriers, and every pairing maps the source carrier onto the
// target carrier realizing the stated vertex correspondences. Each failed
// check is itemized.
std::vector<CheckResult> verify_polyhedron(const PolyhedronData& data, const MapResolver& resolve);

}  // namespace kleinian::geometry
