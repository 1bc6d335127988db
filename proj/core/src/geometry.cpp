#include "kleinian/geometry.hpp"

#include <map>

#include "kleinian/errors.hpp"
#include "json_detail.hpp"

namespace kleinian::geometry {

namespace detail_data {
// generated from data/*.json at configure time
extern const char* octahedron_json;
extern const char* cuboctahedron_json;
}  // namespace detail_data

ExtendedCircle::ExtendedCircle(FieldElement A, FieldElement B, FieldElement C)
    : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)) {
    if (!A_.is_real() || !C_.is_real())
        throw DomainError("circle coefficients A and C must be real");
    if (A_.is_zero() && B_.is_zero() && C_.is_zero())
        throw DomainError("circle form is identically zero");
    if (discriminant().sign_real() <= 0)
        throw DomainError("form has no real circle or line as zero set");
}

FieldElement ExtendedCircle::discriminant() const {
    return B_ * B_.complex_conjugate() - A_ * C_;
}

bool ExtendedCircle::contains(const ProjPoint& p) const {
    if (p.is_infinity()) return A_.is_zero();
    const FieldElement& z = p.value();
    FieldElement v = A_ * z * z.complex_conjugate() + B_.complex_conjugate() * z +
                     B_ * z.complex_conjugate() + C_;
    return v.is_zero();
}

ExtendedCircle ExtendedCircle::real_line() {
    return {FieldElement(0), FieldElement::unit_i(), FieldElement(0)};
}

ExtendedCircle ExtendedCircle::horizontal_line(const FieldElement& y0) {
    // Im z = y0  <=>  -i z + i z~ + 2 y0 = 0, stored with B = i.
    return {FieldElement(0), FieldElement::unit_i(), FieldElement(2) * y0};
}

ExtendedCircle ExtendedCircle::circle(const FieldElement& center, const FieldElement& radius) {
    return {FieldElement(1), -center,
            center * center.complex_conjugate() - radius * radius};
}

std::string ExtendedCircle::str() const {
    return "{A=" + A_.str() + ", B=" + B_.str() + ", C=" + C_.str() + "}";
}

bool eq_circle(const ExtendedCircle& c1, const ExtendedCircle& c2) {
    // proportional by a nonzero real scalar
    const FieldElement u[3] = {c1.A(), c1.B(), c1.C()};
    const FieldElement v[3] = {c2.A(), c2.B(), c2.C()};
    int anchor = -1;
    for (int k = 0; k < 3; ++k) {
        if (!v[k].is_zero()) {
            anchor = k;
            break;
        }
    }
    if (anchor < 0) return false;
    if (u[anchor].is_zero()) return false;
    FieldElement lambda = u[anchor] / v[anchor];
    if (!lambda.is_real()) return false;
    for (int k = 0; k < 3; ++k)
        if (u[k] != lambda * v[k]) return false;
    return true;
}

ExtendedCircle image_circle(const Matrix& m, const ExtendedCircle& c) {
    // Pull back by m^-1. Projectively m^-1 ~ adj(m) = [[d, -b], [-c, a]], so
    // the image form is adj(m)^* H adj(m) with H = [[A, B], [B~, C]].
    FieldElement p11 = m.d(), p12 = -m.b(), p21 = -m.c(), p22 = m.a();
    const FieldElement& A = c.A();
    const FieldElement& B = c.B();
    FieldElement Bc = B.complex_conjugate();
    const FieldElement& C = c.C();

    FieldElement h11 = A * p11 + B * p21;
    FieldElement h12 = A * p12 + B * p22;
    FieldElement h21 = Bc * p11 + C * p21;
    FieldElement h22 = Bc * p12 + C * p22;

    FieldElement A2 = p11.complex_conjugate() * h11 + p21.complex_conjugate() * h21;
    FieldElement B2 = p11.complex_conjugate() * h12 + p21.complex_conjugate() * h22;
    FieldElement C2 = p12.complex_conjugate() * h12 + p22.complex_conjugate() * h22;
    return {std::move(A2), std::move(B2), std::move(C2)};
}

InversivePosition inversive_test(const ExtendedCircle& c1, const ExtendedCircle& c2) {
    FieldElement delta = FieldElement(2) * (c1.B() * c2.B().complex_conjugate()).real_part() -
                         c1.A() * c2.C() - c2.A() * c1.C();
    if (delta.is_zero()) return InversivePosition::Orthogonal;
    if (delta * delta == FieldElement(4) * c1.discriminant() * c2.discriminant())
        return InversivePosition::Tangent;
    return InversivePosition::Other;
}

const ExtendedCircle& PolyhedronData::carrier(const std::string& label) const {
    for (const auto& [l, c] : carriers)
        if (l == label) return c;
    throw DomainError("polyhedron '" + name + "' has no carrier '" + label + "'");
}

const ProjPoint& PolyhedronData::vertex(const std::string& label) const {
    for (const auto& [l, p] : vertices)
        if (l == label) return p;
    throw DomainError("polyhedron '" + name + "' has no vertex '" + label + "'");
}

namespace {

ExtendedCircle circle_from_json(const detail::Json& j) {
    if (!j.is_object()) throw ParseError("circle must be a JSON object", 0);
    auto coeff = [&](const char* key) {
        if (!j.contains(key) || !j.at(key).is_string())
            throw ParseError(std::string("circle missing string coefficient '") + key + "'", 0);
        return FieldElement::parse(j.at(key).get<std::string>());
    };
    return {coeff("A"), coeff("B"), coeff("C")};
}

}  // namespace

PolyhedronData parse_polyhedron_json(std::string_view text) {
    detail::Json j = detail::parse_json(text);
    PolyhedronData data;
    try {
        data.name = j.at("name").get<std::string>();
        data.derived = j.value("derived", false);
        for (const auto& [label, cj] : j.at("carriers").items())
            data.carriers.emplace_back(label, circle_from_json(cj));
        for (const auto& [label, pj] : j.at("vertices").items())
            data.vertices.emplace_back(label, ProjPoint::parse(pj.get<std::string>()));
        for (const auto& [label, lj] : j.at("incidence").items())
            data.incidence.emplace_back(label, lj.get<std::vector<std::string>>());
        for (const auto& tj : j.at("truncations"))
            data.truncations.push_back({tj.at("label").get<std::string>(),
                                        circle_from_json(tj.at("circle")),
                                        tj.at("carriers").get<std::vector<std::string>>()});
        for (const auto& pj : j.at("pairings")) {
            PolyhedronData::Pairing pairing;
            pairing.ns = pj.at("namespace").get<std::string>();
            pairing.map_word = pj.at("map").get<std::string>();
            pairing.source = pj.at("source").get<std::string>();
            pairing.target = pj.at("target").get<std::string>();
            for (const auto& [from, to] : pj.at("vertices").items())
                pairing.vertex_map.emplace_back(from, to.get<std::string>());
            data.pairings.push_back(std::move(pairing));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad polyhedron config: ") + e.what(), 0);
    }
    // structural sanity: every referenced label must resolve
    for (const auto& [carrier, verts] : data.incidence) {
        data.carrier(carrier);
        for (const auto& v : verts) data.vertex(v);
    }
    for (const auto& t : data.truncations)
        for (const auto& carrier : t.carriers) data.carrier(carrier);
    for (const auto& p : data.pairings) {
        data.carrier(p.source);
        data.carrier(p.target);
        for (const auto& [from, to] : p.vertex_map) {
            data.vertex(from);
            data.vertex(to);
        }
    }
    return data;
}

const PolyhedronData& octahedron_config() {
    static const PolyhedronData data = parse_polyhedron_json(detail_data::octahedron_json);
    return data;
}

const PolyhedronData& cuboctahedron_config() {
    static const PolyhedronData data = parse_polyhedron_json(detail_data::cuboctahedron_json);
    return data;
}

std::vector<CheckResult> verify_polyhedron(const PolyhedronData& data, const MapResolver& resolve) {
    std::vector<CheckResult> out;
    const std::string prefix = "geometry." + data.name + ".";
    auto record = [&](const std::string& id, bool pass, const std::string& details) {
        out.push_back({prefix + id, pass, details});
    };

    // (iii) stated ideal vertices lie on their carriers
    for (const auto& [carrier_label, verts] : data.incidence) {
        const ExtendedCircle& carrier = data.carrier(carrier_label);
        for (const auto& vlabel : verts)
            record("incidence." + carrier_label + "." + vlabel,
                   carrier.contains(data.vertex(vlabel)),
                   "vertex " + vlabel + " on carrier " + carrier_label);
    }

    // carriers sharing an ideal vertex must be mutually tangent there
    std::map<std::string, std::vector<std::string>> carriers_of_vertex;
    for (const auto& [carrier_label, verts] : data.incidence)
        for (const auto& vlabel : verts) carriers_of_vertex[vlabel].push_back(carrier_label);
    for (const auto& [vlabel, cs] : carriers_of_vertex)
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j)
                record("tangency." + vlabel + "." + cs[i] + "." + cs[j],
                       inversive_test(data.carrier(cs[i]), data.carrier(cs[j])) ==
                           InversivePosition::Tangent,
                       "carriers " + cs[i] + ", " + cs[j] + " tangent at " + vlabel);

    // (ii) truncation circles meet their carriers at right angles
    for (const auto& t : data.truncations)
        for (const auto& carrier_label : t.carriers)
            record("truncation." + t.label + "." + carrier_label,
                   inversive_test(t.circle, data.carrier(carrier_label)) ==
                       InversivePosition::Orthogonal,
                   "truncation " + t.label + " orthogonal to " + carrier_label);

    // (i) pairings carry source carrier to target carrier and match vertices
    for (const auto& p : data.pairings) {
        const std::string pid = "pairing." + p.ns + "." + p.map_word + ".";
        Matrix map = resolve(p.ns, p.map_word);
        record(pid + "carrier",
               eq_circle(image_circle(map, data.carrier(p.source)), data.carrier(p.target)),
               p.map_word + " maps carrier " + p.source + " onto " + p.target);
        for (const auto& [from, to] : p.vertex_map)
            record(pid + "vertex." + from, map.apply(data.vertex(from)) == data.vertex(to),
                   p.map_word + " sends " + from + " to " + to);
    }
    return out;
}

}  // namespace kleinian::geometry
