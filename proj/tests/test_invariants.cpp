#include <doctest.h>

#include "helpers.hpp"
#include "kleinian/catalog.hpp"
#include "kleinian/errors.hpp"
#include "kleinian/invariants.hpp"

using namespace kleinian;
using catalog::Family;
using kleinian::testing::fe;
using invariants::IntegralityResult;

namespace {

catalog::GroupSpec group_from_words(const std::string& name, const Namespace& ns,
                                    const std::vector<std::string>& words) {
    catalog::GroupSpec spec;
    spec.name = name;
    for (const auto& w : words) spec.generators.emplace_back(w, evaluate_word(w, ns));
    return spec;
}

}  // namespace

TEST_CASE("trace field of small groups") {
    const Namespace& links = catalog::links_namespace();
    // oracle values: tr r = 2, tr s = 1+i, tr rs = -1+2i
    CHECK(links.lookup("r").trace() == FieldElement(2));
    CHECK(links.lookup("s").trace() == fe(1, 1, 0, 0));
    CHECK((links.lookup("r") * links.lookup("s")).trace() == fe(-1, 2, 0, 0));
    CHECK(invariants::trace_field(group_from_words("G", links, {"r", "s"})) == Subfield::Q_i);

    const Namespace& oc = catalog::onecusped_namespace();
    CHECK(invariants::trace_field(group_from_words("N", oc, {"a", "b"})) == Subfield::Q_i);
    CHECK(invariants::trace_field(group_from_words("Nprime", oc, {"x", "y", "z"})) ==
          Subfield::Q_i_sqrt2);  // tr x = i + sqrt2 generates everything
}

TEST_CASE("trace field is invariant under permuting generators") {
    const Namespace& links = catalog::links_namespace();
    auto a = group_from_words("A", links, {"r", "s", "Bar(s)"});
    auto b = group_from_words("B", links, {"Bar(s)", "r", "s"});
    CHECK(invariants::trace_field(a) == invariants::trace_field(b));
}

TEST_CASE("trace field of the link family saturates at Q(i,sqrt2)") {
    for (int n = 0; n <= 8; ++n)
        CHECK(invariants::trace_field(catalog::family_generators(Family::Links, n)) ==
              Subfield::Q_i_sqrt2);
    for (int n = 0; n <= 2; ++n)
        CHECK(invariants::trace_field(catalog::family_generators(Family::Mutant, n)) ==
              Subfield::Q_i_sqrt2);
}

TEST_CASE("trace field rejects non-unimodular generators") {
    const Namespace& links = catalog::links_namespace();
    CHECK_THROWS_AS(invariants::trace_field(group_from_words("bad", links, {"m"})), DomainError);
}

TEST_CASE("invariant trace field lower bounds at radius 2") {
    const Namespace& oc = catalog::onecusped_namespace();
    CHECK(invariants::invariant_trace_field_lower(group_from_words("N", oc, {"a", "b"}), 2) ==
          Subfield::Q_i);
    CHECK(invariants::invariant_trace_field_lower(group_from_words("Np", oc, {"x", "y", "z"}), 2) ==
          Subfield::Q_isqrt2);
    for (int n = 1; n <= 4; ++n)
        CHECK(invariants::invariant_trace_field_lower(
                  catalog::family_generators(Family::OneCusped, n), 2) == Subfield::Q_i_sqrt2);
    CHECK_THROWS_AS(
        invariants::invariant_trace_field_lower(group_from_words("N", oc, {"a"}), 0), DomainError);
}

TEST_CASE("integral traces: certificates, witnesses, inconclusive") {
    const Namespace& links = catalog::links_namespace();

    for (int n = 0; n <= 4; ++n) {
        auto res = invariants::integral_traces(catalog::family_generators(Family::Links, n), 1);
        CHECK(res.kind == IntegralityResult::Kind::Certificate);
    }

    auto witness =
        invariants::integral_traces(group_from_words("w", links, {"m*s*m^-1*g"}), 1);
    REQUIRE(witness.kind == IntegralityResult::Kind::Witness);
    CHECK(witness.word == "m*s*m^-1*g");
    CHECK(witness.trace ==
          FieldElement(Rational(-7, 5), Rational(86, 5), Rational(17, 5), Rational(9, 5)));
    CHECK(witness.minpoly.coeffs == std::vector<Integer>{13673, 836, -106, -60, 25});
    CHECK(witness.minpoly.str() == "25x^4 - 60x^3 - 106x^2 + 836x + 13673");
    CHECK_FALSE(witness.minpoly.is_monic());
    CHECK(witness.witness_json().find("13673") != std::string::npos);

    // the doubled mutant cap alone has integral traces: the search cannot
    // find a witness and must say so rather than claim integrality
    auto inconclusive =
        invariants::integral_traces(catalog::family_generators(Family::Mutant, 0), 3);
    CHECK(inconclusive.kind == IntegralityResult::Kind::Inconclusive);
    CHECK(inconclusive.radius == 3);

    // mutant members with a middle block expose the nonintegral trace
    auto found = invariants::integral_traces(catalog::family_generators(Family::Mutant, 1), 2);
    REQUIRE(found.kind == IntegralityResult::Kind::Witness);
    CHECK(found.minpoly.coeffs == std::vector<Integer>{13673, 836, -106, -60, 25});
}

TEST_CASE("certificate and word search agree on the link family") {
    for (int n = 0; n <= 2; ++n) {
        auto spec = catalog::family_generators(Family::Links, n);
        auto cert = invariants::integral_traces(spec, 1);
        CHECK(cert.kind == IntegralityResult::Kind::Certificate);
        // strip the certificate path by searching words directly
        catalog::GroupSpec stripped = spec;
        auto search = invariants::integral_traces(stripped, 3);
        CHECK(search.kind == IntegralityResult::Kind::Certificate);
    }
}

TEST_CASE("cusp modulus normalizes commuting parabolic pairs") {
    // already-normalized translations give the raw ratio
    Matrix alpha = kleinian::testing::imat(1, 1, 0, 1);
    Matrix beta(FieldElement(1), fe(0, 1, 0, 2), FieldElement(0), FieldElement(1));
    auto cls = invariants::cusp_modulus(alpha, beta);
    CHECK(cls.representative == ProjPoint(fe(0, 1, 0, 2)));

    const Namespace& links = catalog::links_namespace();
    auto knotted = invariants::cusp_modulus(links.lookup("p1"), catalog::links_lambda1(1));
    CHECK(knotted.representative == ProjPoint(fe(0, 2, 0, 4)));  // 2i(1 + 2 sqrt2)
    CHECK(invariants::moduli_equivalent(knotted.representative, ProjPoint(fe(0, 1, 0, 2))));

    const Namespace& oc = catalog::onecusped_namespace();
    auto single = invariants::cusp_modulus(oc.lookup("mu"), catalog::onecusped_lambda(1));
    CHECK(single.representative ==
          ProjPoint(FieldElement(Rational(1, 3), Rational(4, 3), 0, Rational(4, 3))));

    CHECK_THROWS_AS(invariants::cusp_modulus(links.lookup("s"), links.lookup("p1")), DomainError);
    CHECK_THROWS_AS(invariants::cusp_modulus(links.lookup("p1"), links.lookup("p2")), DomainError);
}

TEST_CASE("cusp modulus class is independent of simultaneous conjugation") {
    kleinian::testing::Rng rng(41);
    const Namespace& links = catalog::links_namespace();
    Matrix p1 = links.lookup("p1");
    Matrix lam = catalog::links_lambda1(2);
    auto base = invariants::cusp_modulus(p1, lam);
    for (int k = 0; k < 25; ++k) {
        Matrix g = rng.invertible();
        auto moved = invariants::cusp_modulus(p1.conjugated_by(g), lam.conjugated_by(g));
        CHECK(invariants::moduli_equivalent(base.representative, moved.representative));
    }
}

TEST_CASE("moduli equivalence examples") {
    using invariants::moduli_equivalent;
    ProjPoint z1(fe(0, 1, 0, 2));   // i(1 + 2 sqrt2)
    ProjPoint z2(fe(0, 1, 0, 4));   // i(1 + 4 sqrt2)
    ProjPoint z1x2(fe(0, 2, 0, 4)); // 2 i(1 + 2 sqrt2)
    CHECK_FALSE(moduli_equivalent(z1, z2));
    CHECK(moduli_equivalent(z1, z1));
    CHECK(moduli_equivalent(z1x2, z1));
    // scaling by 3 is a rational Moebius map
    FieldElement w = fe(1, 4, 0, 4);
    CHECK(moduli_equivalent(ProjPoint(w),
                            ProjPoint(w / FieldElement(3))));
    // rational points and infinity form one class
    CHECK(moduli_equivalent(ProjPoint(FieldElement(2)), ProjPoint::infinity()));
    CHECK(moduli_equivalent(ProjPoint(FieldElement(Rational(1, 3))), ProjPoint(FieldElement(7))));
    CHECK_FALSE(moduli_equivalent(ProjPoint::infinity(), z1));
    CHECK_FALSE(moduli_equivalent(z1, ProjPoint(FieldElement(2))));
}

TEST_CASE("moduli equivalence under random rational maps") {
    kleinian::testing::Rng rng(43);
    for (int k = 0; k < 200; ++k) {
        FieldElement z = rng.element();
        if (subfield_of(z) == Subfield::Q) continue;
        Matrix g = rng.rational_invertible();
        ProjPoint pz(z);
        CHECK(invariants::moduli_equivalent(pz, g.apply(pz)));
    }
}

TEST_CASE("pairwise distinct moduli across both families") {
    for (int m = 1; m <= 10; ++m)
        for (int n = m + 1; n <= 10; ++n) {
            CHECK_FALSE(invariants::moduli_equivalent(ProjPoint(fe(0, 1, 0, 2 * m)),
                                                      ProjPoint(fe(0, 1, 0, 2 * n))));
            CHECK_FALSE(invariants::moduli_equivalent(ProjPoint(fe(1, 4, 0, 4 * m)),
                                                      ProjPoint(fe(1, 4, 0, 4 * n))));
        }
}

TEST_CASE("homology presentation shape and ranks") {
    for (int n = 1; n <= 8; ++n) {
        auto pres = invariants::homology_presentation(n);
        CHECK(pres.generators.size() == static_cast<std::size_t>(3 * n + 4));
        CHECK(pres.relations.size() == static_cast<std::size_t>(3 * (n - 1) + 6));
        CHECK(invariants::gf2_rank(pres.relations) == 2 * n + 3);
        CHECK(invariants::homology_mod2(n) == n + 1);
    }
    CHECK_THROWS_AS(invariants::homology_mod2(0), DomainError);
}

TEST_CASE("gf2 rank on a known matrix") {
    std::vector<std::vector<int>> rows = {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}};
    CHECK(invariants::gf2_rank(rows) == 2);  // third row is the sum of the first two
}

TEST_CASE("mod 3 congruence containment") {
    CHECK(invariants::mod3_congruence_containment());
    const Namespace& oc = catalog::onecusped_namespace();
    CHECK(oc.lookup("p1") == kleinian::testing::imat(1, 0, -3, 1));
    CHECK(oc.lookup("p2") == kleinian::testing::imat(-1, -3, 0, -1));
    CHECK(oc.lookup("p3") == kleinian::testing::imat(-2, 3, -3, 4));
}
