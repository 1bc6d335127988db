#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kleinian/catalog.hpp"
#include "kleinian/report.hpp"

namespace kleinian::suites {

// Checks for one verification suite. section2..section6 run every catalog
// identity and fixed-point fact of that suite plus the scalar facts displayed
// alongside them (trace values, the nonintegral-trace witness, cusp moduli and
// their pairwise inequivalence, homology ranks, mod-3 reduction, trace
// fields). Deterministic order, no side effects.
std::vector<Check> identity_checks(catalog::Suite suite);
std::vector<Check> section_checks(catalog::Suite suite);

// Both polyhedron configurations plus the boundary-plane image facts.
std::vector<Check> geometry_checks();

// section2..section6 followed by geometry.
std::vector<Check> all_checks();

// Randomized exact property suites (field axioms, minimal-polynomial
// vanishing, trace invariance under conjugation, Moebius functoriality of
// circle images, equivalence-relation behavior of moduli_equivalent), each on
// `samples` deterministic pseudo-random samples.
std::vector<Check> property_checks(int samples, std::uint64_t seed = 20260809);

}  // namespace kleinian::suites
