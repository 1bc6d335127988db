#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kleinian/moebius.hpp"
#include "kleinian/words.hpp"

namespace kleinian::catalog {

// The two generator namespaces. Both use the symbols m, c, tau, but for
// unrelated matrices, so they are kept strictly separate.
//
//   links:     r, s, f, g, h, sigma, c, m, tau, omega,
//              p1..p4, gamma1..gamma4, delta1..delta4
//   onecusped: a, b, x, y, z, m, c, tau,
//              p1..p4, q1..q4, alpha, beta, gamma, mu
//
// m (links), omega and tau (onecusped) are projective GL2(K) representatives
// with determinants 5, -5 and 3.
enum class NamespaceId { Links, OneCusped };

const Namespace& links_namespace();
const Namespace& onecusped_namespace();
const Namespace& namespace_of(NamespaceId id);
NamespaceId parse_namespace(const std::string& name);  // "links" | "onecusped"
std::string namespace_str(NamespaceId id);

// Cusp words built from the ellipsis patterns, parameterized by the number of
// middle blocks n >= 1. These builders are the single source of truth; the
// n = 1 and n = 2 expansions are written out in the tests.
Matrix links_lambda1(int n);      // commutes with p1
Matrix links_lambda2(int n);      // commutes with p2
Matrix onecusped_lambda(int n);   // commutes with mu

struct GroupSpec {
    std::string name;
    std::vector<std::pair<std::string, Matrix>> generators;  // (label word, matrix)
};

enum class Family { Links, Mutant, OneCusped };
Family parse_family(const std::string& name);  // "links" | "mutant" | "onecusped"
std::string family_str(Family f);

// Explicit generator lists, 3n+4 matrices each, all of determinant 1:
//   links(n>=0):     {r,s}^{c^(2n)} u {f,g,h}^{c^(2j)} (j = n..1) u {Bar r, Bar s}
//   mutant(n>=0):    {r,s}^{c^(2n) m} u the same middle blocks u {Bar r, Bar s}
//   onecusped(n>=1): {a,b}^{c^n m} u {x,y,z}^{c^i} (i = n..1) u {Bar a, Bar b}
// Labels are words in the corresponding namespace. Throws DomainError on bad n.
GroupSpec family_generators(Family family, int n);
NamespaceId family_namespace(Family family);

// One machine-checkable identity: evaluate both sides in `ns`, then require
// eq_projective.
struct Identity {
    std::string id;
    std::string description;
    NamespaceId ns;
    WordPtr lhs;
    WordPtr rhs;
};

// One fixed-point fact: the word must be parabolic and fix `point`.
struct FixedPointCheck {
    std::string id;
    std::string description;
    NamespaceId ns;
    WordPtr word;
    ProjPoint point;
};

enum class Suite { Section2, Section3, Section4, Section5, Section6 };
Suite parse_suite(const std::string& name);  // "section2", ..., "section6"
std::string suite_str(Suite s);

// All displayed matrix identities of the given suite, including the n = 1..8
// instances of the cusp-word normal forms.
std::vector<Identity> named_identities(Suite suite);

// Displayed fixed-point facts (empty for suites that state none).
std::vector<FixedPointCheck> fixed_point_checks(Suite suite);

}  // namespace kleinian::catalog
