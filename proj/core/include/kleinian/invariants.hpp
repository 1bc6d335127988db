#pragma once

#include <string>
#include <vector>

#include "kleinian/catalog.hpp"
#include "kleinian/field.hpp"
#include "kleinian/moebius.hpp"
#include "kleinian/polynomial.hpp"

namespace kleinian::invariants {

// Subfield generated by the traces of the products of distinct generators in
// index order, one product per nonempty subset (g_i, g_i g_j for i<j, ...).
// That set of traces generates the trace field of the group [MaR p.125 shape].
// Enumeration stops early once the lattice saturates at Q(i,sqrt2), which does
// not change the result. Requires every generator to be unimodular.
Subfield trace_field(const catalog::GroupSpec& spec);

// Subfield generated by tr(w^2) over all nonempty words w of length <= radius
// in the generators and their inverses: a certified lower bound for the
// invariant trace field (trace_field is the upper bound).
Subfield invariant_trace_field_lower(const catalog::GroupSpec& spec, int radius);

// Result of the trace-integrality decision.
//   Certificate:  every generator entry is an algebraic integer, which forces
//                 every trace in the group to be one.
//   Witness:      a word of length <= radius whose trace is not an algebraic
//                 integer, together with the trace and its minimal polynomial.
//   Inconclusive: no certificate applies and no witness exists up to radius.
struct IntegralityResult {
    enum class Kind { Certificate, Witness, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int radius = 0;
    std::string word;        // Witness only: parseable word over the labels
    FieldElement trace;      // Witness only
    IntPolynomial minpoly;   // Witness only

    // {"word": ..., "trace": "<canonical element>", "minpoly": ["c0", ...]}
    std::string witness_json() const;
};

IntegralityResult integral_traces(const catalog::GroupSpec& spec, int radius);

// An element of K u {inf} regarded up to the Moebius action of PGL2(Q).
// Class equality is decided by moduli_equivalent, never by representatives.
struct ModulusClass {
    ProjPoint representative;
};

// For commuting parabolics alpha, beta: conjugate the common fixed point to
// inf (by [[0,1],[1,-p]] when finite, the identity when already inf), read off
// the translation lengths t_alpha, t_beta, and return the raw ratio class
// [t_beta / t_alpha]. Throws DomainError if either input is not parabolic, the
// pair does not commute, or the fixed points differ.
ModulusClass cusp_modulus(const Matrix& alpha, const Matrix& beta);

// Decides whether w = (az + b)/(cz + d) for some a,b,c,d in Q, ad - bc != 0.
// Q u {inf} forms a single class. For irrational z, w the Q-linear system
// c(zw) + dw - az - b = 0 is solved in K-coordinates and the quadratic form
// ad - bc is tested on the solution subspace (basis vectors and pairwise
// sums; polarization makes that sufficient in characteristic 0).
bool moduli_equivalent(const ProjPoint& z, const ProjPoint& w);

// Abelianized-mod-2 presentation of the one-cusped family member: columns are
// the generators x1,y1,z1,...,xn,yn,zn,an,bn,a0,b0 (3n+4 of them), and there
// is one GF(2) row per relation: three middle relations per adjacent pair of
// blocks plus six cap relations, 3(n-1)+6 rows in total.
struct Presentation2 {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> relations;  // entries 0/1
};

Presentation2 homology_presentation(int n);  // n >= 1
int gf2_rank(const std::vector<std::vector<int>>& rows);

// dim_F2 H_1 of the n-th one-cusped manifold: 3n+4 minus the GF(2) rank of
// the relation matrix.
int homology_mod2(int n);

// True iff p1..p4 of the onecusped namespace reduce to +-identity mod 3
// (the containment direction of the congruence-kernel remark).
bool mod3_congruence_containment();

}  // namespace kleinian::invariants
