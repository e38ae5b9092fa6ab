#pragma once

#include "icosal/cyclo.hpp"
#include "icosal/lfactors.hpp"
#include "icosal/number_field.hpp"
#include "icosal/params.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace icosal {

// ---------------------------------------------------------------------------
// Symmetric-cube matching for a pair of 2-dimensional parameters
// pi = {a, w/a}, pi' = {c, wp/c} with matching central cubes w^3 = wp^3.
// Writing z = w/wp (a cube root of unity), the match laws are:
//   case 1:  {c, d} = {za, zb}
//   case 2:  {c, d} = {mu za, mu^{-1} zb},   mu^4 = 1,  a^2 = mu w
//   case 3:  {c, d} = {zeta za, zeta^{-1} zb}, zeta^5 = 1, a^2 = zeta w
// each taken up to exchanging a with b and c with d. All matching cases are
// reported (they overlap; mu = 1 in case 2 is also case 1 when a^2 = w).
// ---------------------------------------------------------------------------

enum class CaseLabel { case_1, case_2, case_3 };

/// Wire labels used in serialized reports: "L11B-1", "L11B-2", "L11B-3".
const char* case_label_str(CaseLabel label);

struct CaseWitness {
    CaseLabel label = CaseLabel::case_1;
    Cyclo z;                    // the cube root w/wp
    std::optional<Cyclo> unit;  // mu (case 2) or zeta (case 3); first match in scan order
};

struct ClassificationReport {
    bool sym3_match = false;
    std::vector<CaseWitness> matched;  // ordered case 1, 2, 3; empty iff no sym3 match
    Cyclo z;                           // w/wp
    bool adjoint_isomorphic = false;   // {a/b, 1, b/a} vs {c/d, 1, d/c}
};

/// Evaluates the degree-4 comparison sym3(pi) = sym3(pi') and assigns match
/// laws. Throws std::domain_error on zero inputs or when w^3 != wp^3.
ClassificationReport check_sym3_match(const Cyclo& a, const Cyclo& w, const Cyclo& c,
                                      const Cyclo& wp);

// ---------------------------------------------------------------------------
// Power relations forced by an adjoint match plus the degree-6 comparison.
// ---------------------------------------------------------------------------

enum class PowerRelation { a2_eq_w, a4_eq_w2, a6_eq_w3, none };

/// Wire names: "a2=w", "a4=w2", "a6=w3", "none".
const char* power_relation_str(PowerRelation r);

/// Ordered relation test (a^2 = w, then a^4 = w^2, then a^6 = w^3) with no
/// precondition checks; see derive_power_relation for the guarded entry.
PowerRelation power_relation_of(const Cyclo& a, const Cyclo& w);

/// Requires adjoint({a, w/a}) = adjoint({c, wp/c}) and check_si3_local to
/// hold; throws std::domain_error otherwise (distinct from returning none).
PowerRelation derive_power_relation(const Cyclo& a, const Cyclo& w, const Cyclo& c,
                                    const Cyclo& wp);

// ---------------------------------------------------------------------------
// Trivial-central-character dichotomy for pi = {a, 1/a}, pi' = {c, 1/c}.
// Consistent pairs (sym3 match and degree-6 comparison both hold) fall into:
//   case i:  a^m = 1 with m in {4, 6}, c = +-a up to swaps, adjoints match;
//   case ii: c = a^3 up to swaps, a^10 = 1, adjoints differ.
// ---------------------------------------------------------------------------

struct TrivialCentralResult {
    enum class Case { case_i, case_ii, none } outcome = Case::none;
    long m = 0;  // 4 or 6 when case_i (4 preferred when both hold)
};

TrivialCentralResult classify_trivial_central(const Cyclo& a, const Cyclo& c);

/// Field generated by trace and determinant of a 2-dimensional parameter.
NumberFieldDesc rationality_field(const UnramifiedParam& p);

/// Entrywise Galois action by the designated lift fixing the 4-part and
/// sending zeta_5 to zeta_5^3 (so sqrt5 changes sign). Rational entries are
/// untouched; a 25-divisible joint conductor has no designated lift and
/// throws std::domain_error.
UnramifiedParam tau_conjugate(const UnramifiedParam& p);

// ---------------------------------------------------------------------------
// Twist-of-Steinberg obstruction: the degree-6 comparison for a special
// pair forces Jordan type {4, 2} against {6}, so it never holds.
// ---------------------------------------------------------------------------

struct SteinbergComparison {
    SteinbergParam lhs;  // Ad(lambda' st) x (lambda st) x lambda^2 : {(3,4),(3,2)}
    SteinbergParam rhs;  // sym5(lambda st) : {(5,6)}
    bool jordan_types_equal = false;
};

SteinbergComparison steinberg_obstruction();

// ---------------------------------------------------------------------------
// Dihedral (supercuspidal) adjoint check: Ad decomposes as
// lambda0 + lambda0 nu + nu with nu the unramified quadratic character.
// Both branches lambda0 = 1 and lambda0 = nu force the trivial character
// inside Ad, which is the contradiction.
// ---------------------------------------------------------------------------

struct DihedralBranch {
    bool lambda0_trivial = true;
    std::array<AbstractCharacter, 3> ad_parts{};
    long trivial_multiplicity = 0;
};

struct DihedralAdjointReport {
    std::array<DihedralBranch, 2> branches{};  // lambda0 = 1, then lambda0 = nu
    std::size_t queried = 0;                   // branch selected by lambda0_order
    bool contradiction = false;                // trivial part present in every branch
};

/// lambda0_order must be 1 or 2 and nu_nontrivial must be true; anything
/// else is outside the modeled finite case space and throws.
DihedralAdjointReport dihedral_adjoint_check(long lambda0_order, bool nu_nontrivial);

// ---------------------------------------------------------------------------
// Ramified principal-series constraint on the order of mu.
// ---------------------------------------------------------------------------

enum class PSRelation { equal, cube };

struct RamifiedPSVerdict {
    long mu_order = 1;
    PSRelation relation = PSRelation::cube;
    bool allowed = false;
    std::vector<long> lhs_exponents;  // sorted residues mod mu_order
    std::vector<long> rhs_exponents;
};

/// relation cube: mu^3 + mu^{-3} versus mu^7 + mu^{-7} (allowed iff the order
/// divides 4 or 10). relation equal: the degree-6 exponent lists
/// {5,3,1,-1,-3,-5} versus {3,1,1,-1,-1,-3} (allowed iff the order divides
/// 4 or 6). mu_order must be positive.
RamifiedPSVerdict ramified_ps_constrain(long mu_order, PSRelation relation);

// ---------------------------------------------------------------------------
// Archimedean and temperedness consistency.
// ---------------------------------------------------------------------------

/// Unitary-axis exponents {3m, m, m, -m, -m, -3m} versus
/// {5m, 3m, m, -m, -3m, -5m}, compared up to a common twist shift.
/// Consistent only at m = 0.
bool arch_galois_check(long m);

/// |.|-axis exponents with parameter t, compared exactly (the central
/// character pins any twist). Consistent only at t = 0.
bool tempered_check(const Rational& t);

// ---------------------------------------------------------------------------
// Exhaustive census over roots of unity.
// ---------------------------------------------------------------------------

struct MatchedSolution {
    Cyclo a, w, c, wp;
    ClassificationReport report;
};

struct UncoveredPair {
    Cyclo a, w, c, wp;
};

struct EnumerationReport {
    long max_order = 0;
    bool trivial_center = true;
    long max_central_order = 1;

    long tuples_scanned = 0;
    long sym3_matches = 0;
    std::array<long, 3> case_counts{};         // per case label
    std::vector<MatchedSolution> solutions;    // every sym3 match, in scan order
    std::vector<UncoveredPair> uncovered;      // sym3 matches outside all cases

    long adjoint_si3_pairs = 0;                // power-relation preconditions met
    std::array<long, 4> power_counts{};        // a2=w, a4=w2, a6=w3, none
    std::vector<UncoveredPair> power_none;     // precondition-met tuples without a relation

    long case2_w1_count = 0;                   // case-2 matches with w = 1 and degree-6 true
    long case2_w1_a4_violations = 0;           // among them, a^4 != 1

    // Trivial-center dichotomy data (filled when trivial_center).
    long consistent_pairs = 0;
    long case_i_m4 = 0;
    long case_i_m6 = 0;
    long case_ii = 0;
    std::vector<UncoveredPair> dichotomy_uncovered;
    long rationality_mismatches = 0;           // case i not Q, or case ii not Q(sqrt5)
    long tau_mismatches = 0;                   // case ii where {c, 1/c} != tau({a, 1/a})
};

/// Scans all pairs (a, c) in the group of max_order-th roots of unity; with
/// w_trivial false, also over central pairs (w, wp) of order at most
/// max_central_order satisfying w^3 = wp^3. workers = 0 picks a thread count
/// automatically; results are deterministic regardless.
EnumerationReport enumerate_solutions(long max_order, bool w_trivial,
                                      long max_central_order = 12, int workers = 0);

// ---------------------------------------------------------------------------
// Combined per-pair analysis (the classify command's payload).
// ---------------------------------------------------------------------------

struct LocalPairAnalysis {
    ClassificationReport classification;
    bool si3_local = false;
    bool power_preconditions = false;
    PowerRelation power_relation = PowerRelation::none;
    NumberFieldDesc rationality = NumberFieldDesc::rationals();  // of {a, w/a}
};

LocalPairAnalysis analyze_local_pair(const Cyclo& a, const Cyclo& w, const Cyclo& c,
                                     const Cyclo& wp);

} // namespace icosal
