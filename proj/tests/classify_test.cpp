#include "doctest.h"

#include "icosal/classify.hpp"
#include "icosal/cyclo.hpp"
#include "icosal/lfactors.hpp"
#include "icosal/number_field.hpp"
#include "icosal/params.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace icosal;

namespace {
Cyclo zeta(long n, long k = 1) { return Cyclo::root_of_unity(n, k); }
UnramifiedParam par(std::vector<Cyclo> v) { return UnramifiedParam(std::move(v)); }

bool has_case(const ClassificationReport& r, CaseLabel label) {
    return std::any_of(r.matched.begin(), r.matched.end(),
                       [&](const CaseWitness& w) { return w.label == label; });
}
}

TEST_CASE("case labels use the wire names") {
    CHECK(std::string(case_label_str(CaseLabel::case_1)) == "L11B-1");
    CHECK(std::string(case_label_str(CaseLabel::case_2)) == "L11B-2");
    CHECK(std::string(case_label_str(CaseLabel::case_3)) == "L11B-3");
}

TEST_CASE("sym3 matching requires compatible centrals") {
    CHECK_THROWS_AS(check_sym3_match(zeta(5), Cyclo(1), zeta(5), zeta(5)),
                    std::domain_error);  // w^3 != wp^3
    CHECK_THROWS_AS(check_sym3_match(Cyclo(0), Cyclo(1), Cyclo(1), Cyclo(1)),
                    std::domain_error);
    // Cube-equal centrals are accepted even when the centrals differ.
    CHECK_NOTHROW(check_sym3_match(zeta(5), Cyclo(1), zeta(5), zeta(3)));
}

TEST_CASE("octic pair matches only the quartic-unit case") {
    const ClassificationReport r = check_sym3_match(zeta(8), Cyclo(1), zeta(8, 3), Cyclo(1));
    CHECK(r.sym3_match);
    CHECK(r.adjoint_isomorphic);
    REQUIRE(r.matched.size() == 1);
    CHECK(r.matched[0].label == CaseLabel::case_2);
    REQUIRE(r.matched[0].unit.has_value());
    CHECK(*r.matched[0].unit == zeta(4));
    CHECK(r.z == Cyclo(1));
    // The degree-6 comparison rejects this pair even though sym3 matches.
    CHECK_FALSE(check_si3_local(zeta(8), Cyclo(1), zeta(8, 3), Cyclo(1)));
}

TEST_CASE("identical trivial pair matches every case") {
    const ClassificationReport r = check_sym3_match(Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1));
    CHECK(r.sym3_match);
    CHECK(r.adjoint_isomorphic);
    CHECK(has_case(r, CaseLabel::case_1));
    CHECK(has_case(r, CaseLabel::case_2));
    CHECK(has_case(r, CaseLabel::case_3));
}

TEST_CASE("order-10 pair matches through the quintic unit") {
    const ClassificationReport r =
        check_sym3_match(zeta(10), Cyclo(1), zeta(10, 3), Cyclo(1));
    CHECK(r.sym3_match);
    CHECK_FALSE(r.adjoint_isomorphic);
    REQUIRE(r.matched.size() == 1);
    CHECK(r.matched[0].label == CaseLabel::case_3);
    CHECK(check_si3_local(zeta(10), Cyclo(1), zeta(10, 3), Cyclo(1)));
}

TEST_CASE("non-matching pair reports no cases") {
    const ClassificationReport r = check_sym3_match(zeta(7), Cyclo(1), zeta(5), Cyclo(1));
    CHECK_FALSE(r.sym3_match);
    CHECK(r.matched.empty());
}

TEST_CASE("power relations order by strength") {
    CHECK(power_relation_of(zeta(8), zeta(8, 2)) == PowerRelation::a2_eq_w);
    CHECK(power_relation_of(zeta(8), zeta(8, 6)) == PowerRelation::a4_eq_w2);
    CHECK(power_relation_of(zeta(5), zeta(3) * zeta(5, 2)) == PowerRelation::a6_eq_w3);
    CHECK(power_relation_of(zeta(7), Cyclo(1)) == PowerRelation::none);
    CHECK(std::string(power_relation_str(PowerRelation::a2_eq_w)) == "a2=w");
    CHECK(std::string(power_relation_str(PowerRelation::a4_eq_w2)) == "a4=w2");
    CHECK(std::string(power_relation_str(PowerRelation::a6_eq_w3)) == "a6=w3");
    CHECK(std::string(power_relation_str(PowerRelation::none)) == "none");
}

TEST_CASE("derived power relation guards its preconditions") {
    // Adjoint-isomorphic and degree-6 true: relation must exist.
    CHECK(derive_power_relation(zeta(4), Cyclo(1), zeta(4), Cyclo(1)) ==
          PowerRelation::a4_eq_w2);
    CHECK(derive_power_relation(Cyclo(1), Cyclo(1), Cyclo(1), Cyclo(1)) ==
          PowerRelation::a2_eq_w);
    // Octic pair fails the degree-6 comparison: preconditions unmet.
    CHECK_THROWS_AS(derive_power_relation(zeta(8), Cyclo(1), zeta(8, 3), Cyclo(1)),
                    std::domain_error);
    // Mismatched adjoints: preconditions unmet.
    CHECK_THROWS_AS(derive_power_relation(zeta(10), Cyclo(1), zeta(10, 3), Cyclo(1)),
                    std::domain_error);
}

TEST_CASE("trivial-central classification splits into the two cases") {
    const TrivialCentralResult quartic = classify_trivial_central(zeta(4), zeta(4));
    CHECK(quartic.outcome == TrivialCentralResult::Case::case_i);
    CHECK(quartic.m == 4);

    const TrivialCentralResult sextic = classify_trivial_central(zeta(6), zeta(6, 5));
    CHECK(sextic.outcome == TrivialCentralResult::Case::case_i);
    CHECK(sextic.m == 6);

    const TrivialCentralResult quintic = classify_trivial_central(zeta(10), zeta(10, 3));
    CHECK(quintic.outcome == TrivialCentralResult::Case::case_ii);

    CHECK(classify_trivial_central(zeta(7), zeta(7)).outcome ==
          TrivialCentralResult::Case::none);
    CHECK(classify_trivial_central(zeta(7), zeta(5)).outcome ==
          TrivialCentralResult::Case::none);
}

TEST_CASE("rationality fields of self-dual parameters") {
    const NumberFieldDesc q = NumberFieldDesc::rationals();
    const NumberFieldDesc sqrt5 = NumberFieldDesc::fixed_field(5, {1, 4});
    CHECK(rationality_field(par({zeta(4), zeta(4, 3)})) == q);
    CHECK(rationality_field(par({zeta(6), zeta(6, 5)})) == q);
    CHECK(rationality_field(par({zeta(10), zeta(10, 9)})) == sqrt5);
    CHECK(rationality_field(par({zeta(5), zeta(5, 4)})) == sqrt5);
    CHECK(rationality_field(par({zeta(8), zeta(8, 7)})) ==
          NumberFieldDesc::fixed_field(8, {1, 7}));
    CHECK(rationality_field(par({Cyclo(2), Cyclo(3)})) == q);
}

TEST_CASE("tau conjugation acts through the designated residue") {
    const UnramifiedParam p = par({zeta(10), zeta(10, 9)});
    CHECK(tau_conjugate(p) == par({zeta(10, 3), zeta(10, 7)}));
    // Self-dual parameters return to themselves after two applications.
    CHECK(tau_conjugate(tau_conjugate(p)) == p);
    const UnramifiedParam p20 = par({zeta(20), zeta(20, 19)});
    CHECK(tau_conjugate(p20) == par({zeta(20, 13), zeta(20, 7)}));
    // Prime-to-5 conductors are untouched.
    const UnramifiedParam r = par({Cyclo(2), zeta(3)});
    CHECK(tau_conjugate(r) == r);
    CHECK(tau_conjugate(par({Cyclo(7)})) == par({Cyclo(7)}));
    // 25 | conductor has no unramified descent.
    CHECK_THROWS_AS(tau_conjugate(par({zeta(25), zeta(25, 24)})), std::domain_error);
}

TEST_CASE("Jordan-type obstruction separates the two sides") {
    const SteinbergComparison cmp = steinberg_obstruction();
    CHECK(cmp.lhs.block_sizes() == std::vector<long>{4, 2});
    CHECK(cmp.rhs.block_sizes() == std::vector<long>{6});
    CHECK_FALSE(cmp.jordan_types_equal);
}

TEST_CASE("dihedral adjoint always contains the trivial character") {
    for (long order : {1L, 2L}) {
        const DihedralAdjointReport rep = dihedral_adjoint_check(order, true);
        CHECK(rep.contradiction);
        for (const DihedralBranch& br : rep.branches) {
            CHECK(br.trivial_multiplicity >= 1);
            CHECK(br.ad_parts.size() == 3);
        }
        CHECK(rep.branches[rep.queried].trivial_multiplicity >= 1);
    }
    CHECK_THROWS_AS(dihedral_adjoint_check(1, false), std::domain_error);
    CHECK_THROWS_AS(dihedral_adjoint_check(3, true), std::domain_error);
}

TEST_CASE("ramified unit orders are pinned by the exponent lists") {
    for (long n = 1; n <= 60; ++n) {
        const RamifiedPSVerdict cube = ramified_ps_constrain(n, PSRelation::cube);
        CHECK(cube.allowed == (4 % n == 0 || 10 % n == 0));
        const RamifiedPSVerdict equal = ramified_ps_constrain(n, PSRelation::equal);
        CHECK(equal.allowed == (4 % n == 0 || 6 % n == 0));
    }
    CHECK_THROWS_AS(ramified_ps_constrain(0, PSRelation::cube), std::domain_error);
}

TEST_CASE("exponent arguments vanish only at the fixed point") {
    for (long m = -10; m <= 10; ++m) CHECK(arch_galois_check(m) == (m == 0));
    for (long n = -12; n <= 12; ++n)
        CHECK(tempered_check(Rational(n, 4)) == (n == 0));
    for (long n = -9; n <= 9; ++n)
        CHECK(tempered_check(Rational(n, 3)) == (n == 0));
}

TEST_CASE("tiny censuses are complete") {
    const EnumerationReport unit = enumerate_solutions(1, true);
    CHECK(unit.tuples_scanned == 1);
    CHECK(unit.sym3_matches == 1);
    CHECK(unit.uncovered.empty());
    REQUIRE(unit.solutions.size() == 1);
    CHECK(unit.solutions[0].a == Cyclo(1));

    const EnumerationReport small = enumerate_solutions(10, true);
    CHECK(small.tuples_scanned == 100);
    CHECK(small.uncovered.empty());
    CHECK(small.dichotomy_uncovered.empty());
    CHECK(small.power_none.empty());
    CHECK(small.case2_w1_a4_violations == 0);
    CHECK(small.rationality_mismatches == 0);
    CHECK(small.tau_mismatches == 0);
    CHECK(small.consistent_pairs ==
          small.case_i_m4 + small.case_i_m6 + small.case_ii);
    CHECK_THROWS_AS(enumerate_solutions(0, true), std::domain_error);
    CHECK_THROWS_AS(enumerate_solutions(4, false, 0), std::domain_error);
}

TEST_CASE("census results are independent of worker count") {
    const EnumerationReport seq = enumerate_solutions(6, false, 6, 1);
    const EnumerationReport pool = enumerate_solutions(6, false, 6, 4);
    CHECK(seq.tuples_scanned == pool.tuples_scanned);
    CHECK(seq.sym3_matches == pool.sym3_matches);
    CHECK(seq.case_counts == pool.case_counts);
    CHECK(seq.power_counts == pool.power_counts);
    REQUIRE(seq.solutions.size() == pool.solutions.size());
    for (std::size_t i = 0; i < seq.solutions.size(); ++i) {
        CHECK(seq.solutions[i].a == pool.solutions[i].a);
        CHECK(seq.solutions[i].w == pool.solutions[i].w);
        CHECK(seq.solutions[i].c == pool.solutions[i].c);
        CHECK(seq.solutions[i].wp == pool.solutions[i].wp);
    }
}

TEST_CASE("pair analysis bundles the individual verdicts") {
    const LocalPairAnalysis a = analyze_local_pair(zeta(8), Cyclo(1), zeta(8, 3), Cyclo(1));
    CHECK(a.classification.sym3_match);
    CHECK_FALSE(a.si3_local);
    CHECK_FALSE(a.power_preconditions);
    CHECK(a.rationality == NumberFieldDesc::fixed_field(8, {1, 7}));

    const LocalPairAnalysis b = analyze_local_pair(zeta(4), Cyclo(1), zeta(4), Cyclo(1));
    CHECK(b.si3_local);
    CHECK(b.power_preconditions);
    CHECK(b.power_relation == PowerRelation::a4_eq_w2);
    CHECK(b.rationality == NumberFieldDesc::rationals());
}
