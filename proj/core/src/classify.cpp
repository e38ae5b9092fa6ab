#include "icosal/classify.hpp"

#include "icosal/arith.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>

namespace icosal {

namespace {

void require_nonzero(std::initializer_list<const Cyclo*> values, const char* where) {
    for (const Cyclo* v : values) {
        if (v->is_zero()) throw std::domain_error(std::string(where) + ": zero input");
    }
}

bool pair_eq(const Cyclo& x1, const Cyclo& x2, const Cyclo& y1, const Cyclo& y2) {
    return (x1 == y1 && x2 == y2) || (x1 == y2 && x2 == y1);
}

} // namespace

const char* case_label_str(CaseLabel label) {
    switch (label) {
        case CaseLabel::case_1: return "L11B-1";
        case CaseLabel::case_2: return "L11B-2";
        case CaseLabel::case_3: return "L11B-3";
    }
    throw std::logic_error("case_label_str: bad label");
}

ClassificationReport check_sym3_match(const Cyclo& a, const Cyclo& w, const Cyclo& c,
                                      const Cyclo& wp) {
    require_nonzero({&a, &w, &c, &wp}, "check_sym3_match");
    if (w.pow(3) != wp.pow(3))
        throw std::domain_error("check_sym3_match: central cubes differ");

    const Cyclo b = w / a;
    const Cyclo d = wp / c;
    const UnramifiedParam pi({a, b});
    const UnramifiedParam pi_prime({c, d});

    ClassificationReport rep;
    rep.z = w / wp;
    rep.adjoint_isomorphic = multiset_equal(adjoint(pi), adjoint(pi_prime));
    rep.sym3_match = multiset_equal(sym_power(pi, 3), sym_power(pi_prime, 3));
    if (!rep.sym3_match) return rep;

    const Cyclo za = rep.z * a;
    const Cyclo zb = rep.z * b;
    if (pair_eq(c, d, za, zb))
        rep.matched.push_back({CaseLabel::case_1, rep.z, std::nullopt});

    // Cases 2 and 3 differ only in the unit group scanned (mu^4 = 1 versus
    // zeta^5 = 1); the scan records the first unit that matches, trying the
    // unswapped orientation before the swapped one.
    const Cyclo a2 = a * a;
    const Cyclo b2 = b * b;
    for (CaseLabel label : {CaseLabel::case_2, CaseLabel::case_3}) {
        const long unit_order = label == CaseLabel::case_2 ? 4 : 5;
        for (long k = 0; k < unit_order; ++k) {
            const Cyclo u = Cyclo::root_of_unity(unit_order, k);
            const Cyclo ui = Cyclo::root_of_unity(unit_order, mod_norm(-k, unit_order));
            if (pair_eq(c, d, u * za, ui * zb) && a2 == u * w) {
                rep.matched.push_back({label, rep.z, u});
                break;
            }
            if (pair_eq(c, d, u * zb, ui * za) && b2 == u * w) {
                rep.matched.push_back({label, rep.z, u});
                break;
            }
        }
    }
    return rep;
}

const char* power_relation_str(PowerRelation r) {
    switch (r) {
        case PowerRelation::a2_eq_w: return "a2=w";
        case PowerRelation::a4_eq_w2: return "a4=w2";
        case PowerRelation::a6_eq_w3: return "a6=w3";
        case PowerRelation::none: return "none";
    }
    throw std::logic_error("power_relation_str: bad relation");
}

PowerRelation power_relation_of(const Cyclo& a, const Cyclo& w) {
    if (a.pow(2) == w) return PowerRelation::a2_eq_w;
    if (a.pow(4) == w.pow(2)) return PowerRelation::a4_eq_w2;
    if (a.pow(6) == w.pow(3)) return PowerRelation::a6_eq_w3;
    return PowerRelation::none;
}

PowerRelation derive_power_relation(const Cyclo& a, const Cyclo& w, const Cyclo& c,
                                    const Cyclo& wp) {
    require_nonzero({&a, &w, &c, &wp}, "derive_power_relation");
    const UnramifiedParam pi({a, w / a});
    const UnramifiedParam pi_prime({c, wp / c});
    if (!multiset_equal(adjoint(pi), adjoint(pi_prime)))
        throw std::domain_error("derive_power_relation: adjoint parameters differ");
    if (!check_si3_local(a, w, c, wp))
        throw std::domain_error("derive_power_relation: degree-6 comparison fails");
    return power_relation_of(a, w);
}

TrivialCentralResult classify_trivial_central(const Cyclo& a, const Cyclo& c) {
    require_nonzero({&a, &c}, "classify_trivial_central");
    const Cyclo one(1);
    const ClassificationReport rep = check_sym3_match(a, one, c, one);
    if (!rep.sym3_match || !check_si3_local(a, one, c, one)) return {};

    if (rep.adjoint_isomorphic) {
        const PowerRelation r = power_relation_of(a, one);
        if (r == PowerRelation::none) return {};
        const long m = (r == PowerRelation::a6_eq_w3) ? 6 : 4;
        if (a.pow(m) != one) return {};
        const Cyclo ai = a.inverse();
        if (c != a && c != -a && c != ai && c != -ai) return {};
        return {TrivialCentralResult::Case::case_i, m};
    }
    const Cyclo a3 = a.pow(3);
    if ((c == a3 || c.inverse() == a3) && a.pow(10) == one)
        return {TrivialCentralResult::Case::case_ii, 0};
    return {};
}

NumberFieldDesc rationality_field(const UnramifiedParam& p) {
    if (p.dimension() != 2)
        throw std::domain_error("rationality_field: parameter must be 2-dimensional");
    const auto& r = p.inverse_roots();
    return field_of({r[0] + r[1], r[0] * r[1]});
}

UnramifiedParam tau_conjugate(const UnramifiedParam& p) {
    long big = 1;
    for (const Cyclo& g : p.inverse_roots()) big = lcm_long(big, g.conductor());
    if (big % 5 != 0) return p;  // sqrt5 absent: the action is trivial
    if (big % 25 == 0)
        throw std::domain_error("tau_conjugate: joint conductor has no designated lift");

    const long rest = big / 5;
    long k = 0;
    for (long t = 1; t < big; ++t) {
        if (t % 5 == 3 && (rest == 1 || t % rest == 1)) {
            k = t;
            break;
        }
    }
    std::vector<Cyclo> mapped;
    mapped.reserve(p.dimension());
    for (const Cyclo& g : p.inverse_roots()) mapped.push_back(g.galois(k));
    return UnramifiedParam(std::move(mapped));
}

SteinbergComparison steinberg_obstruction() {
    const SteinbergParam sigma = steinberg_standard(1);
    SteinbergParam lhs = steinberg_twist(steinberg_tensor(steinberg_adjoint(sigma), sigma), 2);
    SteinbergParam rhs = steinberg_sym(5, sigma);
    const bool equal = lhs.block_sizes() == rhs.block_sizes();
    return SteinbergComparison{std::move(lhs), std::move(rhs), equal};
}

DihedralAdjointReport dihedral_adjoint_check(long lambda0_order, bool nu_nontrivial) {
    if (!nu_nontrivial)
        throw std::domain_error(
            "dihedral_adjoint_check: nu must be the nontrivial unramified quadratic character");
    if (lambda0_order != 1 && lambda0_order != 2)
        throw std::domain_error("dihedral_adjoint_check: lambda0 must have order 1 or 2");

    const AbstractCharacter nu{2, 1, false};
    DihedralAdjointReport rep;
    for (std::size_t i = 0; i < 2; ++i) {
        const AbstractCharacter lambda0 = i == 0 ? AbstractCharacter{1, 0, false} : nu;
        DihedralBranch& br = rep.branches[i];
        br.lambda0_trivial = lambda0.is_trivial();
        br.ad_parts = {lambda0, char_mul(lambda0, nu), nu};
        br.trivial_multiplicity = 0;
        for (const AbstractCharacter& part : br.ad_parts)
            if (part.is_trivial()) ++br.trivial_multiplicity;
    }
    rep.queried = lambda0_order == 1 ? 0 : 1;
    rep.contradiction = rep.branches[0].trivial_multiplicity > 0 &&
                        rep.branches[1].trivial_multiplicity > 0;
    return rep;
}

RamifiedPSVerdict ramified_ps_constrain(long mu_order, PSRelation relation) {
    if (mu_order < 1)
        throw std::domain_error("ramified_ps_constrain: order must be positive");

    RamifiedPSVerdict v;
    v.mu_order = mu_order;
    v.relation = relation;
    std::vector<long> le, re;
    if (relation == PSRelation::cube) {
        le = {3, -3};
        re = {7, -7};
    } else {
        le = {5, 3, 1, -1, -3, -5};
        re = {3, 1, 1, -1, -1, -3};
    }
    for (long& x : le) x = mod_norm(x, mu_order);
    for (long& x : re) x = mod_norm(x, mu_order);
    std::sort(le.begin(), le.end());
    std::sort(re.begin(), re.end());
    v.allowed = le == re;
    v.lhs_exponents = std::move(le);
    v.rhs_exponents = std::move(re);
    return v;
}

bool arch_galois_check(long m) {
    ArchParam lhs({{3 * m, 0}, {m, 0}, {m, 0}, {-m, 0}, {-m, 0}, {-3 * m, 0}});
    const ArchParam rhs({{5 * m, 0}, {3 * m, 0}, {m, 0}, {-m, 0}, {-3 * m, 0}, {-5 * m, 0}});

    // A common unitary twist shifts every m-exponent by the same integer.
    long sl = 0, sr = 0;
    for (const ArchChar& e : lhs.exponents()) sl += e.m;
    for (const ArchChar& e : rhs.exponents()) sr += e.m;
    if ((sr - sl) % 6 != 0) return false;
    const long shift = (sr - sl) / 6;

    std::vector<ArchChar> shifted = lhs.exponents();
    for (ArchChar& e : shifted) e.m += shift;
    return ArchParam(shifted) == rhs;
}

bool tempered_check(const Rational& t) {
    const ArchParam lhs({{0, 3 * t}, {0, t}, {0, t}, {0, -t}, {0, -t}, {0, -3 * t}});
    const ArchParam rhs({{0, 5 * t}, {0, 3 * t}, {0, t}, {0, -t}, {0, -3 * t}, {0, -5 * t}});
    return lhs == rhs;  // central character pins any twist
}

LocalPairAnalysis analyze_local_pair(const Cyclo& a, const Cyclo& w, const Cyclo& c,
                                     const Cyclo& wp) {
    LocalPairAnalysis out;
    out.classification = check_sym3_match(a, w, c, wp);
    out.si3_local = check_si3_local(a, w, c, wp);
    out.power_preconditions = out.classification.adjoint_isomorphic && out.si3_local;
    if (out.power_preconditions) out.power_relation = power_relation_of(a, w);
    out.rationality = rationality_field(UnramifiedParam({a, w / a}));
    return out;
}

} // namespace icosal
