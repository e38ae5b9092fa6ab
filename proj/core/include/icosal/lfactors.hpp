#pragma once

#include "icosal/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace icosal {

/// Local L-factor data: inverse roots plus the residue cardinality q.
struct LocalLFactor {
    UnramifiedParam param;
    long prime_power_q = 2;
};

/// Validates q >= 2.
LocalLFactor local_l_factor(UnramifiedParam param, long prime_power_q);

/**
 * Dirichlet coefficients a_0..a_terms of prod_i (1 - g_i q^{-s})^{-1} as
 * exact values: a_k is the complete homogeneous symmetric function h_k of
 * the inverse roots. Independent of q. a_0 = 1.
 */
std::vector<Cyclo> dirichlet_coeffs(const LocalLFactor& factor, long terms);

/// Outcome of a two-sided factor identity; witness is a differing inverse
/// root when the identity fails.
struct IdentityCheckResult {
    bool holds = false;
    std::optional<Cyclo> witness;
};

/// sym4(p) tensor p  =  sym5(p)  boxplus  sym3(p) twisted by the central value.
/// Requires dimension 2.
IdentityCheckResult check_clebsch_gordon(const UnramifiedParam& p);

/// Lambda^2(sym3(p))  =  (sym4(p) twisted by w)  boxplus  {w^3},  w = central.
/// Requires dimension 2.
IdentityCheckResult check_lambda2_sym3(const UnramifiedParam& p);

/// The degree-6 local comparison: sym5({a, w/a}) versus
/// adjoint({c, wp/c}) tensor {a, w/a} twisted by w^2. All inputs nonzero.
bool check_si3_local(const Cyclo& a, const Cyclo& w, const Cyclo& c, const Cyclo& wp);

/// "(1 - (g) * q^-s)^-1 * ..." rendering for text output.
std::string euler_factor_str(const LocalLFactor& factor);

} // namespace icosal
