#include "icosal/lfactors.hpp"

#include <stdexcept>

namespace icosal {
namespace {

// First position where the canonically sorted root lists differ; reports the
// smaller head as the witness.
IdentityCheckResult compare_sides(const UnramifiedParam& lhs, const UnramifiedParam& rhs) {
    if (lhs == rhs) return {true, std::nullopt};
    const auto& a = lhs.inverse_roots();
    const auto& b = rhs.inverse_roots();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return {false, std::min(a[i], b[i])};
    }
    return {false, a.size() > b.size() ? a[n] : b[n]};
}

} // namespace

LocalLFactor local_l_factor(UnramifiedParam param, long prime_power_q) {
    if (prime_power_q < 2)
        throw std::domain_error("local_l_factor: q must be at least 2");
    return LocalLFactor{std::move(param), prime_power_q};
}

std::vector<Cyclo> dirichlet_coeffs(const LocalLFactor& factor, long terms) {
    if (terms < 0) throw std::domain_error("dirichlet_coeffs: terms must be nonnegative");
    std::vector<Cyclo> c(static_cast<std::size_t>(terms) + 1, Cyclo(0));
    c[0] = Cyclo(1);
    // Multiply the geometric series of each root in place; after all roots,
    // c[k] is the complete homogeneous symmetric function h_k.
    for (const Cyclo& g : factor.param.inverse_roots())
        for (long k = 1; k <= terms; ++k) c[k] += g * c[k - 1];
    return c;
}

IdentityCheckResult check_clebsch_gordon(const UnramifiedParam& p) {
    const UnramifiedParam lhs = tensor(sym_power(p, 4), p);
    const UnramifiedParam rhs =
        isobaric_sum(sym_power(p, 5), twist(sym_power(p, 3), p.central()));
    return compare_sides(lhs, rhs);
}

IdentityCheckResult check_lambda2_sym3(const UnramifiedParam& p) {
    const Cyclo& w = p.central();
    const UnramifiedParam lhs = ext_square(sym_power(p, 3));
    const UnramifiedParam rhs =
        isobaric_sum(twist(sym_power(p, 4), w), UnramifiedParam({w.pow(3)}));
    return compare_sides(lhs, rhs);
}

bool check_si3_local(const Cyclo& a, const Cyclo& w, const Cyclo& c, const Cyclo& wp) {
    if (a.is_zero() || w.is_zero() || c.is_zero() || wp.is_zero())
        throw std::domain_error("check_si3_local: inputs must be nonzero");
    const UnramifiedParam pi({a, w / a});
    const UnramifiedParam pi_prime({c, wp / c});
    const UnramifiedParam lhs = sym_power(pi, 5);
    const UnramifiedParam rhs = twist(tensor(adjoint(pi_prime), pi), w * w);
    return multiset_equal(lhs, rhs);
}

std::string euler_factor_str(const LocalLFactor& factor) {
    std::string out;
    for (const Cyclo& g : factor.param.inverse_roots()) {
        if (!out.empty()) out += " * ";
        out += "(1 - (" + g.str() + ") * " + std::to_string(factor.prime_power_q) + "^-s)^-1";
    }
    return out;
}

} // namespace icosal
